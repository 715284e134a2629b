#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wpi/exact_arith.hpp"
#include "wpi/gt_module.hpp"

namespace wpi {

/// A gl_n weight (lambda_1, ..., lambda_n).
struct GlWeight {
  std::vector<Scalar> lambda;

  int n() const { return static_cast<int>(lambda.size()); }
  /// l_i = lambda_i - i + 1.
  std::vector<Scalar> shifted() const;
  bool operator==(const GlWeight&) const = default;
};

/// (-lambda_n, ..., -lambda_1).
GlWeight dual_weight(const GlWeight& w);

/// lambda_i - lambda_j is not an integer or exceeds i - j, for i < j <= n-1.
bool is_good(const GlWeight& w);
bool is_good(const std::vector<GlWeight>& ws);

/// No entry of one weight differs from an entry of a later weight by an
/// integer.
bool is_generic(const std::vector<GlWeight>& ws);

/// anchor + z for integers z in [lo, hi] (a missing side is unbounded),
/// minus `excluded`.
struct IntegerRun {
  Scalar anchor;
  std::optional<long> lo, hi;
  std::set<Scalar> excluded;

  bool contains(const Scalar& x) const;
};

struct IntervalSet {
  std::vector<IntegerRun> runs;

  bool contains(const Scalar& x) const;
  bool bounded() const;
  /// Members of a bounded set in increasing order.  Throws
  /// std::logic_error for unbounded sets.
  std::vector<Scalar> members() const;
};

/// The sets <l_j, l_i>^- and <l_j, l_i>^+ built from the integer chains of
/// l_i, ..., l_j (1-based, i < j).  A chain gives a bounded run only when its
/// values increase from the highest index to the lowest and it reaches j
/// (for -) or i (for +); otherwise it gives a ray.
std::pair<IntervalSet, IntervalSet> interval_sets(const std::vector<Scalar>& l, int i, int j);

/// Sufficient condition for L(lambda) (x) L(mu) to be irreducible.  Throws
/// InputError unless both weights are good and of the same rank.
bool integral_condition(const GlWeight& lambda, const GlWeight& mu);

/// Pulls back the relation-module realization of L(lambda) along
/// t_ij(u) -> delta_ij + E_ij / (u - point).  Basis tableaux are listed by
/// depth (number of simple roots subtracted) up to `depth_cap`; index 0 is
/// the highest vector.
class EvaluationFactor {
 public:
  EvaluationFactor(GlWeight lambda, Scalar point, int depth_cap);

  const GlWeight& weight() const { return lambda_; }
  const Scalar& point() const { return point_; }
  int n() const { return lambda_.n(); }
  int depth_cap() const { return cap_; }
  std::size_t size() const { return basis_.size(); }
  /// Root coordinates kappa with weight = lambda - sum kappa_r alpha_r.
  const std::vector<int>& kappa(std::size_t b) const { return kappa_[b]; }
  int depth(std::size_t b) const { return depth_[b]; }
  const TableauDelta& tableau(std::size_t b) const { return basis_[b]; }
  const std::vector<std::size_t>& at_depth(int d) const { return by_depth_.at(d); }

  /// E_ij on basis vector b.  Throws WindowOverflowError past the depth cap.
  const std::map<std::size_t, Scalar>& E(int i, int j, std::size_t b) const;

 private:
  std::map<std::size_t, Scalar> apply_E(int i, int j, const std::map<std::size_t, Scalar>& v) const;
  std::map<std::size_t, Scalar> compute_E(int i, int j, std::size_t b) const;
  std::size_t index_of(const TableauDelta& z) const;

  GlWeight lambda_;
  Scalar point_;
  int cap_;
  std::unique_ptr<RelationModule> module_;
  std::vector<TableauDelta> basis_;
  std::map<TableauDelta, std::size_t> index_;
  std::vector<std::vector<int>> kappa_;
  std::vector<int> depth_;
  std::vector<std::vector<std::size_t>> by_depth_;
  mutable std::map<std::tuple<int, int, std::size_t>, std::map<std::size_t, Scalar>> cache_;
};

using TensorKey = std::vector<std::size_t>;
using TensorVector = std::map<TensorKey, Scalar>;
/// Coefficients of u^0, u^-1, ... of a vector-valued series.
using SeriesVector = std::vector<TensorVector>;

/// Tensor product of evaluation factors over Y(gl_n) through the coproduct
/// t_ij(u) -> sum_a t_ia(u) (x) t_aj(u).  The basis is the pure tensors of
/// total depth <= `depth`.  Not thread-safe (actions are memoized).
class TensorModule {
 public:
  TensorModule(const std::vector<GlWeight>& weights, const std::vector<Scalar>& points, int depth);
  explicit TensorModule(std::vector<std::shared_ptr<const EvaluationFactor>> factors, int depth);

  int n() const { return factors_.front()->n(); }
  int depth() const { return depth_; }
  std::size_t factor_count() const { return factors_.size(); }
  const EvaluationFactor& factor(std::size_t k) const { return *factors_[k]; }
  std::shared_ptr<const EvaluationFactor> factor_ptr(std::size_t k) const { return factors_[k]; }

  const std::vector<TensorKey>& basis() const { return basis_; }
  std::vector<int> kappa(const TensorKey& key) const;
  int key_depth(const TensorKey& key) const;
  TensorKey highest() const { return TensorKey(factors_.size(), 0); }
  /// Every kappa with |kappa| <= d that has a nonzero weight space.
  std::vector<std::vector<int>> weights(int d) const;
  std::vector<TensorKey> weight_space(const std::vector<int>& kappa) const;

  /// t_ij(u - shift) applied to a series, through u^{-order}.
  SeriesVector apply_t(int i, int j, const Scalar& shift, const SeriesVector& v, int order) const;
  /// The coefficient t_ij^{(r)}.
  TensorVector apply_coefficient(int i, int j, int r, const TensorVector& v) const;
  /// sum_sigma sgn(sigma) t_{a_s(1) b_1}(u) ... t_{a_s(k) b_k}(u-k+1) v.
  SeriesVector quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols,
                             const TensorVector& v, int order) const;

 private:
  const SeriesVector& t_on_key(int i, int j, const Scalar& shift, const TensorKey& key,
                               int order) const;

  std::vector<std::shared_ptr<const EvaluationFactor>> factors_;
  int depth_;
  std::vector<TensorKey> basis_;
  mutable std::map<std::tuple<int, int, Scalar, TensorKey>, SeriesVector> cache_;
};

SeriesVector series_of(const TensorVector& v, int order);
TensorVector add(const TensorVector& a, const TensorVector& b, const Scalar& scale = 1);
SeriesVector add(const SeriesVector& a, const SeriesVector& b, const Scalar& scale = 1);
/// Pure tensor of two vectors on disjoint factor ranges (keys concatenated).
TensorVector tensor(const TensorVector& a, const TensorVector& b);

struct StructureCheck {
  std::string name;
  long checked = 0;
  std::optional<std::string> failure;
  bool passed() const { return !failure && checked > 0; }
};

/// [t_ij^(r+1), t_kl^(s)] - [t_ij^(r), t_kl^(s+1)] = t_kj^(r) t_il^(s) - t_kj^(s) t_il^(r)
/// on every basis vector of depth <= max_depth, 0 <= r, s <= max_superscript.
StructureCheck check_rtt(const TensorModule& m, int max_depth, int max_superscript);
/// Swapping two row or column indices negates every minor of size `size`.
StructureCheck check_minor_antisymmetry(const TensorModule& m, int size, int max_depth, int order);
/// Minors of a two-factor module against sums of products of single-factor
/// minors.
StructureCheck check_coproduct_minors(const TensorModule& m, int size, int max_depth, int order);
/// a_m(u) on the highest vector and a_n(u) on every vector of depth
/// <= max_depth act by the scalar prod_k prod_{i<=m} (1 + lambda_i / (u - a_k - i + 1)).
StructureCheck check_drinfeld_a(const TensorModule& m, int max_depth, int order);

/// The series the highest vector of m is multiplied by under a_m(u).
InvSeries predicted_a_series(const TensorModule& m, int size, int order);

/// Basis of the null space of an exact matrix, by fraction-free elimination.
std::vector<std::vector<Scalar>> exact_nullspace(const std::vector<std::vector<Scalar>>& rows,
                                                 std::size_t columns);

/// Vectors of the weight space kappa killed by every b_m(u) through u^{-order}.
std::vector<TensorVector> find_singular_vectors(const TensorModule& m, const std::vector<int>& kappa,
                                                int order);

/// Series order used for singular-vector kernels: n * depth + n.
int default_singular_order(int n, int depth);

struct SingularCount {
  std::vector<int> kappa;
  int depth = 0;
  std::size_t dimension = 0;
  std::size_t singular = 0;
};

/// Singular-vector counts on every weight space of depth <= depth.
std::vector<SingularCount> singular_profile(const TensorModule& m, int depth, int order = 0);
/// Only the highest line is singular.
bool only_top_singular(const std::vector<SingularCount>& profile);

}  // namespace wpi
