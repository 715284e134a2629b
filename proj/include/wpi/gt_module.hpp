#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wpi/exact_arith.hpp"
#include "wpi/relations.hpp"
#include "wpi/tableau.hpp"

namespace wpi {

using ModuleVector = std::map<TableauDelta, Scalar>;
using Terms = std::vector<std::pair<TableauDelta, Scalar>>;

struct GeneratorSymbol {
  enum class Family { d, dprime, e, f, A, B, C };
  Family family = Family::d;
  int row = 1;
  int superscript = 1;
  auto operator<=>(const GeneratorSymbol&) const = default;
};

std::string to_string(const GeneratorSymbol& g);

/// V_C([l]) with the seed instantiated once.  Basis tableaux are named by
/// their shift from the seed; all operations are lazy in the basis.
class RelationModule {
 public:
  /// Throws PreconditionError if the seed does not satisfy c.
  RelationModule(RelationSet c, Tableau seed, GenericAssignment g);

  const RelationSet& relations() const { return c_; }
  const Pyramid& pyramid() const { return c_.pyramid(); }
  const Tableau& seed() const { return seed_; }
  const GenericAssignment& assignment() const { return g_; }

  /// Whether seed + z satisfies the relations.
  bool contains(const TableauDelta& z) const;
  ValuedTableau values_at(const TableauDelta& z) const;

  /// Coefficient-level actions on one basis tableau.  Targets violating the
  /// relations are dropped; zero coefficients are dropped.
  Terms e_terms(const TableauDelta& z, int r, int t) const;
  Terms f_terms(const TableauDelta& z, int r, int t) const;
  /// d_r(u) and its inverse series on seed + z, through u^{-order}.
  InvSeries d_series(const TableauDelta& z, int r, int order) const;
  InvSeries dprime_series(const TableauDelta& z, int r, int order) const;
  UniPoly a_eigenvalue(const TableauDelta& z, int r) const;
  Terms bc_terms(const TableauDelta& z, int r, const Scalar& u0, bool raising) const;

 private:
  struct Edge {
    std::size_t g, s;
    long need;
  };
  // coefficient of the (r, position) term without the u-dependent factor
  Scalar interpolation_weight(const ValuedTableau& v, int r, const TriIndex& t,
                              int neighbour_row) const;

  RelationSet c_;
  Tableau seed_;
  GenericAssignment g_;
  std::vector<Edge> edges_;
  std::vector<long> offsets_;
  std::vector<Scalar> base_values_;
};

/// Members of V_C([l]) within sup-distance `radius` of the seed.
class BasisWindow {
 public:
  BasisWindow(const RelationModule& module, int radius);

  const RelationModule& module() const { return *module_; }
  int radius() const { return radius_; }
  const std::vector<TableauDelta>& members() const { return members_; }
  bool in_box(const TableauDelta& z) const { return z.sup_norm() <= radius_; }
  bool is_member(const TableauDelta& z) const;

 private:
  const RelationModule* module_;
  int radius_;
  std::vector<TableauDelta> members_;
  std::set<TableauDelta> member_set_;
};

/// Convenience wrapper: instantiates `l` with seed 0 and enumerates.
/// Throws PreconditionError if l does not satisfy c.
std::vector<TableauDelta> enumerate_basis(const RelationSet& c, const Tableau& l, int radius);

/// Diagonal action of A_r(u): eigenvalue per member.
std::map<TableauDelta, UniPoly> act_A(const BasisWindow& w, int r);

/// B_r(u0) (raising) or C_r(u0) (lowering) on v.  Throws
/// WindowOverflowError if a nonzero term leaves the window.
ModuleVector act_BC_at(const BasisWindow& w, int r, const Scalar& u0, bool raising,
                       const ModuleVector& v);

/// d, d', e or f with a superscript.  e superscripts below the minimal
/// degree throw InputError.
ModuleVector act_series(const BasisWindow& w, const GeneratorSymbol& g, const ModuleVector& v);

struct FamilyReport {
  std::string family;
  long checked = 0;
  long skipped = 0;
  long violations = 0;
};

struct Violation {
  int instantiation = 0;
  std::string family;
  std::string instance;
  TableauDelta at;
  TableauDelta target;
  Scalar coefficient;
};

struct VerificationReport {
  std::vector<FamilyReport> families;
  std::optional<Violation> first_violation;
  int instantiations = 0;
  int radius = 0;
  int budget = 0;

  bool passed() const { return !first_violation.has_value(); }
  /// Some family has instances but none could be evaluated inside the window.
  bool window_overflow() const;
};

struct VerifyOptions {
  int radius = 2;
  int budget = 3;
  int instantiations = 3;
  std::uint64_t seed = 0;
  bool stop_at_first = false;
  int threads = 0;  // 0: default_thread_count()
};

/// Checks every defining relation with superscripts up to the budget at
/// every window tableau, for several instantiations of the free classes.
/// A relation instance at a tableau is skipped when one of its terms leaves
/// the window.
VerificationReport verify_defining_relations(const RelationSet& c, const Tableau& l,
                                             const VerifyOptions& opt = {});

/// Defining-relation verdict over sampled seeds, one per possible order of
/// the top row: tightly packed for instantiation 0 (plus the unordered tight
/// seed), spread for later ones.  Unsatisfiable sets pass vacuously.
VerificationReport oracle_check(const RelationSet& c, const VerifyOptions& opt = {});

/// c and maximal_set(l) cut out the same tableaux l + z.  Relations among the
/// fixed top-row entries of l are taken as given.
bool is_irreducible(const RelationSet& c, const Tableau& l);

/// Members reachable from `start` by e^{(t)}, f^{(t)} with t <= budget,
/// splitting each image into its basis summands.
std::set<TableauDelta> cyclicity_probe(const BasisWindow& w, const TableauDelta& start,
                                       int budget);

/// Every start strictly inside the window reaches every member.
bool probe_irreducible(const BasisWindow& w, int budget);

/// min(hardware threads, WPI_THREADS if set), at least 1.
int default_thread_count();

/// prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
mpz_class weyl_dimension(const std::vector<long>& lambda);

/// Highest tableau of a gl_n weight: l_{ij} = lambda_j - j + 1 in every row.
Tableau highest_tableau(const std::vector<Scalar>& lambda);

}  // namespace wpi
