#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wpi/exact_arith.hpp"
#include "wpi/pyramid.hpp"

namespace wpi {

/// Triple (k,i,j): layer k, row i, position j, with 1 <= j <= i <= n and
/// 1 <= k <= p_j.
struct TriIndex {
  int k = 1;
  int i = 1;
  int j = 1;
  auto operator<=>(const TriIndex&) const = default;
};

std::string to_string(const TriIndex& t);

bool is_valid(const Pyramid& pi, const TriIndex& t);
/// All triples, grouped by row, then position, then layer.
std::vector<TriIndex> triples(const Pyramid& pi);
std::vector<TriIndex> row_triples(const Pyramid& pi, int i);
/// Position of t in triples(pi).
std::size_t triple_position(const Pyramid& pi, const TriIndex& t);
std::size_t triple_count(const Pyramid& pi);

/// Integer shift of the non-top entries.  Dense over triples(pi); the
/// entries of row n are always zero.
class TableauDelta {
 public:
  TableauDelta() = default;
  explicit TableauDelta(const Pyramid& pi);

  int operator[](std::size_t pos) const { return z_[pos]; }
  int get(const Pyramid& pi, const TriIndex& t) const;
  /// Throws InputError for a top-row or invalid triple.
  void set(const Pyramid& pi, const TriIndex& t, int value);
  void add_at(std::size_t pos, int value) { z_[pos] += value; }

  std::size_t size() const { return z_.size(); }
  const std::vector<int>& data() const { return z_; }
  int sup_norm() const;
  bool is_zero() const;

  TableauDelta operator+(const TableauDelta& o) const;
  TableauDelta operator-() const;
  auto operator<=>(const TableauDelta&) const = default;

  static TableauDelta unit(const Pyramid& pi, const TriIndex& t, int sign = 1);

 private:
  std::vector<int> z_;
};

/// Symbolic entry: some value in the residue class `cls` plus `offset`.
/// Entries of different classes never differ by an integer.
struct Entry {
  std::string cls;
  long offset = 0;
  bool operator==(const Entry&) const = default;
};

/// Gelfand-Tsetlin tableau in symbolic form.
class Tableau {
 public:
  Tableau() = default;
  Tableau(Pyramid pi, std::vector<Entry> entries);

  /// Pinned classes from exact values (class "=frac(v)", offset floor(v)).
  static Tableau from_values(const Pyramid& pi, const std::vector<Scalar>& values);

  const Pyramid& pyramid() const { return pi_; }
  const Entry& at(const TriIndex& t) const;
  const Entry& at(std::size_t pos) const { return entries_[pos]; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// a - b when integral.
  std::optional<long> integer_difference(const TriIndex& a, const TriIndex& b) const;
  std::set<std::string> classes() const;

  bool operator==(const Tableau&) const = default;

 private:
  Pyramid pi_;
  std::vector<Entry> entries_;
};

Tableau shift(const Tableau& l, const TableauDelta& d);

/// Tableau with exact scalar entries, indexed like triples(pi).
struct ValuedTableau {
  Pyramid pyramid;
  std::vector<Scalar> values;

  const Scalar& at(const TriIndex& t) const {
    return values[triple_position(pyramid, t)];
  }
};

ValuedTableau instantiate(const Tableau& l, const GenericAssignment& g);
ValuedTableau shift(const ValuedTableau& l, const TableauDelta& d);

bool is_noncritical(const ValuedTableau& l);
/// gl_n weight: w_k = sum_i l_{ki} - sum_i l_{k-1,i} + k - 1.
std::vector<Scalar> weight(const ValuedTableau& l);
/// l_{ri}(u) = prod_k (u + l_{ri}^{(k)}).
UniPoly row_polynomial(const ValuedTableau& l, int r, int i);
bool is_standard(const ValuedTableau& l);

}  // namespace wpi
