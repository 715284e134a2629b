#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wpi/pyramid.hpp"
#include "wpi/tableau.hpp"

namespace wpi {

/// greater >= lesser (strict == false) or greater > lesser (strict == true),
/// both in the sense of integer differences.
struct Relation {
  TriIndex greater;
  TriIndex lesser;
  bool strict = false;
  auto operator<=>(const Relation&) const = default;
};

std::string to_string(const Relation& r);

/// Whether r is one of the allowed patterns: a weak edge from row i down to
/// row i-1, a strict edge from row i-1 up to row i, or a weak edge between
/// distinct positions of the top row.
bool is_allowed(const Pyramid& pi, const Relation& r);
/// Every allowed relation, sorted.
std::vector<Relation> all_relations(const Pyramid& pi);

class RelationSet {
 public:
  RelationSet() = default;
  /// Throws InputError for disallowed relations or a directed cycle among
  /// top-row relations.
  RelationSet(Pyramid pi, std::set<Relation> edges);

  /// The standard set: (k,i+1,j) >= (k,i,j) > (k,i+1,j+1).
  static RelationSet standard(const Pyramid& pi);

  const Pyramid& pyramid() const { return pi_; }
  const std::set<Relation>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }
  std::size_t size() const { return edges_.size(); }

  bool operator==(const RelationSet&) const = default;

 private:
  Pyramid pi_;
  std::set<Relation> edges_;
};

std::set<TriIndex> vertices(const RelationSet& c);

struct Component {
  std::set<TriIndex> triples;
  std::set<Relation> edges;
  bool operator==(const Component&) const = default;
};

/// Connected components, ordered by least triple.
std::vector<Component> decompose(const RelationSet& c);

/// Reachability along edges greater -> lesser.  `weak(a,b)` is a ⪰ b and
/// `strict(a,b)` is a ≻ b; both are false for triples outside the set.
class ClosureOrder {
 public:
  explicit ClosureOrder(const RelationSet& c);

  bool weak(const TriIndex& a, const TriIndex& b) const;
  bool strict(const TriIndex& a, const TriIndex& b) const;
  bool comparable(const TriIndex& a, const TriIndex& b) const {
    return weak(a, b) || weak(b, a);
  }
  /// False when some triple is strictly above itself (no tableau satisfies
  /// the set).
  bool consistent() const;
  const std::vector<TriIndex>& nodes() const { return nodes_; }

 private:
  int index(const TriIndex& t) const;
  std::vector<TriIndex> nodes_;
  std::vector<std::vector<int>> reach_;  // 0 none, 1 weak, 2 strict
};

ClosureOrder closure_order(const RelationSet& c);

/// Every edge holds with integer differences, and any two entries of one row
/// that differ by an integer lie in a common component.
bool satisfies(const RelationSet& c, const Tableau& l);

/// Some tableau satisfies the edges (no strict cycle).
bool is_satisfiable(const RelationSet& c);

/// No tableau satisfying the set can have two equal entries in a row below
/// the top.  Unsatisfiable sets are noncritical vacuously.
bool is_noncritical_set(const RelationSet& c);

struct CrossWitness {
  Relation down;  // (k,i,j) > (k',i+1,t)
  Relation up;    // (k'',i+1,s) >= (k''',i,r)
};

/// Rows below the top are ordered by ≻_C; for the top row, `s` can sit before
/// `t` unless t ⪰_C s.
std::optional<CrossWitness> has_cross(const RelationSet& c, const Component& comp);

bool is_pre_admissible(const RelationSet& c);

struct AdmissibilityCertificate {
  bool admissible = false;
  /// "unsatisfiable", "ok", "critical", "order-cycle", "cross", "bridge".
  std::string reason;
  std::vector<TriIndex> triples;
  std::vector<Relation> edges;
};

AdmissibilityCertificate is_admissible(const RelationSet& c);

/// Unique equivalent set without implied edges.  Throws PreconditionError on
/// a critical set.
RelationSet reduce(const RelationSet& c);

/// Whether c1 implies every relation of c2 (every tableau satisfying c1
/// satisfies c2).
bool implies(const RelationSet& c1, const RelationSet& c2);
bool equivalent(const RelationSet& c1, const RelationSet& c2);

bool is_extremal(const RelationSet& c, const TriIndex& t);
/// Drops every edge at t.  Throws PreconditionError unless t is maximal or
/// minimal.
RelationSet rr_remove(const RelationSet& c, const TriIndex& t);

/// sigma maps positions of one row i: the triple (k,i,j) becomes
/// sigma[(k,j)].  Pairs missing from sigma are fixed.
struct RowPermutation {
  int row = 1;
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> mapping;
};
RelationSet permute(const RelationSet& c, const RowPermutation& sigma);

/// Reduced set of every allowed relation held by l.  Throws
/// CriticalTableauError when two same-row entries below the top coincide and
/// PreconditionError if l does not satisfy the result.
RelationSet maximal_set(const Tableau& l);

/// A tableau satisfying c.  variant 0 packs entries as tightly as possible,
/// larger variants add pseudo-random slack from `seed`.  Triples outside
/// the set get their own free classes.  Returns nothing when c is
/// unsatisfiable.
std::optional<Tableau> sample_satisfying_tableau(const RelationSet& c, int variant,
                                                 std::uint64_t seed);

/// Strict orders of the top-row triples of each component that the closure
/// leaves possible, concatenated over components (product of the choices).
/// Components with fewer than two top-row triples contribute nothing.
std::vector<std::vector<TriIndex>> top_row_arrangements(const RelationSet& c);

/// Like sample_satisfying_tableau, with consecutive entries of `top_order`
/// that share a component forced strictly decreasing.  Throws InputError if
/// the order contradicts c.
std::optional<Tableau> sample_arranged_tableau(const RelationSet& c,
                                               const std::vector<TriIndex>& top_order,
                                               int variant, std::uint64_t seed);

}  // namespace wpi
