#include <random>

#include "doctest.h"
#include "wpi/errors.hpp"
#include "wpi/relations.hpp"

using namespace wpi;

namespace {

const Pyramid gl2 = Pyramid::one_column(2);
const Pyramid gl3 = Pyramid::one_column(3);

Relation ge(TriIndex a, TriIndex b) { return {a, b, false}; }
Relation gt(TriIndex a, TriIndex b) { return {a, b, true}; }

Tableau gl2_tableau(long x, long a, long b) {
  Tableau t = Tableau::from_values(gl2, {Scalar(x), Scalar(a), Scalar(b)});
  return t;
}

// diamond {(1,2,1) > (1,3,1) >= (1,2,2), (1,2,1) >= (1,1,1) > (1,2,2)}
RelationSet diamond() {
  return RelationSet(gl3, {gt({1, 2, 1}, {1, 3, 1}), ge({1, 3, 1}, {1, 2, 2}),
                           ge({1, 2, 1}, {1, 1, 1}), gt({1, 1, 1}, {1, 2, 2})});
}

RelationSet random_set(std::mt19937_64& rng, const Pyramid& pi, int max_edges) {
  auto all = all_relations(pi);
  for (;;) {
    std::set<Relation> s;
    int m = static_cast<int>(rng() % (max_edges + 1));
    while (static_cast<int>(s.size()) < m) s.insert(all[rng() % all.size()]);
    try {
      return RelationSet(pi, s);
    } catch (const InputError&) {
    }
  }
}

// random integral tableau, entries in one class
Tableau random_integral(std::mt19937_64& rng, const Pyramid& pi, int spread) {
  std::vector<Entry> e;
  for (std::size_t a = 0; a < triple_count(pi); ++a)
    e.push_back({"=0", static_cast<long>(rng() % (2 * spread + 1)) - spread});
  return Tableau(pi, e);
}

}  // namespace

TEST_CASE("allowed relations") {
  CHECK(all_relations(gl2).size() == 6);
  CHECK(all_relations(Pyramid({1, 2})).size() == 10);
  CHECK(is_allowed(gl3, ge({1, 3, 1}, {1, 3, 3})));
  CHECK(!is_allowed(gl3, ge({1, 2, 1}, {1, 2, 2})));
  CHECK(!is_allowed(gl3, gt({1, 3, 1}, {1, 2, 1})));
  CHECK(!is_allowed(gl3, ge({1, 1, 1}, {1, 2, 1})));
  CHECK_THROWS_AS(RelationSet(gl2, {ge({1, 2, 1}, {1, 2, 2}), ge({1, 2, 2}, {1, 2, 1})}),
                  InputError);
}

TEST_CASE("vertices and components") {
  CHECK(vertices(RelationSet(gl2, {})).empty());
  CHECK(vertices(RelationSet(gl2, {ge({1, 2, 1}, {1, 1, 1})})) ==
        std::set<TriIndex>{{1, 1, 1}, {1, 2, 1}});
  CHECK(vertices(RelationSet::standard(gl2)) == std::set<TriIndex>{{1, 1, 1}, {1, 2, 1}, {1, 2, 2}});

  RelationSet two(gl3, {ge({1, 3, 1}, {1, 2, 1}), gt({1, 1, 1}, {1, 2, 2})});
  CHECK(decompose(two).size() == 2);
  RelationSet chain(gl3, {ge({1, 3, 1}, {1, 2, 1}), ge({1, 2, 1}, {1, 1, 1})});
  CHECK(decompose(chain).size() == 1);
  CHECK(decompose(RelationSet::standard(gl3)).size() == 1);
  // one chain per layer
  CHECK(decompose(RelationSet::standard(Pyramid({2, 2}))).size() == 2);
}

TEST_CASE("decompose is a partition") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    RelationSet c = random_set(rng, gl3, 6);
    auto comps = decompose(c);
    std::size_t edges = 0;
    for (const auto& comp : comps) {
      edges += comp.edges.size();
      RelationSet sub(gl3, comp.edges);
      auto again = decompose(sub);
      REQUIRE(again.size() == 1);
      CHECK(again[0] == comp);
    }
    CHECK(edges == c.size());
  }
}

TEST_CASE("satisfies") {
  CHECK(satisfies(RelationSet(gl2, {}),
                  Tableau(gl2, {{"a", 0}, {"b", 0}, {"c", 0}})));
  CHECK(!satisfies(RelationSet(gl2, {ge({1, 2, 1}, {1, 1, 1})}), gl2_tableau(3, 2, -1)));
  CHECK(satisfies(RelationSet::standard(gl2), gl2_tableau(0, 2, -1)));
  CHECK(!satisfies(RelationSet::standard(gl2), gl2_tableau(-1, 2, -1)));
  // integer-related top entries outside one component
  CHECK(!satisfies(RelationSet(gl2, {}), gl2_tableau(0, 2, -1)));
}

TEST_CASE("closure order") {
  RelationSet one(gl2, {ge({1, 2, 1}, {1, 1, 1})});
  ClosureOrder o1(one);
  CHECK(o1.weak({1, 2, 1}, {1, 1, 1}));
  CHECK(!o1.strict({1, 2, 1}, {1, 1, 1}));
  ClosureOrder o2(RelationSet::standard(gl2));
  CHECK(o2.strict({1, 2, 1}, {1, 2, 2}));
  ClosureOrder o3(RelationSet::standard(gl3));
  CHECK(o3.strict({1, 3, 1}, {1, 3, 2}));
  CHECK(!o3.weak({1, 3, 2}, {1, 3, 1}));
}

TEST_CASE("noncritical sets") {
  CHECK(is_noncritical_set(RelationSet::standard(gl3)));
  CHECK(is_noncritical_set(RelationSet::standard(Pyramid({1, 2, 2}))));
  CHECK(!is_noncritical_set(RelationSet(gl3, {ge({1, 3, 1}, {1, 2, 1}), ge({1, 3, 1}, {1, 2, 2})})));
  CHECK(is_noncritical_set(RelationSet(gl3, {})));
}

TEST_CASE("crosses") {
  RelationSet s = RelationSet::standard(gl3);
  for (const auto& comp : decompose(s)) CHECK(!has_cross(s, comp));
  // (1,2,1) > (1,3,2) and (1,3,1) >= (1,2,2), tied together below
  RelationSet x(gl3, {gt({1, 2, 1}, {1, 3, 2}), ge({1, 3, 1}, {1, 2, 2}),
                      ge({1, 2, 1}, {1, 1, 1}), gt({1, 1, 1}, {1, 2, 2})});
  auto comps = decompose(x);
  REQUIRE(comps.size() == 1);
  auto w = has_cross(x, comps[0]);
  REQUIRE(w);
  CHECK(w->down == gt({1, 2, 1}, {1, 3, 2}));
  CHECK(w->up == ge({1, 3, 1}, {1, 2, 2}));
  CHECK(!is_pre_admissible(x));
  CHECK(is_admissible(x).reason == "cross");
  RelationSet single(gl3, {gt({1, 2, 1}, {1, 3, 2})});
  CHECK(!has_cross(single, decompose(single)[0]));
}

TEST_CASE("pre-admissibility") {
  CHECK(is_pre_admissible(RelationSet::standard(gl3)));
  // two row-2 entries both below (1,3,1) may coincide
  CHECK(!is_pre_admissible(RelationSet(gl3, {ge({1, 3, 1}, {1, 2, 1}), ge({1, 3, 1}, {1, 2, 2})})));
  // the order within a row is read up to relabelling positions, so the
  // standard set with row 2 swapped stays pre-admissible
  RowPermutation swap{2, {{{1, 1}, {1, 2}}, {{1, 2}, {1, 1}}}};
  CHECK(is_pre_admissible(permute(RelationSet::standard(gl3), swap)));
}

TEST_CASE("admissibility examples") {
  auto s = is_admissible(RelationSet::standard(gl3));
  CHECK(s.admissible);
  CHECK(s.reason == "ok");
  CHECK(is_admissible(RelationSet::standard(Pyramid({1, 2, 2}))).admissible);
  RelationSet p1(gl3, {ge({1, 3, 2}, {1, 2, 2}), gt({1, 2, 1}, {1, 3, 2})});
  auto c1 = is_admissible(p1);
  CHECK(!c1.admissible);
  CHECK(c1.reason == "bridge");
  CHECK(c1.triples == std::vector<TriIndex>{{1, 2, 1}, {1, 2, 2}});
  RelationSet p2(gl3, {ge({1, 2, 1}, {1, 1, 1}), gt({1, 1, 1}, {1, 2, 2})});
  CHECK(!is_admissible(p2).admissible);
  CHECK(is_admissible(diamond()).admissible);
  CHECK(is_admissible(RelationSet(gl3, {})).admissible);
  // (iii): a single strict edge
  CHECK(is_admissible(RelationSet(gl3, {gt({1, 2, 1}, {1, 3, 2})})).admissible);
  // unsatisfiable: (1,2,1) >= (1,1,1) > (1,2,1)
  auto u = is_admissible(RelationSet(gl2, {ge({1, 2, 1}, {1, 1, 1}), gt({1, 1, 1}, {1, 2, 1})}));
  CHECK(u.admissible);
  CHECK(u.reason == "unsatisfiable");
}

TEST_CASE("reduce") {
  RelationSet s = RelationSet::standard(gl3);
  CHECK(reduce(s) == s);
  RelationSet top(gl3, {ge({1, 3, 1}, {1, 3, 3}), ge({1, 3, 1}, {1, 3, 2}), ge({1, 3, 2}, {1, 3, 3})});
  CHECK(reduce(top) == RelationSet(gl3, {ge({1, 3, 1}, {1, 3, 2}), ge({1, 3, 2}, {1, 3, 3})}));
  CHECK(reduce(reduce(top)) == reduce(top));
  CHECK_THROWS_AS(reduce(RelationSet(gl3, {ge({1, 3, 1}, {1, 2, 1}), ge({1, 3, 1}, {1, 2, 2})})),
                  PreconditionError);
}

TEST_CASE("reduce laws on sampled sets") {
  std::mt19937_64 rng(2);
  int pairs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Pyramid& pi = trial % 2 ? gl3 : gl2;
    RelationSet c = random_set(rng, pi, 6);
    if (!is_noncritical_set(c)) continue;
    RelationSet r = reduce(c);
    CHECK(reduce(r) == r);
    CHECK(equivalent(c, r));
    for (int k = 0; k < 20; ++k) {
      Tableau l = random_integral(rng, pi, 3);
      CHECK(satisfies(c, l) == satisfies(r, l));
      ++pairs;
    }
  }
  CHECK(pairs >= 500);
}

TEST_CASE("rr_remove") {
  RelationSet chain(gl3, {ge({1, 3, 1}, {1, 2, 1}), ge({1, 2, 1}, {1, 1, 1})});
  CHECK(rr_remove(chain, {1, 3, 1}) == RelationSet(gl3, {ge({1, 2, 1}, {1, 1, 1})}));
  CHECK_THROWS_AS(rr_remove(chain, {1, 2, 1}), PreconditionError);
  CHECK_THROWS_AS(rr_remove(chain, {1, 2, 2}), PreconditionError);
  RelationSet one(gl2, {ge({1, 2, 1}, {1, 1, 1})});
  CHECK(rr_remove(one, {1, 1, 1}).empty());
  CHECK(rr_remove(RelationSet::standard(gl2), {1, 2, 2}) == one);
}

TEST_CASE("rr_remove keeps admissibility") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    RelationSet c = random_set(rng, gl3, 6);
    if (!is_admissible(c).admissible) continue;
    for (const auto& t : vertices(c))
      if (is_extremal(c, t)) CHECK(is_admissible(rr_remove(c, t)).admissible);
  }
}

TEST_CASE("permute") {
  RelationSet s = RelationSet::standard(gl3);
  RowPermutation id{2, {}};
  CHECK(permute(s, id) == s);
  RowPermutation swap{2, {{{1, 1}, {1, 2}}, {{1, 2}, {1, 1}}}};
  CHECK(permute(permute(s, swap), swap) == s);
  CHECK(is_admissible(permute(s, swap)).admissible);
  CHECK_THROWS_AS(permute(s, RowPermutation{2, {{{1, 1}, {1, 3}}}}), InputError);
  // layers of a two-column row
  Pyramid p22({2, 2});
  RelationSet one(p22, {ge({1, 2, 1}, {1, 1, 1})});
  RowPermutation layers{1, {{{1, 1}, {2, 1}}, {{2, 1}, {1, 1}}}};
  RelationSet moved = permute(one, layers);
  CHECK(moved == RelationSet(p22, {ge({1, 2, 1}, {2, 1, 1})}));
  CHECK(is_admissible(moved).admissible);
}

TEST_CASE("admissibility is invariant under row permutations") {
  std::mt19937_64 rng(4);
  std::vector<RowPermutation> perms;
  perms.push_back({2, {{{1, 1}, {1, 2}}, {{1, 2}, {1, 1}}}});
  perms.push_back({3, {{{1, 1}, {1, 2}}, {{1, 2}, {1, 1}}}});
  perms.push_back({3, {{{1, 1}, {1, 2}}, {{1, 2}, {1, 3}}, {{1, 3}, {1, 1}}}});
  perms.push_back({3, {{{1, 1}, {1, 3}}, {{1, 3}, {1, 1}}}});
  for (int trial = 0; trial < 400; ++trial) {
    RelationSet c = random_set(rng, gl3, 6);
    bool a = is_admissible(c).admissible;
    for (const auto& p : perms) CHECK(is_admissible(permute(c, p)).admissible == a);
  }
}

TEST_CASE("maximal sets") {
  Tableau generic(gl2, {{"a", 0}, {"b", 0}, {"c", 0}});
  CHECK(maximal_set(generic).empty());
  CHECK(maximal_set(gl2_tableau(0, 2, -1)) == RelationSet::standard(gl2));
  CHECK(maximal_set(gl2_tableau(5, 2, -1)) ==
        RelationSet(gl2, {gt({1, 1, 1}, {1, 2, 1}), ge({1, 2, 1}, {1, 2, 2})}));
  Tableau crit = Tableau::from_values(gl3, {Scalar(0), Scalar(1), Scalar(1), Scalar(3), Scalar(1), Scalar(-2)});
  CHECK_THROWS_AS(maximal_set(crit), CriticalTableauError);
}

TEST_CASE("maximal sets imply every held relation") {
  std::mt19937_64 rng(6);
  int done = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Pyramid& pi = trial % 2 ? gl3 : Pyramid({1, 2});
    Tableau l = random_integral(rng, pi, 4);
    RelationSet m;
    try {
      m = maximal_set(l);
    } catch (const CriticalTableauError&) {
      continue;
    } catch (const PreconditionError&) {
      continue;
    }
    ++done;
    CHECK(satisfies(m, l));
    ClosureOrder order(m);
    for (const auto& r : all_relations(pi)) {
      auto d = l.integer_difference(r.greater, r.lesser);
      if (!d || *d < (r.strict ? 1 : 0)) continue;
      if (r.strict)
        CHECK(order.strict(r.greater, r.lesser));
      else if (*d == 0)
        CHECK(order.comparable(r.greater, r.lesser));
      else
        CHECK(order.weak(r.greater, r.lesser));
    }
  }
  CHECK(done > 100);
}

TEST_CASE("sampled tableaux satisfy their set") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    RelationSet c = random_set(rng, trial % 2 ? gl3 : Pyramid({1, 2, 2}), 6);
    for (int v = 0; v < 3; ++v) {
      auto l = sample_satisfying_tableau(c, v, trial);
      if (!is_satisfiable(c)) {
        CHECK(!l);
        continue;
      }
      REQUIRE(l);
      CHECK(satisfies(c, *l));
    }
  }
}
