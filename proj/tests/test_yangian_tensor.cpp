#include <random>

#include "doctest.h"
#include "wpi/errors.hpp"
#include "wpi/yangian_tensor.hpp"

using namespace wpi;

namespace {

GlWeight weight(std::initializer_list<Scalar> xs) { return GlWeight{std::vector<Scalar>(xs)}; }

std::vector<Scalar> scalars(std::initializer_list<long> xs) {
  std::vector<Scalar> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::map<std::size_t, Scalar> apply(const EvaluationFactor& f, int i, int j,
                                    const std::map<std::size_t, Scalar>& v) {
  std::map<std::size_t, Scalar> out;
  for (const auto& [b, c] : v)
    for (const auto& [t, x] : f.E(i, j, b)) out[t] += c * x;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// [E_ij, E_kl] = delta_jk E_il - delta_li E_kj on every vector whose images stay under the cap
void check_gl_relations(const EvaluationFactor& f, int max_depth) {
  const int n = f.n();
  for (std::size_t b = 0; b < f.size(); ++b) {
    if (f.depth(b) > max_depth) continue;
    std::map<std::size_t, Scalar> v{{b, Scalar(1)}};
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            auto lhs = apply(f, i, j, apply(f, k, l, v));
            for (const auto& [t, c] : apply(f, k, l, apply(f, i, j, v))) lhs[t] -= c;
            if (j == k)
              for (const auto& [t, c] : apply(f, i, l, v)) lhs[t] -= c;
            if (l == i)
              for (const auto& [t, c] : apply(f, k, j, v)) lhs[t] += c;
            std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
            CHECK(lhs.empty());
          }
  }
}

}  // namespace

TEST_CASE("shifted and dual weights") {
  auto w = weight({3, 1, 0});
  CHECK(w.shifted() == scalars({3, 0, -2}));
  CHECK(dual_weight(w) == weight({0, -1, -3}));
  CHECK(dual_weight(dual_weight(w)) == w);
}

TEST_CASE("good and generic weights") {
  CHECK(is_good(weight({0, 1})));
  CHECK(is_good(weight({5, 0, 2})));
  CHECK_FALSE(is_good(weight({0, 5, 2})));
  CHECK_FALSE(is_good(weight({0, 1, 7})));
  CHECK_FALSE(is_good(weight({2, 3, 0})));
  CHECK(is_good(weight({Scalar(1, 2), 1, 0})));
  CHECK(is_good(weight({1, 1, 0})));

  CHECK(is_generic({weight({0, 1}), weight({Scalar(1, 3), Scalar(4, 3)})}));
  CHECK_FALSE(is_generic({weight({0, Scalar(1, 2)}), weight({Scalar(5, 2), Scalar(1, 3)})}));
  CHECK(is_generic({weight({Scalar(1, 2), Scalar(3, 2)})}));
}

TEST_CASE("interval sets") {
  auto [m1, p1] = interval_sets(scalars({3, 0}), 1, 2);
  REQUIRE(m1.bounded());
  CHECK(m1.members() == scalars({1, 2}));
  CHECK(p1.members() == scalars({1, 2}));

  auto [m2, p2] = interval_sets(scalars({1, -1}), 1, 2);
  CHECK(m2.members() == scalars({0}));

  // l_2 > l_1: the chain is out of order and gives rays
  auto [m3, p3] = interval_sets(scalars({0, 2}), 1, 2);
  CHECK_FALSE(m3.bounded());
  CHECK(m3.contains(Scalar(1)));
  CHECK(m3.contains(Scalar(-1)));
  CHECK_FALSE(m3.contains(Scalar(0)));
  CHECK_FALSE(m3.contains(Scalar(3)));
  CHECK(p3.contains(Scalar(1)));
  CHECK(p3.contains(Scalar(3)));
  CHECK_FALSE(p3.contains(Scalar(2)));
  CHECK_FALSE(p3.contains(Scalar(-1)));

  // equal entries are out of order too
  auto [m5, p5] = interval_sets(scalars({-3, -3}), 1, 2);
  CHECK(m5.contains(Scalar(-4)));
  CHECK_FALSE(m5.contains(Scalar(-3)));

  // two chains, neither reaching both ends
  std::vector<Scalar> l{Scalar(0), Scalar(1, 2), Scalar(-2)};
  auto [m4, p4] = interval_sets(l, 1, 3);
  CHECK_FALSE(m4.bounded());
  CHECK(m4.contains(Scalar(-1)));
  CHECK_FALSE(m4.contains(Scalar(-2)));
  CHECK(m4.contains(Scalar(-3, 2)));
  CHECK_FALSE(m4.contains(Scalar(3, 2)));
  CHECK(p4.contains(Scalar(3, 2)));
  CHECK_FALSE(p4.contains(Scalar(-3, 2)));
  CHECK(p4.contains(Scalar(-1)));
  CHECK_THROWS_AS(m4.members(), std::logic_error);

  CHECK_THROWS_AS(interval_sets(l, 2, 2), InputError);
  CHECK_THROWS_AS(interval_sets(l, 1, 4), InputError);
}

TEST_CASE("integral condition") {
  CHECK(integral_condition(weight({1, 0}), weight({1, 0})));
  CHECK(integral_condition(weight({0, 0}), weight({5, 2})));
  CHECK_FALSE(integral_condition(weight({1, 0}), weight({2, 1})));
  CHECK_FALSE(integral_condition(weight({3, 1}), weight({4, 2})));
  CHECK(integral_condition(weight({Scalar(1, 2), 0}), weight({3, 1})));
  // reducible at depth 1: lambda_1 = mu_2
  CHECK_FALSE(integral_condition(weight({-3, -2}), weight({-2, -3})));
  CHECK_THROWS_AS(integral_condition(weight({0, 1, 7}), weight({0, 0, 0})), InputError);
  CHECK_THROWS_AS(integral_condition(weight({1, 0}), weight({1, 0, 0})), InputError);
}

TEST_CASE("evaluation factor bases") {
  EvaluationFactor a(weight({2, 0}), Scalar(0), 6);
  CHECK(a.size() == 3);
  CHECK(a.depth(0) == 0);
  CHECK(a.at_depth(1).size() == 1);
  CHECK(a.at_depth(3).empty());

  EvaluationFactor b(weight({2, 1, 0}), Scalar(0), 8);
  CHECK(b.size() == 8);
  EvaluationFactor c(weight({1, 0, 0}), Scalar(0), 8);
  CHECK(c.size() == 3);

  EvaluationFactor d(weight({Scalar(1, 2), 0}), Scalar(0), 4);
  CHECK(d.size() == 5);

  CHECK_THROWS_AS(EvaluationFactor(weight({0, 1, 7}), Scalar(0), 2), InputError);
}

TEST_CASE("evaluation factors carry gl_n") {
  check_gl_relations(EvaluationFactor(weight({2, 0}), Scalar(0), 6), 2);
  check_gl_relations(EvaluationFactor(weight({2, 1, 0}), Scalar(0), 8), 4);
  check_gl_relations(EvaluationFactor(weight({Scalar(1, 3), Scalar(-1, 2), 2}), Scalar(0), 6), 2);
}

TEST_CASE("diagonal action is the weight") {
  EvaluationFactor f(weight({Scalar(1, 3), Scalar(-1, 2), 2}), Scalar(0), 4);
  for (std::size_t b = 0; b < f.size(); ++b) {
    const auto& k = f.kappa(b);
    for (int i = 1; i <= 3; ++i) {
      Scalar expect = f.weight().lambda[i - 1];
      if (i <= 2) expect -= k[i - 1];
      if (i >= 2) expect += k[i - 2];
      const auto& img = f.E(i, i, b);
      CHECK(img.size() == (expect == 0 ? 0u : 1u));
      if (!img.empty()) CHECK(img.at(b) == expect);
    }
  }
}

TEST_CASE("depth cap") {
  EvaluationFactor f(weight({Scalar(1, 2), 0}), Scalar(0), 2);
  CHECK(f.E(2, 1, 1).size() == 1);
  CHECK_THROWS_AS(f.E(2, 1, 2), WindowOverflowError);
  CHECK_THROWS_AS(f.E(0, 1, 0), InputError);
}

TEST_CASE("t_11 on the highest vector") {
  TensorModule m({weight({1, 0}), weight({Scalar(3, 2), 1})}, {Scalar(0), Scalar(0)}, 1);
  auto v = m.apply_coefficient(1, 1, 1, {{m.highest(), Scalar(1)}});
  REQUIRE(v.size() == 1);
  CHECK(v.at(m.highest()) == Scalar(5, 2));

  auto series = m.apply_t(1, 1, Scalar(0), series_of({{m.highest(), Scalar(1)}}, 3), 3);
  CHECK(series[0].at(m.highest()) == 1);
  CHECK(series[1].at(m.highest()) == Scalar(5, 2));
  CHECK(series[2].at(m.highest()) == Scalar(3, 2));
  CHECK(series[3].empty());
}

TEST_CASE("tensor module weight spaces") {
  TensorModule m({weight({1, 0}), weight({1, 0})}, {Scalar(0), Scalar(0)}, 3);
  CHECK(m.weight_space({0}).size() == 1);
  CHECK(m.weight_space({1}).size() == 2);
  CHECK(m.weight_space({2}).size() == 1);
  CHECK(m.weight_space({3}).empty());
  CHECK(m.weights(3).size() == 3);

  TensorModule g({weight({2, 1, 0}), weight({1, 0, 0})}, {Scalar(0), Scalar(1)}, 2);
  CHECK(g.weight_space({0, 0}).size() == 1);
  CHECK(g.weight_space({1, 0}).size() == 2);
  CHECK(g.weight_space({1, 1}).size() == 4);
  CHECK_THROWS_AS(g.weight_space({2, 1}), InputError);
}

TEST_CASE("structure checks on gl_2") {
  TensorModule m({weight({Scalar(1, 2), 0}), weight({2, Scalar(-1, 3)})}, {Scalar(0), Scalar(1, 5)}, 2);
  for (const auto& c : {check_rtt(m, 2, 2), check_minor_antisymmetry(m, 2, 2, 4),
                        check_coproduct_minors(m, 2, 2, 4), check_drinfeld_a(m, 2, 4)}) {
    INFO(c.name << ": " << c.failure.value_or(""));
    CHECK(c.passed());
  }
}

TEST_CASE("structure checks on gl_3") {
  TensorModule m({weight({2, 1, 0}), weight({Scalar(1, 2), 0, 0})}, {Scalar(0), Scalar(1, 3)}, 1);
  for (const auto& c : {check_rtt(m, 1, 1), check_minor_antisymmetry(m, 3, 1, 3),
                        check_coproduct_minors(m, 2, 1, 3), check_coproduct_minors(m, 3, 1, 3),
                        check_drinfeld_a(m, 1, 4)}) {
    INFO(c.name << ": " << c.failure.value_or(""));
    CHECK(c.passed());
  }
}

TEST_CASE("coproduct check needs two factors") {
  TensorModule m({weight({1, 0})}, {Scalar(0)}, 1);
  CHECK_THROWS_AS(check_coproduct_minors(m, 1, 1, 2), InputError);
}

TEST_CASE("predicted a series") {
  TensorModule m({weight({1, 0}), weight({2, 0})}, {Scalar(0), Scalar(3)}, 0);
  // (1 + 1/u)(1 + 2/(u - 3)) = 1 + 3 u^-1 + 8 u^-2 + 24 u^-3
  auto a1 = predicted_a_series(m, 1, 3);
  CHECK(a1[1] == 3);
  CHECK(a1[2] == 8);
  CHECK(a1[3] == 24);
}

TEST_CASE("exact null space") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 6;
    std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols));
    for (auto& row : a)
      for (auto& x : row) {
        x = Scalar(entry(rng), 1 + trial % 3);
        x.canonicalize();
      }
    if (trial % 4 == 0 && rows > 1) a[1] = a[0];
    auto basis = exact_nullspace(a, cols);
    for (const auto& x : basis)
      for (const auto& row : a) {
        Scalar dot = 0;
        for (std::size_t c = 0; c < cols; ++c) dot += row[c] * x[c];
        CHECK(dot == 0);
      }
    // rank by plain Gaussian elimination over the rationals
    auto m = a;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t p = rank;
      while (p < rows && m[p][c] == 0) ++p;
      if (p == rows) continue;
      std::swap(m[p], m[rank]);
      for (std::size_t i = 0; i < rows; ++i)
        if (i != rank && m[i][c] != 0) {
          Scalar f = m[i][c] / m[rank][c];
          for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[rank][k];
        }
      ++rank;
    }
    CHECK(basis.size() == cols - rank);
  }
}

TEST_CASE("singular vectors") {
  TensorModule same({weight({1, 0}), weight({1, 0})}, {Scalar(0), Scalar(0)}, 3);
  CHECK(only_top_singular(singular_profile(same, 3)));

  TensorModule linked({weight({1, 0}), weight({2, 1})}, {Scalar(0), Scalar(0)}, 3);
  auto profile = singular_profile(linked, 3);
  CHECK_FALSE(only_top_singular(profile));
  CHECK(profile[1].kappa == std::vector<int>{1});
  CHECK(profile[1].singular == 1);

  auto sing = find_singular_vectors(linked, {1}, default_singular_order(2, 3));
  REQUIRE(sing.size() == 1);
  CHECK(sing[0].size() == 2);

  TensorModule verma({weight({-3, -2}), weight({-2, -3})}, {Scalar(0), Scalar(0)}, 1);
  CHECK(find_singular_vectors(verma, {1}, default_singular_order(2, 1)).size() == 1);

  TensorModule generic({weight({Scalar(1, 2), 0}), weight({Scalar(1, 3), 0})}, {Scalar(0), Scalar(0)}, 3);
  CHECK(only_top_singular(singular_profile(generic, 3)));
}
