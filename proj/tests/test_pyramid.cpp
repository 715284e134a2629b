#include "doctest.h"
#include "wpi/errors.hpp"
#include "wpi/pyramid.hpp"

using namespace wpi;

TEST_CASE("columns") {
  CHECK(columns(Pyramid({1, 1, 1})) == std::vector<int>{3});
  CHECK(columns(Pyramid({2, 2})) == std::vector<int>{2, 2});
  CHECK(columns(Pyramid({1, 2})) == std::vector<int>{2, 1});
  CHECK(Pyramid({1, 2, 2}).N() == 5);
  CHECK_THROWS_AS(Pyramid({2, 1}), InputError);
  CHECK_THROWS_AS(Pyramid({0, 1}), InputError);
  CHECK_THROWS_AS(Pyramid(std::vector<int>{}), InputError);
}

TEST_CASE("e generator degrees") {
  CHECK(e_generator_min_degree(Pyramid({1, 1, 1}), 1) == 1);
  CHECK(e_generator_min_degree(Pyramid({1, 2}), 1) == 2);
  CHECK(e_generator_min_degree(Pyramid({1, 3}), 1) == 3);
  CHECK_THROWS_AS(e_generator_min_degree(Pyramid({1, 3}), 2), InputError);
}

TEST_CASE("columns and rows are inverse on all small pyramids") {
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 4; ++c) {
        Pyramid pi({a, b, c});
        auto q = columns(pi);
        int sum = 0;
        for (std::size_t k = 0; k < q.size(); ++k) {
          sum += q[k];
          if (k) CHECK(q[k] <= q[k - 1]);
        }
        CHECK(sum == pi.N());
        CHECK(rows_from_columns(q) == pi.rows());
        for (int i = 1; i < 3; ++i)
          CHECK((e_generator_min_degree(pi, i) == 1) == (pi.p(i + 1) == pi.p(i)));
      }
}
