#include "wpi/pyramid.hpp"

#include <numeric>
#include <string>

#include "wpi/errors.hpp"

namespace wpi {

Pyramid::Pyramid(std::vector<int> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw InputError("pyramid needs at least one row");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1) throw InputError("pyramid rows must be positive");
    if (i > 0 && rows_[i] < rows_[i - 1])
      throw InputError("pyramid rows must be non-decreasing");
  }
}

int Pyramid::N() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

std::vector<int> columns(const Pyramid& pi) {
  // column k has a brick in row i iff k <= p_i
  std::vector<int> q(pi.p(pi.n()), 0);
  for (int i = 1; i <= pi.n(); ++i)
    for (int k = 1; k <= pi.p(i); ++k) ++q[k - 1];
  return q;
}

std::vector<int> rows_from_columns(const std::vector<int>& q) {
  if (q.empty()) return {};
  int n = q.front();
  std::vector<int> rows(n, 0);
  // the bottom q_k rows (largest indices) reach column k
  for (int qk : q)
    for (int i = n - qk; i < n; ++i) ++rows[i];
  return rows;
}

int e_generator_min_degree(const Pyramid& pi, int i) {
  if (i < 1 || i >= pi.n())
    throw InputError("row index " + std::to_string(i) +
                     " out of range for e generators");
  return pi.p(i + 1) - pi.p(i) + 1;
}

}  // namespace wpi
