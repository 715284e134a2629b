#pragma once

#include <vector>

namespace wpi {

/// Left-justified pyramid with row lengths p_1 <= ... <= p_n.
class Pyramid {
 public:
  Pyramid() = default;
  /// Throws InputError unless 1 <= p_1 <= ... <= p_n and n >= 1.
  explicit Pyramid(std::vector<int> rows);

  static Pyramid one_column(int n) { return Pyramid(std::vector<int>(n, 1)); }

  int n() const { return static_cast<int>(rows_.size()); }
  /// p_i, 1-based.
  int p(int i) const { return rows_.at(i - 1); }
  int N() const;
  const std::vector<int>& rows() const { return rows_; }
  bool is_one_column() const { return rows_.back() == 1; }

  bool operator==(const Pyramid&) const = default;

 private:
  std::vector<int> rows_;
};

/// Column heights q_1 >= ... >= q_l, l = p_n.
std::vector<int> columns(const Pyramid& pi);

/// Row lengths recovered from column heights (inverse of columns()).
std::vector<int> rows_from_columns(const std::vector<int>& q);

/// Least r such that e_i^{(r)} exists: p_{i+1} - p_i + 1.
int e_generator_min_degree(const Pyramid& pi, int i);

}  // namespace wpi
