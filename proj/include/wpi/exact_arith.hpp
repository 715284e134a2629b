#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace wpi {

using Scalar = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& x);
/// Accepts "p", "-p", "p/q"; throws InputError otherwise.
Scalar parse_scalar(std::string_view text);
bool is_integer(const Scalar& x);
mpz_class floor_of(const Scalar& x);
/// x - floor(x), in [0,1).
Scalar frac_of(const Scalar& x);

/// Dense univariate polynomial in the formal variable u, ascending
/// coefficients, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);

  static UniPoly constant(const Scalar& c);
  static UniPoly monomial(int degree);
  /// Product of (u + s) over the given shifts.
  static UniPoly from_shifts(const std::vector<Scalar>& shifts);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int d) const;
  Scalar eval(const Scalar& x) const;
  /// p(u + c)
  UniPoly shifted(const Scalar& c) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Scalar& c) const;
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

std::string to_string(const UniPoly& p);

/// c_0 + c_1 u^{-1} + ... + c_T u^{-T}, exact up to u^{-T}.
class InvSeries {
 public:
  InvSeries() = default;
  explicit InvSeries(std::vector<Scalar> coeffs);

  static InvSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& constant() const { return coeffs_.at(0); }
  const Scalar& operator[](int t) const { return coeffs_.at(t); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  InvSeries truncated(int order) const;
  /// Product truncated at the smaller of the two orders.
  InvSeries operator*(const InvSeries& o) const;
  InvSeries operator+(const InvSeries& o) const;
  /// Requires a nonzero constant term.
  InvSeries inverse() const;
  bool operator==(const InvSeries& o) const { return coeffs_ == o.coeffs_; }

  /// Expansion of num/den in u^{-1} when deg num <= deg den and den is monic.
  /// The leading u^{deg num - deg den} is folded in, so the result may start
  /// with zero coefficients.
  static InvSeries expand_ratio(const UniPoly& num, const UniPoly& den,
                                int order);

 private:
  std::vector<Scalar> coeffs_;
};

/// num/den = 1 + sum_t c_t u^{-t} for monic num, den of equal degree.
InvSeries series_quotient(const UniPoly& num, const UniPoly& den, int order);

/// prod(numerator_values) / prod_{j != i} (points[j] - points[i]).
/// Throws CriticalTableauError when another point equals points[target_index].
Scalar lagrange_coefficient(const std::vector<Scalar>& points,
                            std::size_t target_index,
                            const std::vector<Scalar>& numerator_values);

/// Class ids starting with '=' are pinned: "=p/q" names the residue class
/// p/q + Z with 0 <= p/q < 1.  Every other id is a free symbol.
bool is_pinned_class(const std::string& cls);
std::string pinned_class_of(const Scalar& x);
Scalar pinned_class_base(const std::string& cls);

struct GenericAssignment {
  std::map<std::string, Scalar> class_values;
  std::uint64_t seed = 0;

  const Scalar& value(const std::string& cls) const;
};

/// Free classes receive values r/q + m with a distinct prime q per class
/// (q coprime to every pinned denominator), so no two classes differ by an
/// integer.  Pinned classes receive their base value.
GenericAssignment generic_instantiate(const std::set<std::string>& classes,
                                      std::uint64_t seed);

}  // namespace wpi
