#include "wpi/exact_arith.hpp"

#include <algorithm>
#include <random>

#include "wpi/errors.hpp"

namespace wpi {

std::string to_string(const Scalar& x) { return x.get_str(); }

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto bad = [&] { throw InputError("not a rational number: \"" + s + "\""); };
  if (s.empty()) bad();
  std::size_t slash = s.find('/');
  auto digits_ok = [](std::string_view t, bool allow_sign) {
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+'))
      t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) {
      return c >= '0' && c <= '9';
    });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) bad();
  Scalar q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

bool is_integer(const Scalar& x) { return x.get_den() == 1; }

mpz_class floor_of(const Scalar& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return f;
}

Scalar frac_of(const Scalar& x) { return x - Scalar(floor_of(x)); }

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(int degree) {
  std::vector<Scalar> c(degree + 1);
  c[degree] = 1;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::from_shifts(const std::vector<Scalar>& shifts) {
  std::vector<Scalar> c{Scalar(1)};
  for (const Scalar& s : shifts) {
    std::vector<Scalar> next(c.size() + 1);
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d] += c[d] * s;
      next[d + 1] += c[d];
    }
    c = std::move(next);
  }
  return UniPoly(std::move(c));
}

bool UniPoly::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

Scalar UniPoly::coeff(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[d];
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::shifted(const Scalar& c) const {
  // Horner in the ring: acc = acc * (u + c) + a_d
  UniPoly acc;
  UniPoly lin({c, Scalar(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * lin + UniPoly::constant(*it);
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t d = 0; d < coeffs_.size(); ++d) c[d] += coeffs_[d];
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) c[d] += o.coeffs_[d];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  return *this + o * Scalar(-1);
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Scalar> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
      c[a + b] += coeffs_[a] * o.coeffs_[b];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Scalar& k) const {
  std::vector<Scalar> c(coeffs_);
  for (Scalar& x : c) x *= k;
  return UniPoly(std::move(c));
}

std::string to_string(const UniPoly& p) {
  std::string out = "[";
  for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
    if (d) out += ",";
    out += to_string(p.coeffs()[d]);
  }
  return out + "]";
}

// -------------------------------------------------------------- InvSeries

InvSeries::InvSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
}

InvSeries InvSeries::one(int order) {
  std::vector<Scalar> c(order + 1);
  c[0] = 1;
  return InvSeries(std::move(c));
}

InvSeries InvSeries::truncated(int order) const {
  std::vector<Scalar> c(order + 1);
  for (int t = 0; t <= order && t <= this->order(); ++t) c[t] = coeffs_[t];
  return InvSeries(std::move(c));
}

InvSeries InvSeries::operator*(const InvSeries& o) const {
  int T = std::min(order(), o.order());
  std::vector<Scalar> c(T + 1);
  for (int a = 0; a <= T; ++a) {
    if (coeffs_[a] == 0) continue;
    for (int b = 0; a + b <= T; ++b) c[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  return InvSeries(std::move(c));
}

InvSeries InvSeries::operator+(const InvSeries& o) const {
  int T = std::min(order(), o.order());
  std::vector<Scalar> c(T + 1);
  for (int t = 0; t <= T; ++t) c[t] = coeffs_[t] + o.coeffs_[t];
  return InvSeries(std::move(c));
}

InvSeries InvSeries::inverse() const {
  if (coeffs_[0] == 0)
    throw std::domain_error("series with zero constant term is not invertible");
  int T = order();
  std::vector<Scalar> inv(T + 1);
  Scalar c0inv = 1 / coeffs_[0];
  inv[0] = c0inv;
  for (int t = 1; t <= T; ++t) {
    Scalar acc = 0;
    for (int s = 1; s <= t; ++s) acc += coeffs_[s] * inv[t - s];
    inv[t] = -acc * c0inv;
  }
  return InvSeries(std::move(inv));
}

InvSeries InvSeries::expand_ratio(const UniPoly& num, const UniPoly& den,
                                  int order) {
  if (!den.is_monic())
    throw std::invalid_argument("expand_ratio: denominator must be monic");
  int a = num.degree(), b = den.degree();
  if (a > b)
    throw std::invalid_argument("expand_ratio: numerator degree too large");
  std::vector<Scalar> out(order + 1);
  if (num.is_zero()) return InvSeries(std::move(out));
  // In w = u^{-1}: num/den = w^{b-a} N(w)/D(w) with D(0) = 1.
  int gap = b - a;
  for (int t = gap; t <= order; ++t) {
    int m = t - gap;
    Scalar acc = num.coeff(a - m);
    for (int s = 1; s <= m; ++s) acc -= den.coeff(b - s) * out[t - s];
    out[t] = acc;
  }
  return InvSeries(std::move(out));
}

InvSeries series_quotient(const UniPoly& num, const UniPoly& den, int order) {
  if (num.degree() != den.degree())
    throw std::invalid_argument("series_quotient: degree mismatch");
  if (!num.is_monic() || !den.is_monic())
    throw std::invalid_argument("series_quotient: inputs must be monic");
  return InvSeries::expand_ratio(num, den, order);
}

Scalar lagrange_coefficient(const std::vector<Scalar>& points,
                            std::size_t target_index,
                            const std::vector<Scalar>& numerator_values) {
  if (target_index >= points.size())
    throw std::out_of_range("lagrange_coefficient: target index");
  Scalar num = 1;
  for (const Scalar& v : numerator_values) num *= v;
  Scalar den = 1;
  const Scalar& x = points[target_index];
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (j == target_index) continue;
    Scalar d = points[j] - x;
    if (d == 0)
      throw CriticalTableauError("coincident interpolation points at " +
                                 to_string(x));
    den *= d;
  }
  return num / den;
}

// ------------------------------------------------------ GenericAssignment

bool is_pinned_class(const std::string& cls) {
  return !cls.empty() && cls[0] == '=';
}

std::string pinned_class_of(const Scalar& x) { return "=" + to_string(frac_of(x)); }

Scalar pinned_class_base(const std::string& cls) {
  if (!is_pinned_class(cls)) throw InputError("not a pinned class: " + cls);
  return frac_of(parse_scalar(std::string_view(cls).substr(1)));
}

const Scalar& GenericAssignment::value(const std::string& cls) const {
  auto it = class_values.find(cls);
  if (it == class_values.end())
    throw std::out_of_range("no value assigned to class " + cls);
  return it->second;
}

namespace {

bool is_prime(unsigned long q) {
  if (q < 2) return false;
  for (unsigned long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

GenericAssignment generic_instantiate(const std::set<std::string>& classes,
                                      std::uint64_t seed) {
  GenericAssignment g;
  g.seed = seed;
  std::vector<mpz_class> pinned_dens;
  for (const auto& c : classes) {
    if (!is_pinned_class(c)) continue;
    Scalar v = pinned_class_base(c);
    g.class_values[c] = v;
    pinned_dens.push_back(v.get_den());
  }
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
  unsigned long q = 5 + rng() % 24;
  for (const auto& c : classes) {
    if (is_pinned_class(c)) continue;
    for (;;) {
      ++q;
      if (!is_prime(q)) continue;
      bool coprime = std::all_of(pinned_dens.begin(), pinned_dens.end(),
                                 [&](const mpz_class& d) { return d % q != 0; });
      if (coprime) break;
    }
    long r = 1 + static_cast<long>(rng() % (q - 1));
    long m = static_cast<long>(rng() % 5) - 2;
    Scalar v(r, q);
    v.canonicalize();
    g.class_values[c] = v + m;
    q += rng() % 6;
  }
  return g;
}

}  // namespace wpi
