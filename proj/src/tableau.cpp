#include "wpi/tableau.hpp"

#include <algorithm>

#include "wpi/errors.hpp"

namespace wpi {

std::string to_string(const TriIndex& t) {
  return "(" + std::to_string(t.k) + "," + std::to_string(t.i) + "," +
         std::to_string(t.j) + ")";
}

bool is_valid(const Pyramid& pi, const TriIndex& t) {
  return t.i >= 1 && t.i <= pi.n() && t.j >= 1 && t.j <= t.i && t.k >= 1 &&
         t.k <= pi.p(t.j);
}

std::vector<TriIndex> row_triples(const Pyramid& pi, int i) {
  std::vector<TriIndex> out;
  for (int j = 1; j <= i; ++j)
    for (int k = 1; k <= pi.p(j); ++k) out.push_back({k, i, j});
  return out;
}

std::vector<TriIndex> triples(const Pyramid& pi) {
  std::vector<TriIndex> out;
  for (int i = 1; i <= pi.n(); ++i) {
    auto r = row_triples(pi, i);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

std::size_t triple_position(const Pyramid& pi, const TriIndex& t) {
  if (!is_valid(pi, t)) throw InputError("triple " + to_string(t) + " not in pyramid");
  std::size_t pos = 0;
  int partial = 0;  // p_1 + ... + p_{i'}
  for (int i = 1; i < t.i; ++i) {
    partial += pi.p(i);
    pos += partial;
  }
  for (int j = 1; j < t.j; ++j) pos += pi.p(j);
  return pos + t.k - 1;
}

std::size_t triple_count(const Pyramid& pi) {
  std::size_t total = 0;
  int partial = 0;
  for (int i = 1; i <= pi.n(); ++i) {
    partial += pi.p(i);
    total += partial;
  }
  return total;
}

// ----------------------------------------------------------- TableauDelta

TableauDelta::TableauDelta(const Pyramid& pi) : z_(triple_count(pi), 0) {}

int TableauDelta::get(const Pyramid& pi, const TriIndex& t) const {
  return z_[triple_position(pi, t)];
}

void TableauDelta::set(const Pyramid& pi, const TriIndex& t, int value) {
  if (t.i == pi.n() && value != 0)
    throw InputError("shifts never touch the top row");
  z_[triple_position(pi, t)] = value;
}

int TableauDelta::sup_norm() const {
  int m = 0;
  for (int x : z_) m = std::max(m, std::abs(x));
  return m;
}

bool TableauDelta::is_zero() const {
  return std::all_of(z_.begin(), z_.end(), [](int x) { return x == 0; });
}

TableauDelta TableauDelta::operator+(const TableauDelta& o) const {
  TableauDelta r = *this;
  for (std::size_t a = 0; a < z_.size(); ++a) r.z_[a] += o.z_[a];
  return r;
}

TableauDelta TableauDelta::operator-() const {
  TableauDelta r = *this;
  for (int& x : r.z_) x = -x;
  return r;
}

TableauDelta TableauDelta::unit(const Pyramid& pi, const TriIndex& t, int sign) {
  TableauDelta d(pi);
  d.set(pi, t, sign);
  return d;
}

// ---------------------------------------------------------------- Tableau

Tableau::Tableau(Pyramid pi, std::vector<Entry> entries)
    : pi_(std::move(pi)), entries_(std::move(entries)) {
  if (entries_.size() != triple_count(pi_))
    throw InputError("tableau needs exactly one entry per triple");
  for (auto& e : entries_) {
    if (e.cls.empty()) throw InputError("empty class id");
    if (is_pinned_class(e.cls)) {
      // normalise "=4/3" to "=1/3" with the integer part moved to the offset
      Scalar v = parse_scalar(std::string_view(e.cls).substr(1));
      e.offset += floor_of(v).get_si();
      e.cls = pinned_class_of(v);
    }
  }
}

Tableau Tableau::from_values(const Pyramid& pi, const std::vector<Scalar>& values) {
  if (values.size() != triple_count(pi))
    throw InputError("tableau needs exactly one value per triple");
  std::vector<Entry> e;
  e.reserve(values.size());
  for (const Scalar& v : values) e.push_back({pinned_class_of(v), floor_of(v).get_si()});
  return Tableau(pi, std::move(e));
}

const Entry& Tableau::at(const TriIndex& t) const {
  return entries_[triple_position(pi_, t)];
}

std::optional<long> Tableau::integer_difference(const TriIndex& a,
                                                const TriIndex& b) const {
  const Entry& x = at(a);
  const Entry& y = at(b);
  if (x.cls != y.cls) return std::nullopt;
  return x.offset - y.offset;
}

std::set<std::string> Tableau::classes() const {
  std::set<std::string> out;
  for (const auto& e : entries_) out.insert(e.cls);
  return out;
}

Tableau shift(const Tableau& l, const TableauDelta& d) {
  const Pyramid& pi = l.pyramid();
  if (d.size() != triple_count(pi)) throw InputError("delta does not match pyramid");
  std::vector<Entry> e = l.entries();
  for (const TriIndex& t : row_triples(pi, pi.n()))
    if (d[triple_position(pi, t)] != 0) throw InputError("shift touches the top row");
  for (std::size_t a = 0; a < e.size(); ++a) e[a].offset += d[a];
  return Tableau(pi, std::move(e));
}

ValuedTableau instantiate(const Tableau& l, const GenericAssignment& g) {
  ValuedTableau v{l.pyramid(), {}};
  v.values.reserve(l.entries().size());
  for (const auto& e : l.entries()) v.values.push_back(g.value(e.cls) + e.offset);
  return v;
}

ValuedTableau shift(const ValuedTableau& l, const TableauDelta& d) {
  ValuedTableau r = l;
  for (std::size_t a = 0; a < r.values.size(); ++a) r.values[a] += d[a];
  return r;
}

bool is_noncritical(const ValuedTableau& l) {
  const Pyramid& pi = l.pyramid;
  for (int i = 1; i < pi.n(); ++i) {
    std::vector<Scalar> row;
    for (const auto& t : row_triples(pi, i)) row.push_back(l.at(t));
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) return false;
  }
  return true;
}

std::vector<Scalar> weight(const ValuedTableau& l) {
  const Pyramid& pi = l.pyramid;
  if (!pi.is_one_column()) throw InputError("weight is defined for one-column pyramids");
  std::vector<Scalar> w(pi.n());
  auto row_sum = [&](int r) {
    Scalar s = 0;
    if (r >= 1)
      for (const auto& t : row_triples(pi, r)) s += l.at(t);
    return s;
  };
  for (int k = 1; k <= pi.n(); ++k) w[k - 1] = row_sum(k) - row_sum(k - 1) + (k - 1);
  return w;
}

UniPoly row_polynomial(const ValuedTableau& l, int r, int i) {
  std::vector<Scalar> shifts;
  for (int k = 1; k <= l.pyramid.p(i); ++k) shifts.push_back(l.at({k, r, i}));
  return UniPoly::from_shifts(shifts);
}

bool is_standard(const ValuedTableau& l) {
  const Pyramid& pi = l.pyramid;
  for (int r = 1; r < pi.n(); ++r) {
    for (int i = 1; i <= r; ++i) {
      for (int k = 1; k <= pi.p(i); ++k) {
        Scalar up = l.at({k, r + 1, i}) - l.at({k, r, i});
        Scalar down = l.at({k, r, i}) - l.at({k, r + 1, i + 1});
        if (!is_integer(up) || up < 0) return false;
        if (!is_integer(down) || down <= 0) return false;
      }
    }
  }
  for (int i = 1; i <= pi.n(); ++i)
    for (int j = 1; j <= i; ++j)
      for (int k = 1; k <= pi.p(j); ++k)
        for (int r = k + 1; r <= pi.p(j); ++r)
          if (is_integer(l.at({k, i, j}) - l.at({r, i, j}))) return false;
  return true;
}

}  // namespace wpi
