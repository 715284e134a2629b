#include "wpi/gt_module.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>
#include <tuple>

#include "wpi/errors.hpp"

namespace wpi {

std::string to_string(const GeneratorSymbol& g) {
  static const char* names[] = {"d", "d'", "e", "f", "A", "B", "C"};
  return std::string(names[static_cast<int>(g.family)]) + "_" + std::to_string(g.row) + "^(" +
         std::to_string(g.superscript) + ")";
}

// --------------------------------------------------------- RelationModule

RelationModule::RelationModule(RelationSet c, Tableau seed, GenericAssignment g)
    : c_(std::move(c)), seed_(std::move(seed)), g_(std::move(g)) {
  if (!(c_.pyramid() == seed_.pyramid())) throw InputError("pyramid mismatch");
  if (!satisfies(c_, seed_)) throw PreconditionError("seed tableau does not satisfy the relations");
  const Pyramid& pi = c_.pyramid();
  for (const auto& e : c_.edges())
    edges_.push_back({triple_position(pi, e.greater), triple_position(pi, e.lesser),
                      e.strict ? 1L : 0L});
  for (const auto& e : seed_.entries()) {
    offsets_.push_back(e.offset);
    base_values_.push_back(g_.value(e.cls) + e.offset);
  }
}

bool RelationModule::contains(const TableauDelta& z) const {
  for (const auto& e : edges_) {
    long diff = offsets_[e.g] + z[e.g] - offsets_[e.s] - z[e.s];
    if (diff < e.need) return false;
  }
  return true;
}

ValuedTableau RelationModule::values_at(const TableauDelta& z) const {
  ValuedTableau v{pyramid(), base_values_};
  for (std::size_t a = 0; a < v.values.size(); ++a)
    if (z[a] != 0) v.values[a] += z[a];
  return v;
}

Scalar RelationModule::interpolation_weight(const ValuedTableau& v, int r, const TriIndex& t,
                                            int neighbour_row) const {
  const Pyramid& pi = pyramid();
  std::vector<Scalar> points;
  std::size_t target = 0;
  for (const auto& s : row_triples(pi, r)) {
    if (s == t) target = points.size();
    points.push_back(v.at(s));
  }
  std::vector<Scalar> nums;
  if (neighbour_row >= 1)
    for (const auto& s : row_triples(pi, neighbour_row)) nums.push_back(v.at(s) - v.at(t));
  return lagrange_coefficient(points, target, nums);
}

Terms RelationModule::e_terms(const TableauDelta& z, int r, int t) const {
  const Pyramid& pi = pyramid();
  int lo = e_generator_min_degree(pi, r);
  if (t < lo)
    throw InputError("e_" + std::to_string(r) + " needs superscript >= " + std::to_string(lo));
  ValuedTableau v = values_at(z);
  Terms out;
  int gap = pi.p(r + 1) - pi.p(r);
  for (const auto& tri : row_triples(pi, r)) {
    std::size_t pos = triple_position(pi, tri);
    TableauDelta target = z;
    target.add_at(pos, 1);
    if (!contains(target)) continue;
    // b^{(t)} is the u^{-t} coefficient of u^{-gap} / (u + r + x)
    Scalar base = -(r + v.values[pos]);
    Scalar b = 1;
    for (int m = 0; m < t - 1 - gap; ++m) b *= base;
    Scalar coef = -interpolation_weight(v, r, tri, r + 1) * b;
    if (coef != 0) out.emplace_back(std::move(target), std::move(coef));
  }
  return out;
}

Terms RelationModule::f_terms(const TableauDelta& z, int r, int t) const {
  const Pyramid& pi = pyramid();
  if (r < 1 || r >= pi.n() || t < 1) throw InputError("f generator out of range");
  ValuedTableau v = values_at(z);
  Terms out;
  for (const auto& tri : row_triples(pi, r)) {
    std::size_t pos = triple_position(pi, tri);
    TableauDelta target = z;
    target.add_at(pos, -1);
    if (!contains(target)) continue;
    // c^{(t)} is the u^{-t} coefficient of 1 / (u + r - 1 + x)
    Scalar base = -(r - 1 + v.values[pos]);
    Scalar c = 1;
    for (int m = 0; m < t - 1; ++m) c *= base;
    Scalar coef = interpolation_weight(v, r, tri, r - 1) * c;
    if (coef != 0) out.emplace_back(std::move(target), std::move(coef));
  }
  return out;
}

InvSeries RelationModule::d_series(const TableauDelta& z, int r, int order) const {
  const Pyramid& pi = pyramid();
  if (r < 1 || r > pi.n()) throw InputError("d generator out of range");
  ValuedTableau v = values_at(z);
  std::vector<Scalar> num, den;
  for (const auto& t : row_triples(pi, r)) num.push_back(v.at(t) + (r - 1));
  if (r > 1)
    for (const auto& t : row_triples(pi, r - 1)) den.push_back(v.at(t) + (r - 1));
  den.resize(den.size() + pi.p(r), Scalar(0));
  return series_quotient(UniPoly::from_shifts(num), UniPoly::from_shifts(den), order);
}

InvSeries RelationModule::dprime_series(const TableauDelta& z, int r, int order) const {
  return d_series(z, r, order).inverse();
}

UniPoly RelationModule::a_eigenvalue(const TableauDelta& z, int r) const {
  ValuedTableau v = values_at(z);
  std::vector<Scalar> shifts;
  for (const auto& t : row_triples(pyramid(), r)) shifts.push_back(v.at(t));
  return UniPoly::from_shifts(shifts);
}

Terms RelationModule::bc_terms(const TableauDelta& z, int r, const Scalar& u0,
                               bool raising) const {
  const Pyramid& pi = pyramid();
  if (r < 1 || r >= pi.n()) throw InputError("B/C row out of range");
  ValuedTableau v = values_at(z);
  auto row = row_triples(pi, r);
  Terms out;
  for (const auto& tri : row) {
    std::size_t pos = triple_position(pi, tri);
    TableauDelta target = z;
    target.add_at(pos, raising ? 1 : -1);
    if (!contains(target)) continue;
    Scalar poly = 1;
    for (const auto& s : row)
      if (s != tri) poly *= u0 + v.at(s);
    Scalar coef = interpolation_weight(v, r, tri, raising ? r + 1 : r - 1) * poly;
    if (raising) coef = -coef;
    if (coef != 0) out.emplace_back(std::move(target), std::move(coef));
  }
  return out;
}

// ------------------------------------------------------------ BasisWindow

BasisWindow::BasisWindow(const RelationModule& module, int radius)
    : module_(&module), radius_(radius) {
  if (radius < 0) throw InputError("radius must be nonnegative");
  const Pyramid& pi = module.pyramid();
  std::vector<std::size_t> free;
  for (int i = 1; i < pi.n(); ++i)
    for (const auto& t : row_triples(pi, i)) free.push_back(triple_position(pi, t));
  TableauDelta z(pi);
  // odometer over the box, first free coordinate slowest
  std::function<void(std::size_t)> rec = [&](std::size_t a) {
    if (a == free.size()) {
      if (module.contains(z)) members_.push_back(z);
      return;
    }
    for (int x = -radius; x <= radius; ++x) {
      z.add_at(free[a], x - z[free[a]]);
      rec(a + 1);
    }
    z.add_at(free[a], -z[free[a]]);
  };
  rec(0);
  std::sort(members_.begin(), members_.end());
  member_set_.insert(members_.begin(), members_.end());
}

bool BasisWindow::is_member(const TableauDelta& z) const { return member_set_.count(z) > 0; }

std::vector<TableauDelta> enumerate_basis(const RelationSet& c, const Tableau& l, int radius) {
  RelationModule m(c, l, generic_instantiate(l.classes(), 0));
  return BasisWindow(m, radius).members();
}

std::map<TableauDelta, UniPoly> act_A(const BasisWindow& w, int r) {
  std::map<TableauDelta, UniPoly> out;
  for (const auto& z : w.members()) out.emplace(z, w.module().a_eigenvalue(z, r));
  return out;
}

namespace {

void accumulate(ModuleVector& acc, const TableauDelta& z, const Scalar& c) {
  auto [it, fresh] = acc.try_emplace(z, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

void check_in_window(const BasisWindow& w, const Terms& terms) {
  for (const auto& [z, c] : terms)
    if (!w.in_box(z)) throw WindowOverflowError("term leaves the window of radius " +
                                                std::to_string(w.radius()));
}

ModuleVector apply_terms(const BasisWindow& w, const ModuleVector& v,
                         const std::function<Terms(const TableauDelta&)>& terms_of) {
  ModuleVector out;
  for (const auto& [z, c] : v) {
    Terms t = terms_of(z);
    check_in_window(w, t);
    for (const auto& [y, k] : t) accumulate(out, y, c * k);
  }
  return out;
}

}  // namespace

ModuleVector act_BC_at(const BasisWindow& w, int r, const Scalar& u0, bool raising,
                       const ModuleVector& v) {
  return apply_terms(w, v, [&](const TableauDelta& z) {
    return w.module().bc_terms(z, r, u0, raising);
  });
}

ModuleVector act_series(const BasisWindow& w, const GeneratorSymbol& g, const ModuleVector& v) {
  const RelationModule& m = w.module();
  using F = GeneratorSymbol::Family;
  switch (g.family) {
    case F::e:
      return apply_terms(w, v, [&](const TableauDelta& z) {
        return m.e_terms(z, g.row, g.superscript);
      });
    case F::f:
      return apply_terms(w, v, [&](const TableauDelta& z) {
        return m.f_terms(z, g.row, g.superscript);
      });
    case F::d:
    case F::dprime: {
      ModuleVector out;
      for (const auto& [z, c] : v) {
        InvSeries s = g.family == F::d ? m.d_series(z, g.row, g.superscript)
                                       : m.dprime_series(z, g.row, g.superscript);
        accumulate(out, z, c * s[g.superscript]);
      }
      return out;
    }
    default:
      throw InputError("act_series takes d, d', e or f");
  }
}

// --------------------------------------------------------------- verifier

namespace {

using Family = GeneratorSymbol::Family;

GeneratorSymbol gen(Family f, int row, int sup) { return {f, row, sup}; }

// Per-thread evaluator with memoised single-tableau actions.
class Evaluator {
 public:
  Evaluator(const BasisWindow& w, int order) : w_(w), order_(order) {}

  ModuleVector apply(const GeneratorSymbol& g, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [z, c] : v) {
      const Terms& t = terms(g, z);
      for (const auto& [y, k] : t) accumulate(out, y, c * k);
    }
    return out;
  }

  ModuleVector word(const std::vector<GeneratorSymbol>& gs, const ModuleVector& v) {
    ModuleVector x = v;
    for (auto it = gs.rbegin(); it != gs.rend(); ++it) x = apply(*it, x);
    return x;
  }

 private:
  const Terms& terms(const GeneratorSymbol& g, const TableauDelta& z) {
    auto key = std::make_tuple(g, z);
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      if (it->second.overflow) throw WindowOverflowError("window overflow");
      return it->second.terms;
    }
    Entry e;
    const RelationModule& m = w_.module();
    switch (g.family) {
      case Family::e:
        e.terms = m.e_terms(z, g.row, g.superscript);
        break;
      case Family::f:
        e.terms = m.f_terms(z, g.row, g.superscript);
        break;
      case Family::d:
      case Family::dprime: {
        const InvSeries& s = series(g.family, g.row, z);
        if (g.superscript > s.order()) throw std::logic_error("series order too small");
        if (s[g.superscript] != 0) e.terms.emplace_back(z, s[g.superscript]);
        break;
      }
      default:
        throw std::logic_error("unsupported generator");
    }
    for (const auto& [y, _] : e.terms)
      if (!w_.in_box(y)) e.overflow = true;
    auto& slot = cache_.emplace(key, std::move(e)).first->second;
    if (slot.overflow) throw WindowOverflowError("window overflow");
    return slot.terms;
  }

  const InvSeries& series(Family f, int row, const TableauDelta& z) {
    auto key = std::make_tuple(f == Family::d, row, z);
    auto it = series_.find(key);
    if (it != series_.end()) return it->second;
    const RelationModule& m = w_.module();
    InvSeries s = f == Family::d ? m.d_series(z, row, order_) : m.dprime_series(z, row, order_);
    return series_.emplace(key, std::move(s)).first->second;
  }

  struct Entry {
    Terms terms;
    bool overflow = false;
  };
  const BasisWindow& w_;
  int order_;
  std::map<std::tuple<GeneratorSymbol, TableauDelta>, Entry> cache_;
  std::map<std::tuple<bool, int, TableauDelta>, InvSeries> series_;
};

void add_into(ModuleVector& acc, const ModuleVector& v, const Scalar& k) {
  for (const auto& [z, c] : v) accumulate(acc, z, c * k);
}

ModuleVector commutator(Evaluator& ev, const GeneratorSymbol& a, const GeneratorSymbol& b,
                        const ModuleVector& v) {
  ModuleVector out = ev.word({a, b}, v);
  add_into(out, ev.word({b, a}, v), -1);
  return out;
}

struct Instance {
  int family;
  std::string label;
  std::function<ModuleVector(Evaluator&, const ModuleVector&)> residual;
};

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "dd", "ef", "de", "df", "ee", "ff", "ee_adjacent", "ff_adjacent",
      "ee_distant", "ff_distant", "serre_e", "serre_f", "noncritical"};
  return names;
}

std::string label(const std::string& fam, std::initializer_list<int> xs) {
  std::string s = fam + "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

std::vector<Instance> relation_instances(const Pyramid& pi, int budget) {
  const int n = pi.n();
  auto emin = [&](int i) { return e_generator_min_degree(pi, i); };
  std::vector<Instance> out;
  using F = Family;

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int r = 1; r <= budget; ++r)
        for (int s = 1; s <= budget; ++s)
          out.push_back({0, label("dd", {i, j, r, s}), [=](Evaluator& ev, const ModuleVector& v) {
                           return commutator(ev, gen(F::d, i, r), gen(F::d, j, s), v);
                         }});

  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      for (int r = emin(i); r <= budget; ++r)
        for (int s = 1; s <= budget; ++s)
          out.push_back({1, label("ef", {i, j, r, s}), [=](Evaluator& ev, const ModuleVector& v) {
                           ModuleVector x = commutator(ev, gen(F::e, i, r), gen(F::f, j, s), v);
                           if (i == j)
                             for (int t = 0; t <= r + s - 1; ++t) {
                               ModuleVector y = v;
                               if (r + s - t - 1 > 0) y = ev.apply(gen(F::d, i + 1, r + s - t - 1), y);
                               if (t > 0) y = ev.apply(gen(F::dprime, i, t), y);
                               add_into(x, y, 1);
                             }
                           return x;
                         }});

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < n; ++j) {
      int sign_e = (i == j) - (i == j + 1);
      for (int r = 1; r <= budget; ++r)
        for (int s = emin(j); s <= budget; ++s)
          out.push_back({2, label("de", {i, j, r, s}), [=](Evaluator& ev, const ModuleVector& v) {
                           ModuleVector x = commutator(ev, gen(F::d, i, r), gen(F::e, j, s), v);
                           for (int t = 0; t < r && sign_e != 0; ++t) {
                             ModuleVector y = ev.apply(gen(F::e, j, r + s - t - 1), v);
                             if (t > 0) y = ev.apply(gen(F::d, i, t), y);
                             add_into(x, y, -sign_e);
                           }
                           return x;
                         }});
      for (int r = 1; r <= budget; ++r)
        for (int s = 1; s <= budget; ++s)
          out.push_back({3, label("df", {i, j, r, s}), [=](Evaluator& ev, const ModuleVector& v) {
                           ModuleVector x = commutator(ev, gen(F::d, i, r), gen(F::f, j, s), v);
                           for (int t = 0; t < r && sign_e != 0; ++t) {
                             ModuleVector y = v;
                             if (t > 0) y = ev.apply(gen(F::d, i, t), y);
                             y = ev.apply(gen(F::f, j, r + s - t - 1), y);
                             add_into(x, y, sign_e);
                           }
                           return x;
                         }});
    }

  for (int i = 1; i < n; ++i) {
    for (int r = emin(i); r <= budget; ++r)
      for (int s = emin(i); s <= budget; ++s)
        out.push_back({4, label("ee", {i, r, s}), [=](Evaluator& ev, const ModuleVector& v) {
                         ModuleVector x = commutator(ev, gen(F::e, i, r), gen(F::e, i, s + 1), v);
                         add_into(x, commutator(ev, gen(F::e, i, r + 1), gen(F::e, i, s), v), -1);
                         add_into(x, ev.word({gen(F::e, i, r), gen(F::e, i, s)}, v), -1);
                         add_into(x, ev.word({gen(F::e, i, s), gen(F::e, i, r)}, v), -1);
                         return x;
                       }});
    for (int r = 1; r <= budget; ++r)
      for (int s = 1; s <= budget; ++s)
        out.push_back({5, label("ff", {i, r, s}), [=](Evaluator& ev, const ModuleVector& v) {
                         ModuleVector x = commutator(ev, gen(F::f, i, r + 1), gen(F::f, i, s), v);
                         add_into(x, commutator(ev, gen(F::f, i, r), gen(F::f, i, s + 1), v), -1);
                         add_into(x, ev.word({gen(F::f, i, r), gen(F::f, i, s)}, v), -1);
                         add_into(x, ev.word({gen(F::f, i, s), gen(F::f, i, r)}, v), -1);
                         return x;
                       }});
  }

  for (int i = 1; i + 1 < n; ++i) {
    for (int r = emin(i); r <= budget; ++r)
      for (int s = emin(i + 1); s <= budget; ++s)
        out.push_back({6, label("ee_adjacent", {i, r, s}), [=](Evaluator& ev, const ModuleVector& v) {
                         ModuleVector x = commutator(ev, gen(F::e, i, r), gen(F::e, i + 1, s + 1), v);
                         add_into(x, commutator(ev, gen(F::e, i, r + 1), gen(F::e, i + 1, s), v), -1);
                         add_into(x, ev.word({gen(F::e, i, r), gen(F::e, i + 1, s)}, v), 1);
                         return x;
                       }});
    for (int r = 1; r <= budget; ++r)
      for (int s = 1; s <= budget; ++s)
        out.push_back({7, label("ff_adjacent", {i, r, s}), [=](Evaluator& ev, const ModuleVector& v) {
                         ModuleVector x = commutator(ev, gen(F::f, i, r + 1), gen(F::f, i + 1, s), v);
                         add_into(x, commutator(ev, gen(F::f, i, r), gen(F::f, i + 1, s + 1), v), -1);
                         add_into(x, ev.word({gen(F::f, i + 1, s), gen(F::f, i, r)}, v), 1);
                         return x;
                       }});
  }

  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) <= 1) continue;
      for (int r = emin(i); r <= budget; ++r)
        for (int s = emin(j); s <= budget; ++s)
          out.push_back({8, label("ee_distant", {i, j, r, s}), [=](Evaluator& ev, const ModuleVector& v) {
                           return commutator(ev, gen(F::e, i, r), gen(F::e, j, s), v);
                         }});
      for (int r = 1; r <= budget; ++r)
        for (int s = 1; s <= budget; ++s)
          out.push_back({9, label("ff_distant", {i, j, r, s}), [=](Evaluator& ev, const ModuleVector& v) {
                           return commutator(ev, gen(F::f, i, r), gen(F::f, j, s), v);
                         }});
    }

  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) != 1) continue;
      for (Family f : {F::e, F::f}) {
        int lo_i = f == F::e ? emin(i) : 1;
        int lo_j = f == F::e ? emin(j) : 1;
        int fam = f == F::e ? 10 : 11;
        for (int r = lo_i; r <= budget; ++r)
          for (int s = r; s <= budget; ++s)
            for (int t = lo_j; t <= budget; ++t)
              out.push_back({fam, label(family_names()[fam], {i, j, r, s, t}),
                             [=](Evaluator& ev, const ModuleVector& v) {
                               GeneratorSymbol a = gen(f, i, r), b = gen(f, i, s), c = gen(f, j, t);
                               // [a,[b,c]] + [b,[a,c]]
                               ModuleVector bc = commutator(ev, b, c, v);
                               ModuleVector ac = commutator(ev, a, c, v);
                               ModuleVector x = ev.apply(a, bc);
                               add_into(x, commutator(ev, b, c, ev.apply(a, v)), -1);
                               add_into(x, ev.apply(b, ac), 1);
                               add_into(x, commutator(ev, a, c, ev.apply(b, v)), -1);
                               return x;
                             }});
      }
    }
  return out;
}

struct TableauOutcome {
  std::vector<long> checked, skipped, violations;
  std::optional<Violation> first;
};

}  // namespace

int default_thread_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("WPI_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return std::max(1, hw);
}

bool VerificationReport::window_overflow() const {
  return std::any_of(families.begin(), families.end(), [](const FamilyReport& f) {
    return f.checked == 0 && f.skipped > 0;
  });
}

namespace {

void verify_one(const RelationModule& m, const VerifyOptions& opt, int inst,
                VerificationReport& report) {
  BasisWindow w(m, opt.radius);
  auto instances = relation_instances(m.pyramid(), opt.budget);
  const auto& names = family_names();
  const auto& members = w.members();
  std::vector<TableauOutcome> outcomes(members.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> stop_at{members.size()};
  int order = 2 * opt.budget + 2;

  auto worker = [&] {
    Evaluator ev(w, order);
    for (;;) {
      std::size_t a = next.fetch_add(1);
      if (a >= members.size() || a > stop_at.load()) break;
      TableauOutcome& out = outcomes[a];
      out.checked.assign(names.size(), 0);
      out.skipped.assign(names.size(), 0);
      out.violations.assign(names.size(), 0);
      ModuleVector v{{members[a], Scalar(1)}};
      for (const auto& ins : instances) {
        ModuleVector res;
        try {
          res = ins.residual(ev, v);
        } catch (const WindowOverflowError&) {
          ++out.skipped[ins.family];
          continue;
        } catch (const CriticalTableauError& err) {
          // the formulas are undefined here, so no module structure exists
          std::size_t crit = names.size() - 1;
          ++out.checked[crit];
          ++out.violations[crit];
          if (!out.first)
            out.first = Violation{inst, names[crit], err.what(), members[a], members[a], Scalar(0)};
          break;
        }
        ++out.checked[ins.family];
        if (!res.empty()) {
          ++out.violations[ins.family];
          if (!out.first) {
            out.first = Violation{inst, names[ins.family], ins.label, members[a],
                                  res.begin()->first, res.begin()->second};
            if (opt.stop_at_first) {
              std::size_t cur = stop_at.load();
              while (a < cur && !stop_at.compare_exchange_weak(cur, a)) {
              }
              break;
            }
          }
        }
      }
    }
  };
  int threads = opt.threads > 0 ? opt.threads : default_thread_count();
  threads = std::max(1, std::min<int>(threads, static_cast<int>(members.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (report.families.empty())
    for (const auto& nm : names) report.families.push_back({nm, 0, 0, 0});
  for (const auto& out : outcomes) {
    if (out.checked.empty()) continue;
    for (std::size_t f = 0; f < names.size(); ++f) {
      report.families[f].checked += out.checked[f];
      report.families[f].skipped += out.skipped[f];
      report.families[f].violations += out.violations[f];
    }
    if (out.first && !report.first_violation) report.first_violation = out.first;
  }
}

}  // namespace

VerificationReport verify_defining_relations(const RelationSet& c, const Tableau& l,
                                             const VerifyOptions& opt) {
  VerificationReport report;
  report.radius = opt.radius;
  report.budget = opt.budget;
  report.instantiations = opt.instantiations;
  for (int inst = 0; inst < opt.instantiations; ++inst) {
    RelationModule m(c, l, generic_instantiate(l.classes(), opt.seed + inst));
    verify_one(m, opt, inst, report);
    if (opt.stop_at_first && report.first_violation) break;
  }
  if (report.families.empty())
    for (const auto& nm : family_names()) report.families.push_back({nm, 0, 0, 0});
  return report;
}

VerificationReport oracle_check(const RelationSet& c, const VerifyOptions& opt) {
  VerificationReport report;
  report.radius = opt.radius;
  report.budget = opt.budget;
  report.instantiations = opt.instantiations;
  for (const auto& nm : family_names()) report.families.push_back({nm, 0, 0, 0});
  if (!is_satisfiable(c)) return report;
  auto arrangements = top_row_arrangements(c);
  for (int inst = 0; inst < opt.instantiations; ++inst) {
    std::vector<Tableau> seeds;
    if (inst == 0) seeds.push_back(*sample_satisfying_tableau(c, 0, opt.seed));
    for (const auto& order : arrangements) {
      Tableau t = *sample_arranged_tableau(c, order, inst, opt.seed);
      if (std::find(seeds.begin(), seeds.end(), t) == seeds.end()) seeds.push_back(std::move(t));
    }
    for (const auto& seed : seeds) {
      RelationModule m(c, seed, generic_instantiate(seed.classes(), opt.seed + inst));
      verify_one(m, opt, inst, report);
      if (opt.stop_at_first && report.first_violation) return report;
    }
  }
  return report;
}

// ---------------------------------------------------------- irreducibility

namespace {

// Longest-path bounds on x_a - x_b implied by the edges of c together with
// the fixed differences of the top row of l.
std::vector<std::vector<long>> difference_bounds(const RelationSet& c, const Tableau& l) {
  const Pyramid& pi = l.pyramid();
  const std::size_t m = triple_count(pi);
  const long none = std::numeric_limits<long>::min();
  std::vector<std::vector<long>> bound(m, std::vector<long>(m, none));
  for (std::size_t a = 0; a < m; ++a) bound[a][a] = 0;
  auto relax = [&](std::size_t a, std::size_t b, long w) { bound[a][b] = std::max(bound[a][b], w); };
  for (const auto& e : c.edges())
    relax(triple_position(pi, e.greater), triple_position(pi, e.lesser), e.strict ? 1 : 0);
  auto top = row_triples(pi, pi.n());
  for (const auto& a : top)
    for (const auto& b : top)
      if (auto d = l.integer_difference(a, b))
        relax(triple_position(pi, a), triple_position(pi, b), *d);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t a = 0; a < m; ++a) {
      if (bound[a][k] == none) continue;
      for (std::size_t b = 0; b < m; ++b)
        if (bound[k][b] != none) relax(a, b, bound[a][k] + bound[k][b]);
    }
  return bound;
}

bool bounds_cover(const std::vector<std::vector<long>>& bound, const RelationSet& c) {
  const Pyramid& pi = c.pyramid();
  for (const auto& e : c.edges()) {
    long have = bound[triple_position(pi, e.greater)][triple_position(pi, e.lesser)];
    if (have == std::numeric_limits<long>::min() || have < (e.strict ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace

bool is_irreducible(const RelationSet& c, const Tableau& l) {
  RelationSet maximal = maximal_set(l);
  return bounds_cover(difference_bounds(c, l), maximal) &&
         bounds_cover(difference_bounds(maximal, l), c);
}

std::set<TableauDelta> cyclicity_probe(const BasisWindow& w, const TableauDelta& start,
                                       int budget) {
  const RelationModule& m = w.module();
  const Pyramid& pi = m.pyramid();
  std::set<TableauDelta> reached{start};
  std::deque<TableauDelta> queue{start};
  auto eigen_key = [&](const TableauDelta& z) {
    std::vector<UniPoly> key;
    for (int r = 1; r < pi.n(); ++r) key.push_back(m.a_eigenvalue(z, r));
    return key;
  };
  while (!queue.empty()) {
    TableauDelta z = queue.front();
    queue.pop_front();
    for (int r = 1; r < pi.n(); ++r) {
      for (bool raising : {true, false}) {
        int lo = raising ? e_generator_min_degree(pi, r) : 1;
        for (int t = lo; t <= budget; ++t) {
          Terms terms = raising ? m.e_terms(z, r, t) : m.f_terms(z, r, t);
          // summands are told apart by their Gelfand-Tsetlin eigenvalues
          std::set<std::vector<std::string>> keys;
          for (const auto& [y, c] : terms) {
            std::vector<std::string> k;
            for (const auto& p : eigen_key(y)) k.push_back(to_string(p));
            if (!keys.insert(k).second)
              throw CriticalTableauError("summands share Gelfand-Tsetlin eigenvalues");
          }
          for (const auto& [y, c] : terms)
            if (w.in_box(y) && reached.insert(y).second) queue.push_back(y);
        }
      }
    }
  }
  return reached;
}

bool probe_irreducible(const BasisWindow& w, int budget) {
  std::set<TableauDelta> all(w.members().begin(), w.members().end());
  for (const auto& z : w.members()) {
    if (z.sup_norm() >= w.radius()) continue;
    if (cyclicity_probe(w, z, budget) != all) return false;
  }
  return true;
}

mpz_class weyl_dimension(const std::vector<long>& lambda) {
  mpz_class num = 1, den = 1;
  const long n = static_cast<long>(lambda.size());
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      num *= lambda[i] - lambda[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

Tableau highest_tableau(const std::vector<Scalar>& lambda) {
  Pyramid pi = Pyramid::one_column(static_cast<int>(lambda.size()));
  std::vector<Scalar> values(triple_count(pi));
  for (const auto& t : triples(pi)) values[triple_position(pi, t)] = lambda[t.j - 1] - t.j + 1;
  return Tableau::from_values(pi, values);
}

}  // namespace wpi
