#include "wpi/yangian_tensor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "wpi/errors.hpp"

namespace wpi {

// ----------------------------------------------------------------- weights

std::vector<Scalar> GlWeight::shifted() const {
  std::vector<Scalar> l(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) l[i] = lambda[i] - static_cast<long>(i);
  return l;
}

GlWeight dual_weight(const GlWeight& w) {
  GlWeight out;
  for (auto it = w.lambda.rbegin(); it != w.lambda.rend(); ++it) out.lambda.push_back(-*it);
  return out;
}

bool is_good(const GlWeight& w) {
  const int n = w.n();
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      Scalar d = w.lambda[i - 1] - w.lambda[j - 1];
      if (is_integer(d) && d <= i - j) return false;
    }
  return true;
}

bool is_good(const std::vector<GlWeight>& ws) {
  return std::all_of(ws.begin(), ws.end(), [](const GlWeight& w) { return is_good(w); });
}

bool is_generic(const std::vector<GlWeight>& ws) {
  for (std::size_t a = 0; a < ws.size(); ++a)
    for (std::size_t b = a + 1; b < ws.size(); ++b)
      for (const auto& x : ws[a].lambda)
        for (const auto& y : ws[b].lambda)
          if (is_integer(x - y)) return false;
  return true;
}

// ----------------------------------------------------------- interval sets

bool IntegerRun::contains(const Scalar& x) const {
  Scalar z = x - anchor;
  if (!is_integer(z)) return false;
  if (lo && z < *lo) return false;
  if (hi && z > *hi) return false;
  return excluded.count(x) == 0;
}

bool IntervalSet::contains(const Scalar& x) const {
  return std::any_of(runs.begin(), runs.end(), [&](const IntegerRun& r) { return r.contains(x); });
}

bool IntervalSet::bounded() const {
  return std::all_of(runs.begin(), runs.end(), [](const IntegerRun& r) { return r.lo && r.hi; });
}

std::vector<Scalar> IntervalSet::members() const {
  if (!bounded()) throw std::logic_error("unbounded interval set");
  std::set<Scalar> out;
  for (const auto& r : runs)
    for (long z = *r.lo; z <= *r.hi; ++z) {
      Scalar x = r.anchor + z;
      if (!r.excluded.count(x)) out.insert(x);
    }
  return {out.begin(), out.end()};
}

std::pair<IntervalSet, IntervalSet> interval_sets(const std::vector<Scalar>& l, int i, int j) {
  if (i < 1 || j > static_cast<int>(l.size()) || i >= j)
    throw InputError("interval_sets needs 1 <= i < j <= n");
  // chains of integer-linked entries, each listed by decreasing index
  std::vector<std::vector<int>> chains;
  for (int idx = j; idx >= i; --idx) {
    auto it = std::find_if(chains.begin(), chains.end(), [&](const std::vector<int>& ch) {
      return is_integer(l[ch.front() - 1] - l[idx - 1]);
    });
    if (it == chains.end())
      chains.push_back({idx});
    else
      it->push_back(idx);
  }
  IntervalSet minus, plus;
  for (const auto& ch : chains) {
    const Scalar& first = l[ch.front() - 1];
    const Scalar& last = l[ch.back() - 1];
    std::set<Scalar> excluded;
    for (int idx : ch) excluded.insert(l[idx - 1]);
    // a chain that is not increasing from its first to its last entry
    // behaves like unlinked entries
    bool ordered = true;
    for (std::size_t a = 0; a + 1 < ch.size(); ++a)
      if (!(l[ch[a] - 1] < l[ch[a + 1] - 1])) ordered = false;
    long span = floor_of(last - first).get_si();
    IntegerRun bounded{first, 0L, span, excluded};
    if (ch.front() == j && ordered)
      minus.runs.push_back(bounded);
    else
      minus.runs.push_back({first, std::nullopt, 0L, excluded});
    if (ch.back() == i && ordered)
      plus.runs.push_back(bounded);
    else
      plus.runs.push_back({last, 0L, std::nullopt, excluded});
  }
  return {minus, plus};
}

bool integral_condition(const GlWeight& lambda, const GlWeight& mu) {
  if (lambda.n() != mu.n()) throw InputError("weights of different rank");
  if (!is_good(lambda) || !is_good(mu)) throw InputError("integral_condition needs good weights");
  auto l = lambda.shifted();
  auto m = mu.shifted();
  const int n = lambda.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto [lm, lp] = interval_sets(l, i, j);
      auto [mm, mp] = interval_sets(m, i, j);
      bool first = !lm.contains(m[j - 1]) && !lp.contains(m[i - 1]);
      bool second = !mm.contains(l[j - 1]) && !mp.contains(l[i - 1]);
      if (!first && !second) return false;
    }
  return true;
}

// ------------------------------------------------------- EvaluationFactor

EvaluationFactor::EvaluationFactor(GlWeight lambda, Scalar point, int depth_cap)
    : lambda_(std::move(lambda)), point_(std::move(point)), cap_(depth_cap) {
  if (lambda_.n() < 1) throw InputError("empty weight");
  if (depth_cap < 0) throw InputError("depth cap must be nonnegative");
  if (!is_good(lambda_)) throw InputError("weight is not good");
  Tableau top = highest_tableau(lambda_.lambda);
  const Pyramid& pi = top.pyramid();
  module_ = std::make_unique<RelationModule>(maximal_set(top), top,
                                             generic_instantiate(top.classes(), 0));
  // entries only move down from the highest tableau
  std::vector<std::size_t> free;
  for (int r = 1; r < pi.n(); ++r)
    for (const auto& t : row_triples(pi, r)) free.push_back(triple_position(pi, t));
  TableauDelta z(pi);
  std::function<void(std::size_t, int)> rec = [&](std::size_t a, int left) {
    if (a == free.size()) {
      if (module_->contains(z)) basis_.push_back(z);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      z.add_at(free[a], -x - z[free[a]]);
      rec(a + 1, left - x);
    }
    z.add_at(free[a], -z[free[a]]);
  };
  rec(0, cap_);
  auto depth_of = [](const TableauDelta& d) {
    int s = 0;
    for (int v : d.data()) s -= v;
    return s;
  };
  std::sort(basis_.begin(), basis_.end(), [&](const TableauDelta& a, const TableauDelta& b) {
    int da = depth_of(a), db = depth_of(b);
    if (da != db) return da < db;
    return b < a;
  });
  by_depth_.assign(cap_ + 1, {});
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    index_.emplace(basis_[b], b);
    std::vector<int> k(pi.n() - 1, 0);
    for (int r = 1; r < pi.n(); ++r)
      for (const auto& t : row_triples(pi, r)) k[r - 1] -= basis_[b].get(pi, t);
    kappa_.push_back(std::move(k));
    depth_.push_back(depth_of(basis_[b]));
    by_depth_[depth_.back()].push_back(b);
  }
}

std::size_t EvaluationFactor::index_of(const TableauDelta& z) const {
  auto it = index_.find(z);
  if (it != index_.end()) return it->second;
  int d = 0;
  for (int v : z.data()) d -= v;
  if (d > cap_) throw WindowOverflowError("evaluation factor depth cap exceeded");
  throw std::logic_error("tableau missing from evaluation factor basis");
}

std::map<std::size_t, Scalar> EvaluationFactor::apply_E(int i, int j,
                                                        const std::map<std::size_t, Scalar>& v) const {
  std::map<std::size_t, Scalar> out;
  for (const auto& [b, c] : v)
    for (const auto& [t, x] : E(i, j, b)) out[t] += c * x;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<std::size_t, Scalar> EvaluationFactor::compute_E(int i, int j, std::size_t b) const {
  std::map<std::size_t, Scalar> out;
  const TableauDelta& z = basis_[b];
  if (i == j) {
    Scalar d = module_->d_series(z, i, 1)[1];
    if (d != 0) out[b] = d;
  } else if (j == i + 1) {
    for (const auto& [t, c] : module_->e_terms(z, i, 1)) out[index_of(t)] += c;
  } else if (i == j + 1) {
    for (const auto& [t, c] : module_->f_terms(z, j, 1)) out[index_of(t)] += c;
  } else {
    // E_ij = [E_ik, E_kj] through a neighbouring index k
    int k = j > i ? j - 1 : i - 1;
    std::map<std::size_t, Scalar> unit{{b, Scalar(1)}};
    out = apply_E(i, k, apply_E(k, j, unit));
    auto ba = apply_E(k, j, apply_E(i, k, unit));
    for (const auto& [t, c] : ba) out[t] -= c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

const std::map<std::size_t, Scalar>& EvaluationFactor::E(int i, int j, std::size_t b) const {
  if (i < 1 || j < 1 || i > n() || j > n()) throw InputError("E index out of range");
  auto key = std::make_tuple(i, j, b);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  auto value = compute_E(i, j, b);
  return cache_.emplace(key, std::move(value)).first->second;
}

// ---------------------------------------------------------- vector helpers

namespace {

void prune(TensorVector& v) {
  for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
}

bool is_zero(const SeriesVector& s) {
  return std::all_of(s.begin(), s.end(), [](const TensorVector& v) { return v.empty(); });
}

std::string describe(const TensorKey& key) {
  std::string s = "(";
  for (std::size_t a = 0; a < key.size(); ++a) s += (a ? "," : "") + std::to_string(key[a]);
  return s + ")";
}

std::vector<std::vector<int>> index_tuples(int n, int size, bool distinct) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int a = 1; a <= n; ++a) {
      if (distinct && std::find(cur.begin(), cur.end(), a) != cur.end()) continue;
      cur.push_back(a);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace

SeriesVector series_of(const TensorVector& v, int order) {
  SeriesVector s(order + 1);
  s[0] = v;
  return s;
}

TensorVector add(const TensorVector& a, const TensorVector& b, const Scalar& scale) {
  TensorVector out = a;
  for (const auto& [k, c] : b) out[k] += scale * c;
  prune(out);
  return out;
}

SeriesVector add(const SeriesVector& a, const SeriesVector& b, const Scalar& scale) {
  SeriesVector out(std::max(a.size(), b.size()));
  for (std::size_t t = 0; t < out.size(); ++t) {
    if (t < a.size()) out[t] = a[t];
    if (t < b.size()) out[t] = add(out[t], b[t], scale);
  }
  return out;
}

TensorVector tensor(const TensorVector& a, const TensorVector& b) {
  TensorVector out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      TensorKey k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out[k] += ca * cb;
    }
  prune(out);
  return out;
}

namespace {

SeriesVector tensor_series(const SeriesVector& a, const SeriesVector& b, int order) {
  SeriesVector out(order + 1);
  for (int s = 0; s < static_cast<int>(a.size()) && s <= order; ++s) {
    if (a[s].empty()) continue;
    for (int t = 0; t < static_cast<int>(b.size()) && s + t <= order; ++t) {
      if (b[t].empty()) continue;
      out[s + t] = add(out[s + t], tensor(a[s], b[t]));
    }
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------ TensorModule

TensorModule::TensorModule(const std::vector<GlWeight>& weights, const std::vector<Scalar>& points,
                           int depth)
    : depth_(depth) {
  if (weights.empty()) throw InputError("no tensor factors");
  if (points.size() != weights.size()) throw InputError("one evaluation point per factor");
  const int n = weights.front().n();
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k].n() != n) throw InputError("weights of different rank");
    factors_.push_back(std::make_shared<EvaluationFactor>(weights[k], points[k], depth + n * (n - 1)));
  }
  *this = TensorModule(factors_, depth);
}

TensorModule::TensorModule(std::vector<std::shared_ptr<const EvaluationFactor>> factors, int depth)
    : factors_(std::move(factors)), depth_(depth) {
  if (factors_.empty()) throw InputError("no tensor factors");
  for (const auto& f : factors_) {
    if (f->n() != factors_.front()->n()) throw InputError("weights of different rank");
    if (f->depth_cap() < depth) throw InputError("factor depth cap below module depth");
  }
  TensorKey key(factors_.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == factors_.size()) {
      basis_.push_back(key);
      return;
    }
    for (int d = 0; d <= left; ++d)
      for (std::size_t b : factors_[k]->at_depth(d)) {
        key[k] = b;
        rec(k + 1, left - d);
      }
  };
  rec(0, depth_);
  std::sort(basis_.begin(), basis_.end(), [&](const TensorKey& a, const TensorKey& b) {
    int da = key_depth(a), db = key_depth(b);
    return da != db ? da < db : a < b;
  });
}

std::vector<int> TensorModule::kappa(const TensorKey& key) const {
  std::vector<int> k(n() - 1, 0);
  for (std::size_t f = 0; f < key.size(); ++f) {
    const auto& kf = factors_[f]->kappa(key[f]);
    for (std::size_t r = 0; r < k.size(); ++r) k[r] += kf[r];
  }
  return k;
}

int TensorModule::key_depth(const TensorKey& key) const {
  int d = 0;
  for (std::size_t f = 0; f < key.size(); ++f) d += factors_[f]->depth(key[f]);
  return d;
}

std::vector<std::vector<int>> TensorModule::weights(int d) const {
  std::set<std::vector<int>> out;
  for (const auto& key : basis_)
    if (key_depth(key) <= d) out.insert(kappa(key));
  std::vector<std::vector<int>> v(out.begin(), out.end());
  std::stable_sort(v.begin(), v.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  return v;
}

std::vector<TensorKey> TensorModule::weight_space(const std::vector<int>& k) const {
  int d = std::accumulate(k.begin(), k.end(), 0);
  if (d > depth_) throw InputError("weight space beyond module depth");
  std::vector<TensorKey> out;
  for (const auto& key : basis_)
    if (key_depth(key) == d && kappa(key) == k) out.push_back(key);
  return out;
}

const SeriesVector& TensorModule::t_on_key(int i, int j, const Scalar& shift, const TensorKey& key,
                                           int order) const {
  const int n = this->n();
  if (i < 1 || j < 1 || i > n || j > n) throw InputError("t index out of range");
  auto ck = std::make_tuple(i, j, shift, key);
  auto it = cache_.find(ck);
  if (it != cache_.end() && static_cast<int>(it->second.size()) > order) return it->second;

  // running index a -> partial tensors over the factors seen so far
  std::map<int, SeriesVector> states;
  states[i] = series_of(TensorVector{{TensorKey{}, Scalar(1)}}, order);
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const EvaluationFactor& fac = *factors_[f];
    Scalar p = fac.point() + shift;
    std::map<int, SeriesVector> next;
    for (const auto& [a, partial] : states) {
      if (is_zero(partial)) continue;
      for (int b = 1; b <= n; ++b) {
        SeriesVector fs(order + 1);
        if (a == b) fs[0][TensorKey{key[f]}] = 1;
        const auto& img = fac.E(a, b, key[f]);
        if (!img.empty()) {
          Scalar pw = 1;
          for (int t = 1; t <= order; ++t) {
            for (const auto& [tb, c] : img) fs[t][TensorKey{tb}] += pw * c;
            pw *= p;
          }
        }
        if (is_zero(fs)) continue;
        SeriesVector prod = tensor_series(partial, fs, order);
        auto slot = next.find(b);
        if (slot == next.end())
          next.emplace(b, std::move(prod));
        else
          slot->second = add(slot->second, prod);
      }
    }
    states = std::move(next);
  }
  SeriesVector result = states.count(j) ? states[j] : SeriesVector(order + 1);
  result.resize(order + 1);
  for (auto& v : result) prune(v);
  return cache_[ck] = std::move(result);
}

SeriesVector TensorModule::apply_t(int i, int j, const Scalar& shift, const SeriesVector& v,
                                   int order) const {
  SeriesVector out(order + 1);
  for (int t0 = 0; t0 < static_cast<int>(v.size()) && t0 <= order; ++t0)
    for (const auto& [key, c] : v[t0]) {
      const SeriesVector& img = t_on_key(i, j, shift, key, order - t0);
      for (int t = 0; t0 + t <= order; ++t)
        for (const auto& [k2, c2] : img[t]) out[t0 + t][k2] += c * c2;
    }
  for (auto& x : out) prune(x);
  return out;
}

TensorVector TensorModule::apply_coefficient(int i, int j, int r, const TensorVector& v) const {
  if (r == 0) return i == j ? v : TensorVector{};
  TensorVector out;
  for (const auto& [key, c] : v)
    for (const auto& [k2, c2] : t_on_key(i, j, Scalar(0), key, r)[r]) out[k2] += c * c2;
  prune(out);
  return out;
}

SeriesVector TensorModule::quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols,
                                         const TensorVector& v, int order) const {
  if (rows.size() != cols.size() || rows.empty()) throw InputError("minor index lists differ in length");
  const std::size_t k = rows.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  SeriesVector total(order + 1);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inversions;
    SeriesVector cur = series_of(v, order);
    for (std::size_t idx = k; idx-- > 0;) {
      cur = apply_t(rows[perm[idx]], cols[idx], Scalar(static_cast<long>(idx)), cur, order);
      if (is_zero(cur)) break;
    }
    total = add(total, cur, inversions % 2 ? Scalar(-1) : Scalar(1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// ------------------------------------------------------- structure checks

StructureCheck check_rtt(const TensorModule& m, int max_depth, int max_superscript) {
  StructureCheck out{"rtt", 0, std::nullopt};
  const int n = m.n();
  auto op = [&](int i, int j, int r, const TensorVector& v) { return m.apply_coefficient(i, j, r, v); };
  for (const auto& key : m.basis()) {
    if (m.key_depth(key) > max_depth) continue;
    TensorVector v{{key, Scalar(1)}};
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            for (int r = 0; r <= max_superscript; ++r)
              for (int s = 0; s <= max_superscript; ++s) {
                TensorVector lhs = op(i, j, r + 1, op(k, l, s, v));
                lhs = add(lhs, op(k, l, s, op(i, j, r + 1, v)), -1);
                lhs = add(lhs, op(i, j, r, op(k, l, s + 1, v)), -1);
                lhs = add(lhs, op(k, l, s + 1, op(i, j, r, v)));
                TensorVector rhs = add(op(k, j, r, op(i, l, s, v)), op(k, j, s, op(i, l, r, v)), -1);
                ++out.checked;
                if (!add(lhs, rhs, -1).empty() && !out.failure) {
                  out.failure = "t indices " + std::to_string(i) + std::to_string(j) + "," +
                                std::to_string(k) + std::to_string(l) + " r=" + std::to_string(r) +
                                " s=" + std::to_string(s) + " at " + describe(key);
                  return out;
                }
              }
  }
  return out;
}

StructureCheck check_minor_antisymmetry(const TensorModule& m, int size, int max_depth, int order) {
  StructureCheck out{"minor-antisymmetry", 0, std::nullopt};
  const int n = m.n();
  auto all = index_tuples(n, size, false);
  for (const auto& key : m.basis()) {
    if (m.key_depth(key) > max_depth) continue;
    TensorVector v{{key, Scalar(1)}};
    for (const auto& rows : all)
      for (const auto& cols : all) {
        SeriesVector base = m.quantum_minor(rows, cols, v, order);
        ++out.checked;
        bool repeated_row = std::set<int>(rows.begin(), rows.end()).size() < rows.size();
        bool repeated_col = std::set<int>(cols.begin(), cols.end()).size() < cols.size();
        if ((repeated_row || repeated_col) && !is_zero(base)) {
          out.failure = "minor with a repeated index is nonzero at " + describe(key);
          return out;
        }
        for (int a = 0; a + 1 < size; ++a) {
          auto r2 = rows;
          std::swap(r2[a], r2[a + 1]);
          auto c2 = cols;
          std::swap(c2[a], c2[a + 1]);
          if (!is_zero(add(m.quantum_minor(r2, cols, v, order), base)) ||
              !is_zero(add(m.quantum_minor(rows, c2, v, order), base))) {
            out.failure = "minor not antisymmetric at " + describe(key);
            return out;
          }
        }
      }
  }
  return out;
}

StructureCheck check_coproduct_minors(const TensorModule& m, int size, int max_depth, int order) {
  StructureCheck out{"coproduct-minors", 0, std::nullopt};
  if (m.factor_count() != 2) throw InputError("coproduct check needs two factors");
  TensorModule first({m.factor_ptr(0)}, max_depth);
  TensorModule second({m.factor_ptr(1)}, max_depth);
  const int n = m.n();
  auto tuples = index_tuples(n, size, true);
  std::vector<std::vector<int>> increasing;
  for (const auto& t : tuples)
    if (std::is_sorted(t.begin(), t.end())) increasing.push_back(t);
  for (const auto& key : m.basis()) {
    if (m.key_depth(key) > max_depth) continue;
    TensorVector v{{key, Scalar(1)}};
    TensorVector v1{{TensorKey{key[0]}, Scalar(1)}};
    TensorVector v2{{TensorKey{key[1]}, Scalar(1)}};
    for (const auto& rows : tuples)
      for (const auto& cols : tuples) {
        SeriesVector lhs = m.quantum_minor(rows, cols, v, order);
        SeriesVector rhs(order + 1);
        for (const auto& mid : increasing)
          rhs = add(rhs, tensor_series(first.quantum_minor(rows, mid, v1, order),
                                       second.quantum_minor(mid, cols, v2, order), order));
        ++out.checked;
        if (!is_zero(add(lhs, rhs, -1))) {
          out.failure = "coproduct of a minor differs at " + describe(key);
          return out;
        }
      }
  }
  return out;
}

InvSeries predicted_a_series(const TensorModule& m, int size, int order) {
  InvSeries total = InvSeries::one(order);
  for (std::size_t f = 0; f < m.factor_count(); ++f) {
    const EvaluationFactor& fac = m.factor(f);
    for (int i = 1; i <= size; ++i) {
      // 1 + lambda_i / (u - a - i + 1)
      Scalar c = fac.point() + (i - 1);
      std::vector<Scalar> coeffs(order + 1);
      coeffs[0] = 1;
      Scalar pw = 1;
      for (int t = 1; t <= order; ++t) {
        coeffs[t] = fac.weight().lambda[i - 1] * pw;
        pw *= c;
      }
      total = total * InvSeries(coeffs);
    }
  }
  return total;
}

StructureCheck check_drinfeld_a(const TensorModule& m, int max_depth, int order) {
  StructureCheck out{"drinfeld-a", 0, std::nullopt};
  const int n = m.n();
  auto scaled = [&](const InvSeries& s, const TensorVector& v) {
    SeriesVector r(order + 1);
    for (int t = 0; t <= order; ++t) r[t] = add(TensorVector{}, v, s[t]);
    return r;
  };
  for (int size = 1; size <= n; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 1);
    InvSeries expect = predicted_a_series(m, size, order);
    for (const auto& key : m.basis()) {
      if (m.key_depth(key) > max_depth) continue;
      if (size < n && key != m.highest()) continue;
      TensorVector v{{key, Scalar(1)}};
      ++out.checked;
      if (!is_zero(add(m.quantum_minor(idx, idx, v, order), scaled(expect, v), -1))) {
        out.failure = "a_" + std::to_string(size) + " eigenvalue differs at " + describe(key);
        return out;
      }
    }
  }
  return out;
}

// -------------------------------------------------------- singular vectors

std::vector<std::vector<Scalar>> exact_nullspace(const std::vector<std::vector<Scalar>>& rows,
                                                 std::size_t columns) {
  // integer rows, then fraction-free (Bareiss) elimination
  std::vector<std::vector<mpz_class>> a;
  for (const auto& row : rows) {
    if (row.size() != columns) throw InputError("ragged matrix");
    mpz_class den = 1;
    for (const auto& x : row) den = lcm(den, mpz_class(x.get_den()));
    std::vector<mpz_class> ir(columns);
    bool nonzero = false;
    for (std::size_t c = 0; c < columns; ++c) {
      ir[c] = row[c].get_num() * (den / row[c].get_den());
      nonzero = nonzero || ir[c] != 0;
    }
    if (nonzero) a.push_back(std::move(ir));
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < columns && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t k = c + 1; k < columns; ++k) {
        mpz_class v = a[r][c] * a[i][k] - a[i][c] * a[r][k];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][k] = v;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> x(columns, Scalar(0));
    x[f] = 1;
    for (std::size_t row = pivots.size(); row-- > 0;) {
      std::size_t pc = pivots[row];
      Scalar acc = 0;
      for (std::size_t k = pc + 1; k < columns; ++k)
        if (x[k] != 0) acc += Scalar(a[row][k]) * x[k];
      x[pc] = -acc / Scalar(a[row][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<TensorVector> find_singular_vectors(const TensorModule& m, const std::vector<int>& kappa,
                                                int order) {
  const int n = m.n();
  auto space = m.weight_space(kappa);
  if (space.empty()) return {};
  std::map<std::tuple<int, int, TensorKey>, std::vector<Scalar>> rows;
  for (std::size_t col = 0; col < space.size(); ++col) {
    TensorVector v{{space[col], Scalar(1)}};
    for (int mm = 1; mm < n; ++mm) {
      if (kappa[mm - 1] == 0) continue;
      std::vector<int> top(mm), bottom(mm);
      std::iota(top.begin(), top.end(), 1);
      std::iota(bottom.begin(), bottom.end(), 1);
      bottom.back() = mm + 1;
      SeriesVector img = m.quantum_minor(top, bottom, v, order);
      for (int t = 0; t <= order; ++t)
        for (const auto& [key, c] : img[t]) {
          auto& row = rows[{mm, t, key}];
          if (row.empty()) row.assign(space.size(), Scalar(0));
          row[col] = c;
        }
    }
  }
  std::vector<std::vector<Scalar>> matrix;
  for (auto& [k, row] : rows) matrix.push_back(std::move(row));
  std::vector<TensorVector> out;
  for (const auto& x : exact_nullspace(matrix, space.size())) {
    TensorVector v;
    for (std::size_t col = 0; col < space.size(); ++col)
      if (x[col] != 0) v[space[col]] = x[col];
    out.push_back(std::move(v));
  }
  return out;
}

int default_singular_order(int n, int depth) { return n * depth + n; }

std::vector<SingularCount> singular_profile(const TensorModule& m, int depth, int order) {
  if (order <= 0) order = default_singular_order(m.n(), depth);
  std::vector<SingularCount> out;
  for (const auto& k : m.weights(depth)) {
    SingularCount sc;
    sc.kappa = k;
    sc.depth = std::accumulate(k.begin(), k.end(), 0);
    sc.dimension = m.weight_space(k).size();
    sc.singular = find_singular_vectors(m, k, order).size();
    out.push_back(std::move(sc));
  }
  return out;
}

bool only_top_singular(const std::vector<SingularCount>& profile) {
  for (const auto& sc : profile) {
    std::size_t expect = sc.depth == 0 ? 1 : 0;
    if (sc.singular != expect) return false;
  }
  return true;
}

}  // namespace wpi
