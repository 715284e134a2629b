#include "wpi/relations.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "wpi/errors.hpp"

namespace wpi {

std::string to_string(const Relation& r) {
  return to_string(r.greater) + (r.strict ? ">" : ">=") + to_string(r.lesser);
}

bool is_allowed(const Pyramid& pi, const Relation& r) {
  if (!is_valid(pi, r.greater) || !is_valid(pi, r.lesser)) return false;
  const int n = pi.n();
  if (r.strict) return r.lesser.i == r.greater.i + 1;
  if (r.greater.i == r.lesser.i + 1) return true;
  return r.greater.i == n && r.lesser.i == n && r.greater.j != r.lesser.j;
}

std::vector<Relation> all_relations(const Pyramid& pi) {
  std::vector<Relation> out;
  auto ts = triples(pi);
  for (const auto& a : ts)
    for (const auto& b : ts)
      for (bool s : {false, true})
        if (Relation r{a, b, s}; is_allowed(pi, r)) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ RelationSet

namespace {

bool top_row_has_cycle(const Pyramid& pi, const std::set<Relation>& edges) {
  std::map<TriIndex, std::vector<TriIndex>> adj;
  for (const auto& e : edges)
    if (e.greater.i == pi.n() && e.lesser.i == pi.n()) adj[e.greater].push_back(e.lesser);
  std::map<TriIndex, int> state;  // 1 on stack, 2 done
  std::function<bool(const TriIndex&)> dfs = [&](const TriIndex& v) {
    state[v] = 1;
    for (const auto& w : adj[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && dfs(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (const auto& [v, _] : adj)
    if (state[v] == 0 && dfs(v)) return true;
  return false;
}

}  // namespace

RelationSet::RelationSet(Pyramid pi, std::set<Relation> edges)
    : pi_(std::move(pi)), edges_(std::move(edges)) {
  for (const auto& e : edges_)
    if (!is_allowed(pi_, e)) throw InputError("relation " + to_string(e) + " is not allowed");
  if (top_row_has_cycle(pi_, edges_)) throw InputError("relations form a loop in the top row");
}

RelationSet RelationSet::standard(const Pyramid& pi) {
  std::set<Relation> s;
  for (int i = 1; i < pi.n(); ++i)
    for (int j = 1; j <= i; ++j)
      for (int k = 1; k <= pi.p(j); ++k) {
        s.insert({{k, i + 1, j}, {k, i, j}, false});
        s.insert({{k, i, j}, {k, i + 1, j + 1}, true});
      }
  return RelationSet(pi, std::move(s));
}

std::set<TriIndex> vertices(const RelationSet& c) {
  std::set<TriIndex> v;
  for (const auto& e : c.edges()) {
    v.insert(e.greater);
    v.insert(e.lesser);
  }
  return v;
}

std::vector<Component> decompose(const RelationSet& c) {
  auto vs = vertices(c);
  std::vector<TriIndex> nodes(vs.begin(), vs.end());
  auto idx = [&](const TriIndex& t) {
    return std::lower_bound(nodes.begin(), nodes.end(), t) - nodes.begin();
  };
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : c.edges()) {
    int a = find(idx(e.greater)), b = find(idx(e.lesser));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  // roots are the least index of their class, so iterating in node order
  // yields components ordered by least triple
  std::map<int, Component> by_root;
  for (std::size_t a = 0; a < nodes.size(); ++a) by_root[find(a)].triples.insert(nodes[a]);
  for (const auto& e : c.edges()) by_root[find(idx(e.greater))].edges.insert(e);
  std::vector<Component> out;
  for (auto& [_, comp] : by_root) out.push_back(std::move(comp));
  return out;
}

// ----------------------------------------------------------- ClosureOrder

ClosureOrder::ClosureOrder(const RelationSet& c) {
  auto vs = vertices(c);
  nodes_.assign(vs.begin(), vs.end());
  const int m = static_cast<int>(nodes_.size());
  std::vector<std::vector<std::pair<int, bool>>> adj(m);
  for (const auto& e : c.edges()) adj[index(e.greater)].push_back({index(e.lesser), e.strict});
  reach_.assign(m, std::vector<int>(m, 0));
  // BFS over (node, seen a strict edge yet)
  for (int src = 0; src < m; ++src) {
    std::vector<std::array<bool, 2>> seen(m, {false, false});
    std::deque<std::pair<int, bool>> q;
    for (auto [w, s] : adj[src]) {
      if (!seen[w][s]) {
        seen[w][s] = true;
        q.push_back({w, s});
      }
    }
    while (!q.empty()) {
      auto [v, s] = q.front();
      q.pop_front();
      for (auto [w, s2] : adj[v]) {
        bool ns = s || s2;
        if (!seen[w][ns]) {
          seen[w][ns] = true;
          q.push_back({w, ns});
        }
      }
    }
    for (int v = 0; v < m; ++v) reach_[src][v] = seen[v][1] ? 2 : (seen[v][0] ? 1 : 0);
  }
}

int ClosureOrder::index(const TriIndex& t) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t);
  if (it == nodes_.end() || *it != t) return -1;
  return static_cast<int>(it - nodes_.begin());
}

bool ClosureOrder::weak(const TriIndex& a, const TriIndex& b) const {
  int x = index(a), y = index(b);
  return x >= 0 && y >= 0 && reach_[x][y] >= 1;
}

bool ClosureOrder::strict(const TriIndex& a, const TriIndex& b) const {
  int x = index(a), y = index(b);
  return x >= 0 && y >= 0 && reach_[x][y] == 2;
}

bool ClosureOrder::consistent() const {
  for (std::size_t a = 0; a < nodes_.size(); ++a)
    if (reach_[a][a] == 2) return false;
  return true;
}

ClosureOrder closure_order(const RelationSet& c) { return ClosureOrder(c); }

// ------------------------------------------------------------ satisfaction

namespace {

// component id per vertex, -1 outside the set
std::map<TriIndex, int> component_ids(const std::vector<Component>& comps) {
  std::map<TriIndex, int> id;
  for (std::size_t a = 0; a < comps.size(); ++a)
    for (const auto& t : comps[a].triples) id[t] = static_cast<int>(a);
  return id;
}

int comp_of(const std::map<TriIndex, int>& id, const TriIndex& t) {
  auto it = id.find(t);
  return it == id.end() ? -1 : it->second;
}

}  // namespace

bool satisfies(const RelationSet& c, const Tableau& l) {
  if (!(c.pyramid() == l.pyramid())) throw InputError("pyramid mismatch");
  for (const auto& e : c.edges()) {
    auto d = l.integer_difference(e.greater, e.lesser);
    if (!d || *d < (e.strict ? 1 : 0)) return false;
  }
  auto id = component_ids(decompose(c));
  const Pyramid& pi = c.pyramid();
  for (int i = 1; i <= pi.n(); ++i) {
    auto row = row_triples(pi, i);
    for (std::size_t a = 0; a < row.size(); ++a)
      for (std::size_t b = a + 1; b < row.size(); ++b) {
        if (!l.integer_difference(row[a], row[b])) continue;
        int ca = comp_of(id, row[a]);
        if (ca < 0 || ca != comp_of(id, row[b])) return false;
      }
  }
  return true;
}

bool is_satisfiable(const RelationSet& c) { return ClosureOrder(c).consistent(); }

bool is_noncritical_set(const RelationSet& c) {
  ClosureOrder ord(c);
  if (!ord.consistent()) return true;
  for (const auto& comp : decompose(c)) {
    std::vector<TriIndex> ts(comp.triples.begin(), comp.triples.end());
    for (std::size_t a = 0; a < ts.size(); ++a)
      for (std::size_t b = a + 1; b < ts.size(); ++b) {
        if (ts[a].i != ts[b].i || ts[a].i == c.pyramid().n()) continue;
        if (!ord.strict(ts[a], ts[b]) && !ord.strict(ts[b], ts[a])) return false;
      }
  }
  return true;
}

// -------------------------------------------------------- admissibility

std::optional<CrossWitness> has_cross(const RelationSet& c, const Component& comp) {
  ClosureOrder ord(c);
  const int n = c.pyramid().n();
  for (const auto& down : comp.edges) {
    if (!down.strict) continue;
    const TriIndex& a = down.greater;  // row i
    const TriIndex& yt = down.lesser;  // row i+1
    for (const auto& up : comp.edges) {
      if (up.strict || up.greater.i != a.i + 1 || up.lesser.i != a.i) continue;
      const TriIndex& ys = up.greater;
      const TriIndex& b = up.lesser;
      if (b == a || ys == yt) continue;
      if (!ord.strict(a, b)) continue;
      bool s_before_t = (ys.i < n) ? ord.strict(ys, yt) : !ord.weak(yt, ys);
      if (s_before_t) return CrossWitness{down, up};
    }
  }
  return std::nullopt;
}

namespace {

// i-th row triples of a component, highest first under ≻_C
std::vector<TriIndex> ordered_row(const Component& comp, const ClosureOrder& ord, int i) {
  std::vector<TriIndex> row;
  for (const auto& t : comp.triples)
    if (t.i == i) row.push_back(t);
  std::sort(row.begin(), row.end(), [&](const TriIndex& x, const TriIndex& y) {
    if (ord.strict(x, y)) return true;
    if (ord.strict(y, x)) return false;
    return x < y;
  });
  return row;
}

// The bridging condition for an adjoining pair a ≻ b in row i.
std::optional<std::vector<Relation>> bridge(const Component& comp, const ClosureOrder& ord,
                                            int n, const TriIndex& a, const TriIndex& b) {
  auto has = [&](const TriIndex& g, const TriIndex& s, bool strict) {
    return comp.edges.count(Relation{g, s, strict}) > 0;
  };
  std::vector<TriIndex> above, below;
  for (const auto& t : comp.triples) {
    if (t.i == a.i + 1) above.push_back(t);
    if (t.i == a.i - 1) below.push_back(t);
  }
  for (const auto& c : above) {
    if (!has(a, c, true) || !has(c, b, false)) continue;
    for (const auto& d : below)
      if (has(a, d, false) && has(d, b, true))
        return std::vector<Relation>{{a, c, true}, {c, b, false}, {a, d, false}, {d, b, true}};
  }
  for (const auto& c1 : above) {
    if (!has(a, c1, true)) continue;
    for (const auto& c2 : above) {
      if (c1 == c2 || !has(c2, b, false)) continue;
      bool before = (c1.i < n) ? ord.strict(c1, c2) : ord.weak(c1, c2);
      if (before) return std::vector<Relation>{{a, c1, true}, {c2, b, false}};
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_pre_admissible(const RelationSet& c) {
  ClosureOrder ord(c);
  if (!ord.consistent()) return true;
  if (!is_noncritical_set(c)) return false;
  for (const auto& comp : decompose(c))
    if (has_cross(c, comp)) return false;
  return true;
}

AdmissibilityCertificate is_admissible(const RelationSet& c) {
  AdmissibilityCertificate cert;
  ClosureOrder ord(c);
  const int n = c.pyramid().n();
  if (!ord.consistent()) {
    for (const auto& t : ord.nodes())
      if (ord.strict(t, t)) {
        cert.triples = {t};
        break;
      }
    cert.admissible = true;
    cert.reason = "unsatisfiable";
    return cert;
  }
  auto comps = decompose(c);
  for (const auto& comp : comps) {
    std::vector<TriIndex> ts(comp.triples.begin(), comp.triples.end());
    for (std::size_t a = 0; a < ts.size(); ++a)
      for (std::size_t b = a + 1; b < ts.size(); ++b) {
        if (ts[a].i != ts[b].i || ts[a].i == n) continue;
        if (!ord.strict(ts[a], ts[b]) && !ord.strict(ts[b], ts[a])) {
          cert.reason = "critical";
          cert.triples = {ts[a], ts[b]};
          return cert;
        }
      }
  }
  for (const auto& comp : comps) {
    if (auto w = has_cross(c, comp)) {
      cert.reason = "cross";
      cert.edges = {w->down, w->up};
      return cert;
    }
  }
  std::vector<Relation> witness;
  for (const auto& comp : comps) {
    for (int i = 1; i < n; ++i) {
      auto row = ordered_row(comp, ord, i);
      for (std::size_t a = 0; a + 1 < row.size(); ++a) {
        auto w = bridge(comp, ord, n, row[a], row[a + 1]);
        if (!w) {
          cert.reason = "bridge";
          cert.triples = {row[a], row[a + 1]};
          return cert;
        }
        witness.insert(witness.end(), w->begin(), w->end());
      }
    }
  }
  cert.admissible = true;
  cert.reason = "ok";
  cert.edges = std::move(witness);
  return cert;
}

// -------------------------------------------------------------- reduction

namespace {

// Drops every edge implied by a path of length >= 2 of at least the same
// strength.  Requires a consistent set (the edge graph is then acyclic).
std::set<Relation> transitive_reduction(const RelationSet& c) {
  std::set<Relation> kept;
  for (const auto& e : c.edges()) {
    std::set<Relation> rest = c.edges();
    rest.erase(e);
    std::map<TriIndex, std::vector<std::pair<TriIndex, bool>>> adj;
    for (const auto& f : rest) adj[f.greater].push_back({f.lesser, f.strict});
    // search from e.greater for e.lesser, tracking strictness
    std::set<std::pair<TriIndex, bool>> seen;
    std::deque<std::pair<TriIndex, bool>> q{{e.greater, false}};
    bool implied = false;
    while (!q.empty() && !implied) {
      auto [v, s] = q.front();
      q.pop_front();
      for (const auto& [w, s2] : adj[v]) {
        bool ns = s || s2;
        if (w == e.lesser && (ns || !e.strict)) {
          implied = true;
          break;
        }
        if (seen.insert({w, ns}).second) q.push_back({w, ns});
      }
    }
    if (!implied) kept.insert(e);
  }
  return kept;
}

}  // namespace

RelationSet reduce(const RelationSet& c) {
  if (!is_noncritical_set(c)) throw PreconditionError("reduce: relation set is critical");
  if (!is_satisfiable(c)) return c;
  return RelationSet(c.pyramid(), transitive_reduction(c));
}

bool implies(const RelationSet& c1, const RelationSet& c2) {
  ClosureOrder o1(c1);
  if (!o1.consistent()) return true;
  for (const auto& e : c2.edges()) {
    if (e.strict ? !o1.strict(e.greater, e.lesser) : !o1.weak(e.greater, e.lesser))
      return false;
  }
  auto id1 = component_ids(decompose(c1));
  auto id2 = component_ids(decompose(c2));
  for (const auto& [a, ca] : id1)
    for (const auto& [b, cb] : id1) {
      if (!(a < b) || a.i != b.i || ca != cb) continue;
      int da = comp_of(id2, a);
      if (da < 0 || da != comp_of(id2, b)) return false;
    }
  return true;
}

bool equivalent(const RelationSet& c1, const RelationSet& c2) {
  return implies(c1, c2) && implies(c2, c1);
}

bool is_extremal(const RelationSet& c, const TriIndex& t) {
  bool in = false, has_above = false, has_below = false;
  for (const auto& e : c.edges()) {
    if (e.lesser == t) in = has_above = true;
    if (e.greater == t) in = has_below = true;
  }
  return in && (!has_above || !has_below);
}

RelationSet rr_remove(const RelationSet& c, const TriIndex& t) {
  if (!is_extremal(c, t))
    throw PreconditionError("rr_remove: " + to_string(t) + " is neither maximal nor minimal");
  std::set<Relation> rest;
  for (const auto& e : c.edges())
    if (e.greater != t && e.lesser != t) rest.insert(e);
  return RelationSet(c.pyramid(), std::move(rest));
}

RelationSet permute(const RelationSet& c, const RowPermutation& sigma) {
  const Pyramid& pi = c.pyramid();
  std::map<std::pair<int, int>, std::pair<int, int>> m;
  std::set<std::pair<int, int>> images;
  for (const auto& [from, to] : sigma.mapping) {
    for (auto [k, j] : {from, to})
      if (!is_valid(pi, {k, sigma.row, j}))
        throw InputError("permutation leaves row " + std::to_string(sigma.row));
    if (!m.emplace(from, to).second || !images.insert(to).second)
      throw InputError("permutation is not a bijection");
  }
  for (const auto& [from, _] : m)
    if (!images.count(from)) throw InputError("permutation is not a bijection");
  auto apply = [&](TriIndex t) {
    if (t.i != sigma.row) return t;
    auto it = m.find({t.k, t.j});
    if (it != m.end()) {
      t.k = it->second.first;
      t.j = it->second.second;
    }
    return t;
  };
  std::set<Relation> out;
  for (const auto& e : c.edges()) out.insert({apply(e.greater), apply(e.lesser), e.strict});
  return RelationSet(pi, std::move(out));
}

RelationSet maximal_set(const Tableau& l) {
  const Pyramid& pi = l.pyramid();
  for (int i = 1; i < pi.n(); ++i) {
    auto row = row_triples(pi, i);
    for (std::size_t a = 0; a < row.size(); ++a)
      for (std::size_t b = a + 1; b < row.size(); ++b)
        if (auto d = l.integer_difference(row[a], row[b]); d && *d == 0)
          throw CriticalTableauError("equal entries at " + to_string(row[a]) + " and " +
                                     to_string(row[b]));
  }
  std::set<Relation> held;
  for (const auto& r : all_relations(pi)) {
    auto d = l.integer_difference(r.greater, r.lesser);
    if (!d || *d < (r.strict ? 1 : 0)) continue;
    // equal top entries: keep one direction only
    if (*d == 0 && r.greater.i == pi.n() && r.lesser.i == pi.n() &&
        std::pair(r.lesser.k, r.lesser.j) < std::pair(r.greater.k, r.greater.j))
      continue;
    held.insert(r);
  }
  RelationSet all(pi, std::move(held));
  RelationSet out(pi, transitive_reduction(all));
  if (!satisfies(out, l))
    throw PreconditionError("tableau does not satisfy its own held relations");
  return out;
}

namespace {

std::optional<Tableau> sample_with(const RelationSet& c, const std::vector<Relation>& extra,
                                   int variant, std::uint64_t seed) {
  if (!is_satisfiable(c)) return std::nullopt;
  const Pyramid& pi = c.pyramid();
  auto comps = decompose(c);
  auto id = component_ids(comps);
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(variant));
  auto ts = triples(pi);
  std::map<TriIndex, long> x;
  const long spread = 2 + variant;
  for (const auto& t : ts)
    x[t] = variant == 0 ? 0 : static_cast<long>(rng() % (2 * spread + 1)) - spread;
  std::vector<Relation> edges(c.edges().begin(), c.edges().end());
  edges.insert(edges.end(), extra.begin(), extra.end());
  // longest-path relaxation; terminates because the constraints are consistent
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : edges) {
      long need = x[e.lesser] + (e.strict ? 1 : 0);
      if (x[e.greater] < need) {
        x[e.greater] = need;
        changed = true;
      }
    }
  }
  std::vector<Entry> entries;
  for (const auto& t : ts) {
    int cid = comp_of(id, t);
    std::string cls = cid >= 0 ? "c" + std::to_string(cid)
                               : "u" + std::to_string(triple_position(pi, t));
    entries.push_back({cls, cid >= 0 ? x[t] : 0});
  }
  return Tableau(pi, std::move(entries));
}

}  // namespace

std::optional<Tableau> sample_satisfying_tableau(const RelationSet& c, int variant,
                                                 std::uint64_t seed) {
  return sample_with(c, {}, variant, seed);
}

std::vector<std::vector<TriIndex>> top_row_arrangements(const RelationSet& c) {
  std::vector<std::vector<TriIndex>> out{{}};
  if (!is_satisfiable(c)) return {};
  const Pyramid& pi = c.pyramid();
  ClosureOrder ord(c);
  for (const auto& comp : decompose(c)) {
    std::vector<TriIndex> top;
    for (const auto& t : comp.triples)
      if (t.i == pi.n()) top.push_back(t);
    if (top.size() < 2) continue;
    std::sort(top.begin(), top.end());
    std::vector<std::vector<TriIndex>> orders;
    do {
      bool ok = true;
      for (std::size_t a = 0; a < top.size() && ok; ++a)
        for (std::size_t b = a + 1; b < top.size() && ok; ++b)
          if (ord.weak(top[b], top[a])) ok = false;
      if (ok) orders.push_back(top);
    } while (std::next_permutation(top.begin(), top.end()));
    std::vector<std::vector<TriIndex>> combined;
    for (const auto& prefix : out)
      for (const auto& o : orders) {
        auto joined = prefix;
        joined.insert(joined.end(), o.begin(), o.end());
        combined.push_back(std::move(joined));
      }
    out = std::move(combined);
  }
  return out;
}

std::optional<Tableau> sample_arranged_tableau(const RelationSet& c,
                                               const std::vector<TriIndex>& top_order,
                                               int variant, std::uint64_t seed) {
  if (!is_satisfiable(c)) return std::nullopt;
  auto comps = decompose(c);
  auto id = component_ids(comps);
  ClosureOrder ord(c);
  std::vector<Relation> extra;
  for (std::size_t a = 0; a + 1 < top_order.size(); ++a) {
    const TriIndex& hi = top_order[a];
    const TriIndex& lo = top_order[a + 1];
    if (comp_of(id, hi) < 0 || comp_of(id, hi) != comp_of(id, lo)) continue;
    if (ord.weak(lo, hi)) throw InputError("top-row order contradicts the relations");
    extra.push_back({hi, lo, true});
  }
  return sample_with(c, extra, variant, seed);
}

}  // namespace wpi
