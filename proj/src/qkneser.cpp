// Copyright 2026 The ncgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ncgap/qkneser.hpp"

#include <algorithm>
#include <limits>

#include "ncgap/error.hpp"
#include "ncgap/network.hpp"
#include "ncgap/subspace.hpp"

namespace ncgap {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

UGraph build_qkneser(std::uint64_t q, std::size_t n, std::size_t m, const Limits& limits) {
  const FieldSpec f = make_field_of_order(q, limits);
  std::vector<Subspace> verts = enumerate_subspaces(f, n, m, limits);
  UGraph g(verts.size());
  if (2 * m <= n) {
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (sum_dim(verts[i], verts[j]) == 2 * m) g.add_edge(i, j);
  }
  g.set_labels(std::move(verts));
  return g;
}

Hypergraph build_qkneser_hyper(std::uint64_t q, std::size_t t, unsigned h, const Limits& limits) {
  if (h < 2) throw InvalidArgument("q-Kneser hypergraph needs h >= 2");
  const KneserNetwork k(q, t, h, limits);
  if (k.terminal_count() > limits.max_terminals) {
    throw LimitExceeded("hypergraph has " + std::to_string(k.terminal_count()) + " hyperedges, over the limit");
  }
  Hypergraph g(k.middle().size(), h);
  k.for_each_terminal([&](std::span<const std::size_t> idx) {
    g.add_edge(std::vector<std::size_t>(idx.begin(), idx.end()));
    return true;
  });
  g.set_labels(k.middle());
  return g;
}

// ---------------------------------------------------------------------------

namespace {

void clique_expand(const UGraph& g, Bitset p, std::vector<std::size_t>& r, std::vector<std::size_t>& best,
                   BudgetMeter& meter) {
  if (!meter.charge()) return;
  // greedy sequential coloring of p gives an upper bound per vertex
  std::vector<std::size_t> order, bound;
  Bitset uncolored = p;
  std::size_t color = 0;
  while (!uncolored.none()) {
    ++color;
    Bitset q = uncolored;
    for (std::size_t v = q.first(); v < q.size(); v = q.next(v + 1)) {
      if (!q.test(v)) continue;
      q.and_not(g.neighbours(v));
      q.reset(v);
      uncolored.reset(v);
      order.push_back(v);
      bound.push_back(color);
    }
  }
  for (std::size_t i = order.size(); i-- > 0;) {
    if (r.size() + bound[i] <= best.size()) return;
    const std::size_t v = order[i];
    r.push_back(v);
    Bitset np = p;
    np &= g.neighbours(v);
    if (np.none()) {
      if (r.size() > best.size()) best = r;
    } else {
      clique_expand(g, np, r, best, meter);
    }
    r.pop_back();
    p.reset(v);
    if (meter.exhausted()) return;
  }
}

class Colorer {
 public:
  Colorer(const UGraph& g, std::size_t k, BudgetMeter& meter)
      : g_(g), k_(k), meter_(meter), color_(g.vertex_count(), kNone), forb_(g.vertex_count() * k, 0),
        sat_(g.vertex_count(), 0) {}

  Outcome run(const std::vector<std::size_t>& pinned) {
    if (pinned.size() > k_) return Outcome::none;
    for (std::size_t i = 0; i < pinned.size(); ++i) {
      if (color_[pinned[i]] != kNone || sat_[pinned[i]] == k_ || forb_[pinned[i] * k_ + i]) return Outcome::none;
      assign(pinned[i], i);
    }
    left_ = g_.vertex_count() - pinned.size();
    const bool ok = dfs(pinned.empty() ? kNone : pinned.size() - 1);
    if (ok) return Outcome::found;
    return meter_.exhausted() ? Outcome::unknown : Outcome::none;
  }

  Coloring coloring() const { return Coloring{color_, k_}; }

 private:
  void assign(std::size_t v, std::size_t c) {
    color_[v] = c;
    for (std::size_t u : g_.neighbour_list(v))
      if (forb_[u * k_ + c]++ == 0) ++sat_[u];
  }
  void unassign(std::size_t v) {
    const std::size_t c = color_[v];
    color_[v] = kNone;
    for (std::size_t u : g_.neighbour_list(v))
      if (--forb_[u * k_ + c] == 0) --sat_[u];
  }

  bool dfs(std::size_t max_used) {
    if (left_ == 0) return true;
    std::size_t v = kNone;
    for (std::size_t u = 0; u < g_.vertex_count(); ++u) {
      if (color_[u] != kNone) continue;
      if (v == kNone || sat_[u] > sat_[v] || (sat_[u] == sat_[v] && g_.degree(u) > g_.degree(v))) v = u;
    }
    const std::size_t limit = max_used == kNone ? 1 : std::min(k_, max_used + 2);
    for (std::size_t c = 0; c < limit; ++c) {
      if (forb_[v * k_ + c]) continue;
      if (!meter_.charge()) return false;
      assign(v, c);
      --left_;
      bool dead = false;
      for (std::size_t u : g_.neighbour_list(v))
        if (color_[u] == kNone && sat_[u] == k_) {
          dead = true;
          break;
        }
      if (!dead && dfs(max_used == kNone ? c : std::max(max_used, c))) return true;
      ++left_;
      unassign(v);
      if (meter_.exhausted()) return false;
    }
    return false;
  }

  const UGraph& g_;
  std::size_t k_;
  BudgetMeter& meter_;
  std::vector<std::size_t> color_;
  std::vector<std::uint32_t> forb_;
  std::vector<std::size_t> sat_;
  std::size_t left_ = 0;
};

ColorabilityResult colorable_with(const UGraph& g, std::size_t k, const std::vector<std::size_t>& pinned,
                                  BudgetMeter& meter) {
  ColorabilityResult res;
  const std::uint64_t before = meter.used();
  if (g.vertex_count() == 0) {
    res.outcome = Outcome::found;
    res.witness = Coloring{{}, k};
    return res;
  }
  if (k == 0) {
    res.outcome = Outcome::none;
    return res;
  }
  Colorer c(g, k, meter);
  res.outcome = c.run(pinned);
  if (res.outcome == Outcome::found) res.witness = c.coloring();
  res.nodes = meter.used() - before;
  return res;
}

}  // namespace

std::vector<std::size_t> max_clique(const UGraph& g, BudgetMeter& meter) {
  std::vector<std::size_t> best, r;
  if (g.vertex_count() == 0) return best;
  best.push_back(0);
  Bitset all(g.vertex_count());
  all.set_all();
  clique_expand(g, all, r, best, meter);
  std::sort(best.begin(), best.end());
  return best;
}

Coloring dsatur_coloring(const UGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> color(n, kNone);
  std::vector<Bitset> seen(n, Bitset(n + 1));
  std::vector<std::size_t> sat(n, 0);
  std::size_t used = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t v = kNone;
    for (std::size_t u = 0; u < n; ++u) {
      if (color[u] != kNone) continue;
      if (v == kNone || sat[u] > sat[v] || (sat[u] == sat[v] && g.degree(u) > g.degree(v))) v = u;
    }
    std::size_t c = 0;
    while (seen[v].test(c)) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
    for (std::size_t u : g.neighbour_list(v)) {
      if (!seen[u].test(c)) {
        seen[u].set(c);
        ++sat[u];
      }
    }
  }
  return Coloring{color, used};
}

ColorabilityResult k_colorable(const UGraph& g, std::size_t k, const std::vector<std::size_t>& pinned,
                               const Budget& budget) {
  BudgetMeter meter(budget);
  return colorable_with(g, k, pinned, meter);
}

ChromaticResult chromatic_number(const UGraph& g, const Budget& budget) {
  ChromaticResult res;
  if (g.vertex_count() == 0) {
    res.exact = true;
    return res;
  }
  BudgetMeter meter(budget);
  res.clique = max_clique(g, meter);
  res.lower = res.clique.size();
  res.witness = dsatur_coloring(g);
  res.upper = res.witness.num_colors;
  for (std::size_t k = res.lower; k < res.upper; ++k) {
    if (meter.exhausted()) break;
    ColorabilityResult c = colorable_with(g, k, res.clique, meter);
    if (c.outcome == Outcome::found) {
      res.upper = k;
      res.witness = std::move(c.witness);
      break;
    }
    if (c.outcome == Outcome::unknown) break;
    res.lower = k + 1;
  }
  res.exact = res.lower == res.upper;
  res.nodes = meter.used();
  return res;
}

ChromaticResult chromatic_number(const Hypergraph& g, const Budget& budget) {
  return chromatic_number(g.cooccurrence_graph(), budget);
}

Coloring canonical_coloring(std::uint64_t q, std::size_t n, std::size_t m, const Limits& limits) {
  if (m < 1 || n < 2 * m) throw InvalidArgument("canonical coloring needs n >= 2m >= 2");
  const FieldSpec f = make_field_of_order(q, limits);
  const std::vector<Subspace> verts = enumerate_subspaces(f, n, m, limits);
  const std::size_t s_dim = n - m + 1;
  const std::vector<Subspace> points = enumerate_subspaces(f, s_dim, 1, limits);
  Matrix s_basis(f, s_dim, n);
  for (std::size_t i = 0; i < s_dim; ++i) s_basis.set(i, i, f.one());
  const Subspace s = Subspace::span(s_basis);

  Coloring c{std::vector<std::size_t>(verts.size()), points.size()};
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const Subspace meet = intersect(verts[v], s);
    if (meet.dim() == 0) throw Error("an m-subspace misses S; dimension count violated");
    std::optional<Subspace> least;
    for (const Subspace& line : enumerate_subspaces(f, meet.dim(), 1, limits)) {
      Subspace l = Subspace::span(line.basis() * meet.basis());
      if (!least || l < *least) least = std::move(l);
    }
    Matrix trunc(f, 1, s_dim);
    for (std::size_t j = 0; j < s_dim; ++j) trunc.set(0, j, least->basis()(0, j));
    const Subspace key = Subspace::span(trunc);
    const auto it = std::lower_bound(points.begin(), points.end(), key);
    if (it == points.end() || !(*it == key)) throw Error("line of S missing from the point list");
    c.colors[v] = static_cast<std::size_t>(it - points.begin());
  }
  return c;
}

// ---------------------------------------------------------------------------

namespace {

class HomSearch {
 public:
  HomSearch(const UGraph& a, const UGraph& b, BudgetMeter& meter, const std::vector<std::optional<std::size_t>>& hint)
      : a_(a), b_(b), meter_(meter), hint_(hint), map_(a.vertex_count(), kNone),
        dom_(a.vertex_count(), Bitset(b.vertex_count())) {
    for (auto& d : dom_) d.set_all();
  }

  bool run() { return dfs(a_.vertex_count()); }
  const std::vector<std::size_t>& map() const { return map_; }

 private:
  bool dfs(std::size_t left) {
    if (left == 0) return true;
    std::size_t v = kNone, best = kNone;
    for (std::size_t u = 0; u < a_.vertex_count(); ++u) {
      if (map_[u] != kNone) continue;
      const std::size_t c = dom_[u].count();
      if (v == kNone || c < best || (c == best && a_.degree(u) > a_.degree(v))) {
        v = u;
        best = c;
      }
    }
    std::vector<std::size_t> values;
    const std::optional<std::size_t> preferred = v < hint_.size() ? hint_[v] : std::nullopt;
    if (preferred && *preferred < b_.vertex_count() && dom_[v].test(*preferred)) values.push_back(*preferred);
    for (std::size_t x = dom_[v].first(); x < dom_[v].size(); x = dom_[v].next(x + 1))
      if (!preferred || x != *preferred) values.push_back(x);

    for (std::size_t x : values) {
      if (!meter_.charge()) return false;
      map_[v] = x;
      const std::size_t mark = trail_.size();
      bool dead = false;
      for (std::size_t u : a_.neighbour_list(v)) {
        if (map_[u] != kNone) continue;
        if (dom_[u].and_count(b_.neighbours(x)) == dom_[u].count()) continue;
        trail_.emplace_back(u, dom_[u]);
        dom_[u] &= b_.neighbours(x);
        if (dom_[u].none()) {
          dead = true;
          break;
        }
      }
      if (!dead && dfs(left - 1)) return true;
      while (trail_.size() > mark) {
        dom_[trail_.back().first] = std::move(trail_.back().second);
        trail_.pop_back();
      }
      map_[v] = kNone;
      if (meter_.exhausted()) return false;
    }
    return false;
  }

  const UGraph& a_;
  const UGraph& b_;
  BudgetMeter& meter_;
  const std::vector<std::optional<std::size_t>>& hint_;
  std::vector<std::size_t> map_;
  std::vector<Bitset> dom_;
  std::vector<std::pair<std::size_t, Bitset>> trail_;
};

}  // namespace

HomomorphismResult find_homomorphism(const UGraph& from, const UGraph& to, const Budget& budget,
                                     const std::vector<std::optional<std::size_t>>& hint) {
  HomomorphismResult res;
  BudgetMeter meter(budget);
  if (from.vertex_count() > 0 && to.vertex_count() == 0) {
    res.outcome = Outcome::none;
    return res;
  }
  HomSearch s(from, to, meter, hint);
  if (s.run()) {
    res.outcome = Outcome::found;
    res.map = s.map();
  } else {
    res.outcome = meter.exhausted() ? Outcome::unknown : Outcome::none;
  }
  res.nodes = meter.used();
  return res;
}

bool is_homomorphism(const UGraph& from, const UGraph& to, const std::vector<std::size_t>& map) {
  if (map.size() != from.vertex_count()) return false;
  for (std::size_t x : map)
    if (x >= to.vertex_count()) return false;
  for (auto [u, v] : from.edges())
    if (!to.adjacent(map[u], map[v])) return false;
  return true;
}

std::vector<std::size_t> spread_clique(std::uint64_t q, std::size_t t, const Limits& limits) {
  const FieldSpec f = make_field_of_order(q, limits);
  const std::vector<Subspace> verts = enumerate_subspaces(f, 2 * t, t, limits);
  std::vector<std::size_t> out;
  for (const Subspace& s : spread(f, t, limits)) {
    const auto it = std::lower_bound(verts.begin(), verts.end(), s);
    if (it == verts.end() || !(*it == s)) throw Error("spread member missing from the subspace list");
    out.push_back(static_cast<std::size_t>(it - verts.begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncgap
