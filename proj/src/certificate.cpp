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

#include "ncgap/certificate.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "ncgap/error.hpp"
#include "ncgap/subspace.hpp"

namespace ncgap::cert {

namespace {

// Adjacency matrix plus, for hypergraphs, the hyperedges themselves.
struct Rebuilt {
  std::size_t n = 0;
  std::vector<std::vector<char>> adj;
  std::vector<std::vector<std::size_t>> hyperedges;

  void join(std::size_t u, std::size_t v) {
    if (u == v) return;
    adj[u][v] = adj[v][u] = 1;
  }
};

Rebuilt rebuild_graph(const json& spec) {
  Rebuilt g;
  auto kind = spec.at("kind").get<std::string>();
  if (kind == "qkneser") {
    auto q = spec.at("q").get<std::uint64_t>();
    auto n = spec.at("n").get<std::size_t>();
    auto m = spec.at("m").get<std::size_t>();
    auto f = make_field_of_order(q);
    auto verts = enumerate_subspaces(f, n, m);
    g.n = verts.size();
    g.adj.assign(g.n, std::vector<char>(g.n, 0));
    for (std::size_t i = 0; i < g.n; ++i)
      for (std::size_t j = i + 1; j < g.n; ++j)
        if (sum_dim(verts[i], verts[j]) == 2 * m) g.join(i, j);
  } else if (kind == "qkneser_hyper") {
    auto q = spec.at("q").get<std::uint64_t>();
    auto t = spec.at("t").get<std::size_t>();
    auto h = spec.at("h").get<std::size_t>();
    auto f = make_field_of_order(q);
    auto verts = enumerate_subspaces(f, h * t, t);
    g.n = verts.size();
    g.adj.assign(g.n, std::vector<char>(g.n, 0));
    std::vector<std::size_t> pick(h);
    std::vector<Subspace> parts(h);
    // All h-subsets in lexicographic order.
    for (std::size_t i = 0; i < h; ++i) pick[i] = i;
    while (h <= g.n) {
      for (std::size_t i = 0; i < h; ++i) parts[i] = verts[pick[i]];
      if (sum_dim(parts) == h * t) {
        g.hyperedges.push_back(pick);
        for (std::size_t a = 0; a < h; ++a)
          for (std::size_t b = a + 1; b < h; ++b) g.join(pick[a], pick[b]);
      }
      std::size_t i = h;
      while (i > 0 && pick[i - 1] == g.n - h + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t k = i; k < h; ++k) pick[k] = pick[k - 1] + 1;
    }
  } else if (kind == "complete") {
    g.n = spec.at("n").get<std::size_t>();
    g.adj.assign(g.n, std::vector<char>(g.n, 1));
    for (std::size_t i = 0; i < g.n; ++i) g.adj[i][i] = 0;
  } else if (kind == "explicit") {
    auto vertices = spec.at("vertices").get<std::vector<std::int64_t>>();
    std::map<std::int64_t, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
    if (index.size() != vertices.size()) throw InvalidArgument("duplicate vertex ids");
    g.n = vertices.size();
    g.adj.assign(g.n, std::vector<char>(g.n, 0));
    for (const auto& e : spec.at("edges")) {
      auto a = index.at(e.at(0).get<std::int64_t>());
      auto b = index.at(e.at(1).get<std::int64_t>());
      if (a == b) throw InvalidArgument("self-loop in graph");
      g.join(a, b);
    }
  } else {
    throw InvalidArgument("unknown graph kind '" + kind + "'");
  }
  return g;
}

// k-colorability by backtracking over bitmask domains, smallest domain
// first, with `pinned` fixed to colors 0, 1, ...
Outcome colorable(const Rebuilt& g, std::size_t k, const std::vector<std::size_t>& pinned,
                  std::uint64_t max_nodes) {
  if (k == 0) return g.n == 0 ? Outcome::found : Outcome::none;
  if (k > 64) return Outcome::found;
  const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  std::vector<std::uint64_t> dom(g.n, all);
  std::vector<int> color(g.n, -1);
  std::vector<std::vector<std::size_t>> nbr(g.n);
  for (std::size_t u = 0; u < g.n; ++u)
    for (std::size_t v = 0; v < g.n; ++v)
      if (g.adj[u][v]) nbr[u].push_back(v);

  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  struct Change {
    std::size_t v;
    std::uint64_t old;
  };
  std::vector<Change> trail;

  auto assign = [&](std::size_t v, int c) {
    color[v] = c;
    for (auto w : nbr[v]) {
      if (color[w] >= 0) {
        if (color[w] == c) return false;
        continue;
      }
      if (dom[w] >> c & 1) {
        trail.push_back({w, dom[w]});
        dom[w] &= ~(std::uint64_t{1} << c);
        if (dom[w] == 0) return false;
      }
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      dom[trail.back().v] = trail.back().old;
      trail.pop_back();
    }
  };

  int max_used = -1;
  for (std::size_t i = 0; i < pinned.size(); ++i) {
    if (i >= k) return Outcome::none;
    if (!assign(pinned[i], static_cast<int>(i))) return Outcome::none;
    max_used = static_cast<int>(i);
  }

  std::function<bool(int)> rec = [&](int used) -> bool {
    if (++nodes > max_nodes) {
      out_of_budget = true;
      return false;
    }
    std::size_t best = g.n;
    int best_size = 65;
    for (std::size_t v = 0; v < g.n; ++v) {
      if (color[v] >= 0) continue;
      int s = std::popcount(dom[v]);
      if (s < best_size || (s == best_size && nbr[v].size() > nbr[best].size())) {
        best = v;
        best_size = s;
      }
    }
    if (best == g.n) return true;
    for (int c = 0; c < static_cast<int>(k) && c <= used + 1; ++c) {
      if (!(dom[best] >> c & 1)) continue;
      auto mark = trail.size();
      if (assign(best, c) && rec(std::max(used, c))) return true;
      color[best] = -1;
      undo(mark);
      if (out_of_budget) return false;
    }
    return false;
  };
  if (rec(max_used)) return Outcome::found;
  return out_of_budget ? Outcome::unknown : Outcome::none;
}

void check_coloring(const json& c, const Budget& budget, CheckReport& rep) {
  auto g = rebuild_graph(c.at("graph"));
  auto colors = c.at("colors").get<std::vector<std::size_t>>();
  if (colors.size() != g.n) {
    rep.fail("coloring has " + std::to_string(colors.size()) + " entries for " + std::to_string(g.n) + " vertices");
    return;
  }
  std::set<std::size_t> used(colors.begin(), colors.end());
  bool proper = true;
  for (std::size_t u = 0; u < g.n && proper; ++u)
    for (std::size_t v = u + 1; v < g.n; ++v)
      if (g.adj[u][v] && colors[u] == colors[v]) {
        rep.fail("vertices " + std::to_string(u) + " and " + std::to_string(v) + " share color " +
                 std::to_string(colors[u]));
        proper = false;
        break;
      }
  if (!proper) return;
  rep.pass("coloring is proper with " + std::to_string(used.size()) + " colors");

  const auto& claim = c.at("claim");
  if (claim.contains("colors") && claim["colors"].get<std::size_t>() != used.size())
    rep.fail("claimed " + claim["colors"].dump() + " colors, certificate uses " + std::to_string(used.size()));
  if (!claim.contains("chromatic_number")) return;
  auto chi = claim["chromatic_number"].get<std::size_t>();
  if (used.size() > chi) {
    rep.fail("coloring uses more colors than the claimed chromatic number");
    return;
  }
  if (!claim.value("exact", false)) return;
  std::vector<std::size_t> clique;
  if (c.contains("clique")) clique = c["clique"].get<std::vector<std::size_t>>();
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (clique[i] >= g.n || clique[j] >= g.n || !g.adj[clique[i]][clique[j]]) {
        rep.fail("listed clique is not a clique");
        return;
      }
  if (!clique.empty()) rep.pass("clique of size " + std::to_string(clique.size()));
  if (clique.size() >= chi) {
    rep.pass("chromatic number " + std::to_string(chi) + " matched by the clique");
    return;
  }
  switch (colorable(g, chi - 1, clique, budget.max_nodes)) {
    case Outcome::none: rep.pass("independent search: no " + std::to_string(chi - 1) + "-coloring"); break;
    case Outcome::found: rep.fail("independent search found a " + std::to_string(chi - 1) + "-coloring"); break;
    case Outcome::unknown:
      rep.unverified.push_back("no " + std::to_string(chi - 1) + "-coloring (re-search ran out of budget)");
      break;
  }
}

void check_homomorphism(const json& c, CheckReport& rep) {
  auto from = rebuild_graph(c.at("from"));
  auto to = rebuild_graph(c.at("to"));
  auto map = c.at("map").get<std::vector<std::size_t>>();
  if (map.size() != from.n) {
    rep.fail("map has the wrong length");
    return;
  }
  for (auto v : map)
    if (v >= to.n) {
      rep.fail("map leaves the target graph");
      return;
    }
  for (std::size_t u = 0; u < from.n; ++u)
    for (std::size_t v = u + 1; v < from.n; ++v)
      if (from.adj[u][v] && !to.adj[map[u]][map[v]]) {
        rep.fail("edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not preserved");
        return;
      }
  rep.pass("homomorphism preserves all edges");
}

// Works from the raw JSON so that no Network logic is involved.
void check_network_code(const json& net, const json& code, CheckReport& rep, const std::string& what) {
  auto h = net.at("h").get<std::size_t>();
  auto source = net.at("source").get<std::size_t>();
  auto terminals = net.at("terminals").get<std::vector<std::size_t>>();
  std::size_t nodes = net.at("nodes").size();
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : net.at("edges"))
    edges[e.at("id").get<std::size_t>()] = {e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>()};

  auto field = make_field(code.at("p").get<std::uint32_t>(), code.at("m").get<std::uint32_t>());
  auto t = code.at("t").get<std::size_t>();
  if (code.at("h").get<std::size_t>() != h) {
    rep.fail(what + ": code has h = " + code["h"].dump() + ", network has h = " + std::to_string(h));
    return;
  }
  const std::size_t width = h * t;
  std::map<std::size_t, Matrix> g;
  for (const auto& [id, _] : edges) {
    auto key = std::to_string(id);
    if (!code.at("edges").contains(key)) {
      rep.fail(what + ": edge " + key + " has no matrix");
      return;
    }
    auto m = io::matrix_from_json(field, code["edges"][key], width);
    if (m.rows() != t) {
      rep.fail(what + ": edge " + key + " matrix has " + std::to_string(m.rows()) + " rows");
      return;
    }
    g.emplace(id, std::move(m));
  }
  std::vector<std::vector<std::size_t>> in(nodes);
  for (const auto& [id, ends] : edges) in.at(ends.second).push_back(id);
  auto stacked = [&](std::size_t v) {
    Matrix s(field, 0, width);
    for (auto e : in[v])
      for (std::size_t r = 0; r < t; ++r) s.append_row(g.at(e).row(r));
    return s;
  };
  for (const auto& [id, ends] : edges) {
    if (ends.first == source) continue;
    auto s = stacked(ends.first);
    if (rank(vstack(s, g.at(id))) != rank(s)) {
      rep.fail(what + ": edge " + std::to_string(id) + " carries content its tail does not receive");
      return;
    }
  }
  for (auto v : terminals) {
    auto r = rank(stacked(v));
    if (r != width) {
      rep.fail(what + ": terminal " + std::to_string(v) + " has rank " + std::to_string(r) + " < " +
               std::to_string(width));
      return;
    }
  }
  rep.pass(what + ": (" + std::to_string(field.q()) + "," + std::to_string(t) + ")-linear solution on " +
           std::to_string(edges.size()) + " edges, " + std::to_string(terminals.size()) + " terminals");
}

void check_ic(const json& c, CheckReport& rep) {
  auto q = c.at("q").get<std::uint64_t>();
  auto t = c.at("t").get<std::size_t>();
  auto h = c.at("h").get<std::size_t>();
  auto alpha = c.at("alpha").get<std::size_t>();
  auto f = make_field_of_order(q);
  std::vector<Subspace> members;
  for (const auto& rows : c.at("members")) {
    auto s = Subspace::span(io::matrix_from_json(f, rows, h * t));
    if (s.dim() != t) {
      rep.fail("member of dimension " + std::to_string(s.dim()));
      return;
    }
    members.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i] == members[j]) {
        rep.fail("members " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
        return;
      }
  const std::size_t k = members.size();
  if (alpha <= k) {
    std::vector<std::size_t> pick(alpha);
    for (std::size_t i = 0; i < alpha; ++i) pick[i] = i;
    std::vector<Subspace> parts(alpha);
    while (true) {
      for (std::size_t i = 0; i < alpha; ++i) parts[i] = members[pick[i]];
      if (sum_dim(parts) != alpha * t) {
        rep.fail("some " + std::to_string(alpha) + " members do not form a direct sum");
        return;
      }
      std::size_t i = alpha;
      while (i > 0 && pick[i - 1] == k - alpha + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t x = i; x < alpha; ++x) pick[x] = pick[x - 1] + 1;
    }
  }
  rep.pass(std::to_string(k) + " members, every " + std::to_string(alpha) + " in direct sum");
  const auto& claim = c.at("claim");
  if (claim.contains("size") && claim["size"].get<std::size_t>() != k) rep.fail("claimed size differs from member count");
  if (claim.value("maximum", false)) {
    // (q^{(h-alpha+2)t} - 1) / (q^t - 1) + alpha - 2
    std::uint64_t qt = 1;
    for (std::size_t i = 0; i < t; ++i) qt *= q;
    std::uint64_t bound = 0, pw = 1;
    for (std::size_t i = 0; i < h - alpha + 2; ++i, pw *= qt) bound += pw;
    bound += alpha - 2;
    if (alpha >= 2 && k == bound)
      rep.pass("size meets the upper bound " + std::to_string(bound));
    else
      rep.unverified.push_back("maximality (size " + std::to_string(k) + " below bound " + std::to_string(bound) + ")");
  }
}

void check_linear_code(const json& c, CheckReport& rep) {
  auto f = make_field_of_order(c.at("q").get<std::uint64_t>());
  const auto& rows = c.at("generator");
  auto g = io::matrix_from_json(f, rows, rows.empty() ? 0 : rows[0].size());
  if (rank(g) != g.rows()) {
    rep.fail("generator is rank deficient");
    return;
  }
  const std::size_t k = g.rows(), n = g.cols();
  std::vector<Felt> msg(k, f.zero());
  std::size_t best = n + 1;
  while (true) {
    std::size_t i = 0;
    while (i < k && msg[i].code + 1 == f.q()) msg[i++] = f.zero();
    if (i == k) break;
    msg[i] = Felt{msg[i].code + 1};
    std::size_t w = 0;
    for (std::size_t col = 0; col < n; ++col) {
      Felt s = f.zero();
      for (std::size_t r = 0; r < k; ++r) s = f.add(s, f.mul(msg[r], g(r, col)));
      w += s != f.zero();
    }
    best = std::min(best, w);
  }
  auto d = c.at("claim").at("min_distance").get<std::size_t>();
  if (best != d)
    rep.fail("minimum distance is " + std::to_string(best) + ", claimed " + std::to_string(d));
  else
    rep.pass("[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]_" +
             std::to_string(f.q()) + " code");
}

void check_gap(const json& c, CheckReport& rep) {
  for (const char* side : {"qs", "qv"}) {
    const auto& s = c.at(side);
    if (!s.contains("code")) {
      rep.unverified.push_back(std::string(side) + " upper bound (no code attached)");
      continue;
    }
    const auto& code = s["code"];
    std::uint64_t order = 1;
    auto q = code.at("q").get<std::uint64_t>();
    for (std::size_t i = 0; i < code.at("t").get<std::size_t>(); ++i) order *= q;
    if (order != s.at("upper").get<std::uint64_t>()) rep.fail(std::string(side) + " code alphabet differs from the upper bound");
    if (std::string(side) == "qs" && code.at("t").get<std::size_t>() != 1) rep.fail("qs code is not scalar");
    check_network_code(c.at("network"), code, rep, side);
    rep.unverified.push_back(std::string(side) + " lower bound " + s.at("lower").dump() + " (" +
                             s.value("method", std::string("search")) + ")");
  }
}

}  // namespace

CheckReport check(const json& c, const Budget& budget) {
  CheckReport rep;
  try {
    auto type = c.at("type").get<std::string>();
    if (type == "coloring")
      check_coloring(c, budget, rep);
    else if (type == "homomorphism")
      check_homomorphism(c, rep);
    else if (type == "network_code")
      check_network_code(c.at("network"), c.at("code"), rep, "code");
    else if (type == "ic")
      check_ic(c, rep);
    else if (type == "linear_code")
      check_linear_code(c, rep);
    else if (type == "gap")
      check_gap(c, rep);
    else
      rep.fail("unknown certificate type '" + type + "'");
  } catch (const json::exception& e) {
    rep.fail(std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    rep.fail(e.what());
  }
  return rep;
}

json qkneser_spec(std::uint64_t q, std::size_t n, std::size_t m) {
  return {{"kind", "qkneser"}, {"q", q}, {"n", n}, {"m", m}};
}
json qkneser_hyper_spec(std::uint64_t q, std::size_t t, unsigned h) {
  return {{"kind", "qkneser_hyper"}, {"q", q}, {"t", t}, {"h", h}};
}
json complete_spec(std::size_t n) { return {{"kind", "complete"}, {"n", n}}; }
json explicit_spec(const UGraph& g) {
  json j = io::graph_to_json(g);
  j["kind"] = "explicit";
  return j;
}

json coloring_certificate(const json& graph, const Coloring& c, const std::vector<std::size_t>& clique, bool exact) {
  json claim;
  if (exact)
    claim = {{"chromatic_number", c.used_colors()}, {"exact", true}};
  else
    claim = {{"colors", c.used_colors()}};
  return {{"type", "coloring"}, {"graph", graph}, {"colors", c.colors}, {"clique", clique}, {"claim", claim}};
}

json homomorphism_certificate(const json& from, const json& to, const std::vector<std::size_t>& map) {
  return {{"type", "homomorphism"}, {"from", from}, {"to", to}, {"map", map}};
}

json code_certificate(const Network& n, const NetworkCode& code) {
  return {{"type", "network_code"}, {"network", io::network_to_json(n)}, {"code", io::code_to_json(code)}};
}

json ic_certificate(const IndependentConfiguration& c, unsigned alpha, bool maximum) {
  json members = json::array();
  for (const auto& s : c.members) members.push_back(io::matrix_to_json(s.basis()));
  return {{"type", "ic"},
          {"q", c.field.q()},
          {"t", c.t},
          {"h", c.h},
          {"alpha", alpha},
          {"members", members},
          {"claim", {{"size", c.members.size()}, {"maximum", maximum}}}};
}

json linear_code_certificate(const LinearCode& code, std::size_t min_distance) {
  return {{"type", "linear_code"},
          {"q", code.field().q()},
          {"generator", io::matrix_to_json(code.generator)},
          {"claim", {{"min_distance", min_distance}}}};
}

json gap_certificate(const Network& n, const GapReport& r) {
  auto side = [](const AlphabetResult& a) {
    json s{{"lower", a.value.lower}, {"upper", a.value.upper}, {"method", a.method}, {"t", a.t}};
    if (a.code) s["code"] = io::code_to_json(*a.code);
    return s;
  };
  return {{"type", "gap"},
          {"network", io::network_to_json(n)},
          {"qs", side(r.qs)},
          {"qv", side(r.qv)},
          {"gap", {{"lower", r.gap.lower}, {"upper", r.gap.upper}}}};
}

}  // namespace ncgap::cert
