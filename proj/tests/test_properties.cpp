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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ncgap/codes.hpp"
#include "ncgap/gap.hpp"
#include "ncgap/ic.hpp"
#include "ncgap/io.hpp"
#include "ncgap/lincode.hpp"
#include "ncgap/qkneser.hpp"
#include "ncgap/skeleton.hpp"
#include "support.hpp"

using namespace ncgap;

namespace {

Network random_dag(std::mt19937& rng, std::size_t max_edges) {
  std::size_t nodes = 4 + rng() % 10;
  std::vector<NodeId> terms{nodes - 1};
  if (rng() % 2) terms.push_back(nodes - 2);
  Network n(nodes, 0, terms, 2);
  std::size_t edges = nodes + rng() % (max_edges - nodes + 1);
  for (std::size_t i = 0; i < edges; ++i) {
    NodeId a = rng() % (nodes - 1), b = a + 1 + rng() % (nodes - 1 - a);
    n.add_edge(a, b);
  }
  return n;
}

Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Felt{static_cast<std::uint32_t>(rng() % f.q())});
  return m;
}

UGraph path_graph(std::size_t n) {
  UGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

UGraph cycle_graph(std::size_t n) {
  UGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("stacked rank and row space containment") {
  std::mt19937 rng(53);
  for (std::uint64_t q : {2, 3, 4, 7}) {
    auto f = make_field_of_order(q);
    for (int i = 0; i < 100; ++i) {
      auto a = random_matrix(f, 1 + rng() % 4, 5, rng);
      auto b = i % 2 ? random_matrix(f, 1 + rng() % 3, 5, rng) : random_matrix(f, 2, a.rows(), rng) * a;
      auto s = rank(vstack(a, b));
      CHECK(s >= std::max(rank(a), rank(b)));
      CHECK((s == rank(a)) == rowspace_contains(a, b));
    }
  }
}

TEST_CASE("field axioms hold exhaustively up to 16") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    auto f = make_field_of_order(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      if (a) CHECK(f.mul(Felt{a}, f.inv(Felt{a})) == f.one());
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) {
          Felt x{a}, y{b}, z{c};
          if (f.mul(x, f.add(y, z)) != f.add(f.mul(x, y), f.mul(x, z))) FAIL("distributivity");
          if (f.mul(f.mul(x, y), z) != f.mul(x, f.mul(y, z))) FAIL("associativity");
          if (f.add(f.add(x, y), z) != f.add(x, f.add(y, z))) FAIL("additive associativity");
        }
    }
  }
}

TEST_CASE("subspace counts for n up to 6") {
  for (std::uint64_t q : {2, 3}) {
    auto f = make_field_of_order(q);
    for (std::size_t n = 0; n <= 6; ++n)
      for (std::size_t t = 0; t <= n; ++t)
        CHECK(enumerate_subspaces(f, n, t).size() == gaussian_coefficient(n, t, q));
  }
}

TEST_CASE("canonical form ignores generator order") {
  std::mt19937 rng(59);
  auto f = make_field_of_order(3);
  for (int i = 0; i < 50; ++i) {
    auto m = random_matrix(f, 4, 6, rng);
    std::vector<std::size_t> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix p(f, 0, 6);
    for (auto r : perm) p.append_row(m.row(r));
    CHECK(canonicalize(f, m) == canonicalize(f, p));
  }
}

TEST_CASE("spreads cover every nonzero vector exactly once") {
  for (auto [q, t] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {4u, 1u}, {5u, 1u}, {7u, 1u}, {8u, 1u}, {9u, 1u},
                      {3u, 2u}, {2u, 3u}}) {
    auto f = make_field_of_order(q);
    auto s = spread(f, t);
    std::uint64_t total = 1;
    for (unsigned i = 0; i < 2 * t; ++i) total *= q;
    for (std::uint64_t id = 1; id < total; ++id) {
      std::vector<Felt> v(2 * t);
      auto x = id;
      for (auto& c : v) {
        c = Felt{static_cast<std::uint32_t>(x % q)};
        x /= q;
      }
      std::size_t hits = 0;
      for (const auto& m : s) hits += m.contains_vector(v);
      if (hits != 1) FAIL("vector covered " << hits << " times");
    }
  }
}

TEST_CASE("combination networks are minimal exactly when s = h") {
  for (unsigned h = 1; h <= 3; ++h)
    for (std::size_t r = 1; r <= 5; ++r)
      for (std::size_t s = 1; s <= std::min<std::size_t>(3, r); ++s) {
        auto rep = is_minimal(build_combination(h, r, s));
        CHECK((rep.status == Minimality::minimal) == (s == h));
      }
}

TEST_CASE("minimal solvable networks have in-degree at most h") {
  std::vector<Network> nets{build_butterfly(), build_kneser(2, 1, 2), build_combination(3, 4, 3),
                            parallelize(build_butterfly(), 2)};
  for (std::size_t r = 2; r <= 5; ++r) nets.push_back(build_combination(2, r, 2));
  std::mt19937 rng(61);
  for (int i = 0; i < 60; ++i) nets.push_back(random_dag(rng, 16));
  for (const auto& n : nets) {
    if (is_minimal(n).status != Minimality::minimal) continue;
    auto sol = search_solution(n, make_field_of_order(n.h() <= 2 ? 3 : 4), 1);
    if (!sol.code || !verify_solution(n, *sol.code).accepted) continue;
    for (NodeId v = 0; v < n.node_count(); ++v)
      if (v != n.source()) CHECK(n.in_degree(v) <= n.h());
  }
}

TEST_CASE("builders produce acyclic essential networks") {
  std::vector<Network> nets{build_butterfly(),           build_kneser(2, 1, 2),     build_kneser(2, 2, 2),
                            build_kneser(3, 1, 3),       build_combination(2, 5, 3), extend_messages(build_butterfly(), 4),
                            parallelize(build_butterfly(), 3), reverse_skeleton(cycle_graph(5))};
  for (const auto& n : nets) {
    CHECK_NOTHROW(n.validate());
    CHECK(n.all_essential());
  }
}

TEST_CASE("Kneser terminals are the edges of the q-Kneser graph") {
  for (auto [q, t] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    auto n = build_kneser(q, t, 2);
    auto g = build_qkneser(q, 2 * t, t);
    std::set<std::pair<std::size_t, std::size_t>> from_net;
    for (auto term : n.terminals()) {
      const auto& in = n.in_edges(term);
      REQUIRE(in.size() == 2);
      // Middle node i + 1 is vertex i.
      auto a = n.edge(in[0]).from - 1, b = n.edge(in[1]).from - 1;
      from_net.insert({std::min(a, b), std::max(a, b)});
    }
    auto edges = g.edges();
    CHECK(from_net == std::set<std::pair<std::size_t, std::size_t>>(edges.begin(), edges.end()));
  }
}

TEST_CASE("returned codes are accepted") {
  std::mt19937 rng(67);
  for (int i = 0; i < 40; ++i) {
    auto n = random_dag(rng, 14);
    for (std::uint64_t q : {2, 3}) {
      auto r = search_solution(n, make_field_of_order(q), 1);
      if (r.code) CHECK(verify_solution(n, *r.code).accepted);
    }
  }
}

TEST_CASE("node spaces of minimal networks have full dimension") {
  std::vector<Network> nets{build_butterfly(), build_kneser(2, 1, 2)};
  for (std::size_t r = 2; r <= 5; ++r) nets.push_back(build_combination(2, r, 2));
  for (const auto& n : nets)
    for (auto [q, t] : {std::pair{4u, 1u}, {2u, 2u}}) {
      auto r = search_solution(n, make_field_of_order(q), t);
      if (!r.code) continue;
      REQUIRE(verify_solution(n, *r.code).accepted);
      for (NodeId v = 0; v < n.node_count(); ++v)
        if (v != n.source()) CHECK(node_space_dim(n, *r.code, v) == n.in_degree(v) * t);
    }
}

TEST_CASE("extending the message count preserves solvability") {
  auto b = build_butterfly();
  for (unsigned h2 : {3u, 4u})
    for (std::uint64_t q : {2, 3}) {
      auto f = make_field_of_order(q);
      auto ext = extend_messages(b, h2);
      auto base = search_solution(b, f, 1);
      auto big = search_solution(ext, f, 1);
      CHECK((base.outcome == Outcome::found) == (big.outcome == Outcome::found));
      REQUIRE(base.code);
      REQUIRE(big.code);
      CHECK(verify_solution(ext, extend_code(b, *base.code, h2)).accepted);
      CHECK(verify_solution(b, restrict_extended_code(b, ext, *big.code)).accepted);
    }
}

TEST_CASE("row splitting maps vector solutions to scalar ones") {
  for (const auto& n : {build_butterfly(), build_combination(2, 5, 2), build_kneser(2, 1, 2)})
    for (auto [q, t] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}}) {
      auto r = search_solution(n, make_field_of_order(q), t);
      REQUIRE(r.code);
      auto p = parallelize(n, t);
      CHECK(verify_solution(p, parallelize_code(n, *r.code)).accepted);
    }
}

TEST_CASE("skeleton classes partition the edges") {
  std::mt19937 rng(71);
  std::vector<Network> nets{build_butterfly(), build_kneser(2, 2, 2), build_combination(3, 5, 3),
                            extend_messages(build_butterfly(), 3)};
  for (int i = 0; i < 60; ++i) nets.push_back(random_dag(rng, 50));
  for (const auto& n : nets) {
    auto s = skeleton(n);
    std::vector<int> seen(n.edge_count(), 0);
    for (const auto& c : s.classes)
      for (auto e : c) ++seen[e];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
    for (std::size_t v = 0; v < s.classes.size(); ++v)
      for (auto e : s.classes[v]) CHECK(s.class_of_edge[e] == v);
    // Each source edge is the root every member of its class walks back to.
    for (auto e : n.out_edges(n.source()))
      for (auto x : s.classes[s.class_of_edge[e]]) {
        while (n.in_degree(n.edge(x).from) == 1) x = n.in_edges(n.edge(x).from).front();
        CHECK(x == e);
      }
  }
}

TEST_CASE("solutions exist exactly when skeleton homomorphisms do") {
  for (const auto& n : {build_butterfly(), reverse_skeleton(complete_graph(3))}) {
    auto s = skeleton(n);
    for (auto [q, t] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
      bool hom = find_homomorphism(s.graph, build_qkneser(q, 2 * t, t)).outcome == Outcome::found;
      bool sol = search_solution(n, make_field_of_order(q), t).outcome == Outcome::found;
      CHECK(hom == sol);
    }
  }
}

TEST_CASE("hypergraph and graph chromatic numbers coincide") {
  for (unsigned h : {3u, 4u}) {
    auto hyper = chromatic_number(build_qkneser_hyper(2, 1, h));
    auto graph = chromatic_number(build_qkneser(2, h, 1));
    CHECK(hyper.exact);
    CHECK(graph.exact);
    CHECK(hyper.value() == graph.value());
    CHECK(hyper.value() == (h == 3 ? 7u : 15u));
  }
}

TEST_CASE("complete q-Kneser graphs") {
  for (std::uint64_t q : {2, 3, 4, 5}) CHECK(chromatic_number(build_qkneser(q, 2, 1)).value() == q + 1);
}

TEST_CASE("returned colorings and maps are valid") {
  std::mt19937 rng(73);
  for (int i = 0; i < 30; ++i) {
    auto g = reverse_skeleton(cycle_graph(3 + rng() % 6));
    auto s = skeleton(g).graph;
    auto c = chromatic_number(s);
    CHECK(is_proper(s, c.witness));
    auto h = find_homomorphism(s, build_qkneser(2, 2, 1));
    if (h.outcome == Outcome::found) CHECK(is_homomorphism(s, build_qkneser(2, 2, 1), h.map));
  }
  auto c = chromatic_number(build_qkneser(2, 4, 2));
  CHECK(c.clique.size() == 5);
  CHECK(c.clique.size() <= c.value());
  CHECK(c.value() == 6);
}

TEST_CASE("IC round trip") {
  for (auto [q, t, h] : {std::tuple{2u, 1u, 2u}, {2u, 1u, 3u}, {2u, 2u, 2u}, {3u, 1u, 2u}}) {
    auto ic = ic_max_size(q, t, h, h).witness;
    auto n = build_combination(h, ic.members.size(), h);
    auto back = solution_to_ic(n, ic_to_solution(ic));
    std::set<Subspace> a(ic.members.begin(), ic.members.end()), b(back.members.begin(), back.members.end());
    CHECK(a == b);
  }
}

TEST_CASE("IC sizes match combination network solvability") {
  for (auto [q, t, h] : {std::tuple{2u, 1u, 2u}, {3u, 1u, 2u}, {2u, 2u, 2u}, {2u, 1u, 3u}}) {
    auto best = ic_max_size(q, t, h, h);
    REQUIRE(best.exact);
    auto f = make_field_of_order(q);
    for (std::size_t r : {best.best, best.best + 1}) {
      bool ic = ic_find(q, t, h, h, r).outcome == Outcome::found;
      bool sol = search_solution(build_combination(h, r, h), f, t).outcome == Outcome::found;
      CHECK(ic == sol);
      CHECK(ic == (r == best.best));
    }
    CHECK(best.best <= ic_size_bound(q, t, h, h));
  }
}

TEST_CASE("scalar IC sizes equal the longest MDS length") {
  for (std::uint64_t q : {2, 3}) {
    auto f = make_field_of_order(q);
    std::size_t longest = 0;
    for (std::size_t r = 2; r <= 5; ++r) {
      // Every 2 x r generator over F_q; keep the codes of distance r - 1.
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < 2 * r; ++i) total *= q;
      bool any = false;
      for (std::uint64_t id = 0; id < total && !any; ++id) {
        Matrix g(f, 2, r);
        auto x = id;
        for (std::size_t i = 0; i < 2 * r; ++i, x /= q) g.set(i / r, i % r, Felt{static_cast<std::uint32_t>(x % q)});
        if (rank(g) != 2) continue;
        any = solvability_by_code(2, r, 2, make_linear_code(g)).solvable;
      }
      if (any) longest = r;
    }
    CHECK(ic_max_size(q, 1, 2, 2).best == longest);
  }
}

TEST_CASE("psi stays within a factor of two") {
  // Prime powers up to 2 * 10^6 from a sieve, then a backwards scan for the
  // next prime power at or above each n.
  const std::uint64_t limit = 1'000'000, top = 2 * limit + 1;
  std::vector<char> composite(top + 1, 0), pp(top + 1, 0);
  for (std::uint64_t p = 2; p <= top; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t x = p * p; x <= top; x += p) composite[x] = 1;
    for (std::uint64_t x = p; x <= top; x *= p) pp[x] = 1;
  }
  std::uint64_t next = top;
  bool ok = true;
  for (std::uint64_t n = top; n >= 1; --n) {
    if (pp[n]) next = n;
    if (n <= limit) ok = ok && next - n <= n && psi(n) == std::max<std::uint64_t>(next, 2);
  }
  CHECK(ok);
}

TEST_CASE("vector alphabets never exceed scalar ones") {
  std::vector<Network> nets{build_butterfly(), build_kneser(2, 1, 2), build_kneser(2, 2, 2)};
  for (std::size_t r = 3; r <= 6; ++r) nets.push_back(build_combination(2, r, 2));
  for (const auto& n : nets) {
    auto g = gap_exact(n);
    if (g.qs.value.exact() && g.qv.value.exact()) CHECK(g.qv.value.lower <= g.qs.value.lower);
  }
}

TEST_CASE("skeleton and exhaustive scalar alphabets agree") {
  GapOptions skel, ex;
  skel.method = GapMethod::skeleton;
  ex.method = GapMethod::exhaustive;
  for (const auto& n : {build_butterfly(), reverse_skeleton(cycle_graph(5)), reverse_skeleton(complete_graph(3)),
                        reverse_skeleton(path_graph(4))}) {
    auto a = qs_exact(n, skel), b = qs_exact(n, ex);
    CHECK(a.method == "skeleton-chi");
    CHECK(b.method == "exhaustive");
    REQUIRE(a.value.exact());
    REQUIRE(b.value.exact());
    CHECK(a.value.lower == b.value.lower);
  }
}

TEST_CASE("gap upper bound for minimal two-message networks") {
  std::vector<Network> nets{build_butterfly(), build_kneser(2, 1, 2), build_kneser(2, 2, 2),
                            reverse_skeleton(cycle_graph(5)), reverse_skeleton(complete_graph(4))};
  for (std::size_t r = 3; r <= 6; ++r) nets.push_back(build_combination(2, r, 2));
  for (const auto& n : nets) {
    auto g = gap_exact(n);
    REQUIRE(g.gap.exact());
    REQUIRE(g.qv.code);
    auto q = g.qv.code->field.q();
    auto bound = gap_formula(FormulaKind::minimal_h2, {q, g.qv.t, 2, 0});
    CHECK(static_cast<std::int64_t>(g.gap.lower) <= bound.value);
  }
}

TEST_CASE("JSON round trips") {
  std::mt19937 rng(79);
  for (int i = 0; i < 20; ++i) {
    auto n = random_dag(rng, 20);
    auto back = io::network_from_json(io::network_to_json(n));
    CHECK(io::network_to_json(back) == io::network_to_json(n));
    auto r = search_solution(n, make_field_of_order(4), 1);
    if (r.code) CHECK(io::code_from_json(io::code_to_json(*r.code)).edges == r.code->edges);
  }
}

}
