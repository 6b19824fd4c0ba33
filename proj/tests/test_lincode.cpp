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

#include <random>

#include "ncgap/error.hpp"
#include "ncgap/lincode.hpp"
#include "support.hpp"

using namespace ncgap;

namespace {

Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Felt{static_cast<std::uint32_t>(rng() % f.q())});
  return m;
}

// Locally consistent by construction: each edge mixes what its tail receives.
NetworkCode random_consistent_code(const Network& n, const FieldSpec& f, std::size_t t, std::mt19937& rng) {
  NetworkCode c{f, t, n.h(), {}};
  for (NodeId v : n.topological_order())
    for (EdgeId e : n.out_edges(v)) {
      if (v == n.source()) {
        c.edges[e] = random_matrix(f, t, c.width(), rng);
      } else {
        auto in = node_matrix(n, c, v);
        c.edges[e] = random_matrix(f, t, in.rows(), rng) * in;
      }
    }
  return c;
}

NetworkCode random_code(const Network& n, const FieldSpec& f, std::size_t t, std::mt19937& rng) {
  NetworkCode c{f, t, n.h(), {}};
  for (EdgeId e = 0; e < n.edge_count(); ++e) c.edges[e] = random_matrix(f, t, c.width(), rng);
  return c;
}

Network small_dag(std::mt19937& rng) {
  std::size_t nodes = 5 + rng() % 2;
  Network n(nodes, 0, {nodes - 1, nodes - 2}, 2);
  std::size_t edges = 6 + rng() % 3;
  for (std::size_t i = 0; i < edges; ++i) {
    NodeId a = rng() % (nodes - 1), b = a + 1 + rng() % (nodes - 1 - a);
    n.add_edge(a, b);
  }
  return n;
}

// Brute force over every scalar linear code on an h = 2 network whose node
// ids are a topological order; only the existence of a solution matters.
bool oracle_scalar_solvable(const Network& n, std::uint32_t q) {
  auto f = support::field(make_field_of_order(q));
  std::vector<EdgeId> order(n.edge_count());
  for (EdgeId e = 0; e < n.edge_count(); ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return n.edge(a).from < n.edge(b).from; });
  std::vector<std::vector<std::uint32_t>> vec(n.edge_count());
  auto incoming = [&](NodeId v) {
    oracle::Rows rows;
    for (EdgeId e : n.in_edges(v)) rows.push_back(vec[e]);
    return rows;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == order.size()) {
      for (auto t : n.terminals())
        if (oracle::rank(f, incoming(t)) != 2) return false;
      return true;
    }
    EdgeId e = order[k];
    NodeId tail = n.edge(e).from;
    auto in = incoming(tail);
    auto base = oracle::rank(f, in);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        std::vector<std::uint32_t> x{a, b};
        if (tail != n.source()) {
          auto with = in;
          with.push_back(x);
          if (oracle::rank(f, with) != base) continue;
        }
        vec[e] = x;
        if (rec(k + 1)) return true;
      }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_SUITE("lincode") {

TEST_CASE("verify_solution agrees with simulation") {
  std::mt19937 rng(21);
  auto b = build_butterfly();
  std::size_t accepted = 0, rejected = 0;
  for (std::uint64_t q : {2, 3, 4}) {
    auto f = make_field_of_order(q);
    for (std::size_t t : {1u, 2u}) {
      if (q == 4 && t == 2) continue;  // 4^4 messages per check is plenty elsewhere
      for (int i = 0; i < 30; ++i) {
        auto c = i % 3 == 0 ? random_code(b, f, t, rng) : random_consistent_code(b, f, t, rng);
        auto v = verify_solution(b, c);
        CHECK(v.accepted == support::simulate(b, c));
        (v.accepted ? accepted : rejected)++;
        if (!v.accepted) CHECK_FALSE(v.first_violation.empty());
      }
    }
  }
  CHECK(accepted > 0);
  CHECK(rejected > 0);
}

TEST_CASE("verdict details") {
  auto b = build_butterfly();
  auto f = make_field_of_order(2);
  auto e1 = Matrix::from_codes(f, 2, {{1, 0}}), e2 = Matrix::from_codes(f, 2, {{0, 1}});
  auto sum = Matrix::from_codes(f, 2, {{1, 1}});
  NetworkCode c{f, 1, 2, {}};
  std::vector<Matrix> g{e1, e2, e1, e2, e1, sum, e2, sum, sum};
  for (EdgeId e = 0; e < 9; ++e) c.edges[e] = g[e];
  auto v = verify_solution(b, c);
  CHECK(v.accepted);
  CHECK(v.locally_consistent);
  for (auto [t, r] : v.terminal_ranks) CHECK(r == 2);
  CHECK(node_space_dim(b, c, b.edge(5).from) == 2);
  CHECK_THROWS_AS(node_space_dim(b, c, b.source()), InvalidArgument);

  c.edges[5] = e1;  // nu3 -> nu4 now carries e1
  c.edges[7] = e1;
  c.edges[8] = e1;
  v = verify_solution(b, c);
  CHECK(v.locally_consistent);
  CHECK_FALSE(v.accepted);
  CHECK(v.bad_node.has_value());

  c.edges[3] = Matrix::from_codes(f, 2, {{1, 0}});  // nu2 only receives e2
  v = verify_solution(b, c);
  CHECK_FALSE(v.locally_consistent);
  REQUIRE(v.bad_edge.has_value());
  CHECK(*v.bad_edge == 3);

  c.edges.erase(0);
  CHECK_THROWS_AS(verify_solution(b, c), InvalidArgument);
  c.edges[0] = Matrix::from_codes(f, 3, {{1, 0, 0}});
  CHECK_THROWS_AS(verify_solution(b, c), InvalidArgument);
}

TEST_CASE("search finds verified solutions or certifies none") {
  auto f2 = make_field_of_order(2);
  auto r = search_solution(build_butterfly(), f2, 1);
  REQUIRE(r.outcome == Outcome::found);
  CHECK(verify_solution(build_butterfly(), *r.code).accepted);
  CHECK(support::simulate(build_butterfly(), *r.code));

  CHECK(search_solution(build_combination(2, 4, 2), f2, 1).outcome == Outcome::none);
  auto r2 = search_solution(build_combination(2, 4, 2), f2, 2);
  REQUIRE(r2.outcome == Outcome::found);
  CHECK(support::simulate(build_combination(2, 4, 2), *r2.code));
  CHECK(search_solution(build_combination(3, 4, 2), f2, 1).outcome == Outcome::none);
}

TEST_CASE("search is complete on small networks") {
  std::mt19937 rng(13);
  int solvable = 0, unsolvable = 0;
  for (int i = 0; i < 40; ++i) {
    auto n = small_dag(rng);
    for (std::uint32_t q : {2u, 3u}) {
      bool expect = oracle_scalar_solvable(n, q);
      auto r = search_solution(n, make_field_of_order(q), 1);
      CHECK(r.outcome == (expect ? Outcome::found : Outcome::none));
      if (r.code) CHECK(verify_solution(n, *r.code).accepted);
      (expect ? solvable : unsolvable)++;
    }
  }
  CHECK(solvable > 0);
  CHECK(unsolvable > 0);
}

TEST_CASE("combination networks: scalar solvability matches brute force") {
  for (std::uint32_t q : {2u, 3u})
    for (std::size_t r = 2; r <= 5; ++r) {
      auto n = build_combination(2, r, 2);
      // Middle nodes forward, so a solution is r source vectors of F_q^2
      // that are pairwise independent.
      auto f = support::field(make_field_of_order(q));
      std::vector<std::uint32_t> pick(r, 0);
      bool expect = false;
      while (!expect) {
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i)
          for (std::size_t j = i + 1; j < r && ok; ++j)
            ok = oracle::rank(f, {{pick[i] % q, pick[i] / q}, {pick[j] % q, pick[j] / q}}) == 2;
        expect = ok;
        std::size_t k = 0;
        while (k < r && pick[k] + 1 == q * q) pick[k++] = 0;
        if (k == r) break;
        ++pick[k];
      }
      CHECK(expect == (r <= q + 1));
      CHECK((search_solution(n, make_field_of_order(q), 1).outcome == Outcome::found) == expect);
    }
}

TEST_CASE("budget exhaustion reports unknown") {
  auto r = search_solution(build_combination(2, 5, 2), make_field_of_order(3), 1, Budget::nodes(3));
  CHECK(r.outcome == Outcome::unknown);
}

TEST_CASE("forwarding and classical codes") {
  auto n = build_combination(2, 3, 2);
  auto f = make_field_of_order(2);
  auto g = Matrix::from_codes(f, 3, {{1, 0, 1}, {0, 1, 1}});
  auto c = solution_from_classical_code(n, g);
  CHECK(verify_solution(n, c).accepted);
  std::vector<Matrix> cols;
  for (std::size_t i = 0; i < 3; ++i) cols.push_back(Matrix::from_codes(f, 2, {{g(0, i).code, g(1, i).code}}));
  CHECK(forward_code(n, f, 1, cols).edges == c.edges);
  CHECK_THROWS_AS(forward_code(build_butterfly(), f, 1, {cols[0], cols[1]}), InvalidArgument);
}

TEST_CASE("parallelized codes stay solutions") {
  std::mt19937 rng(8);
  auto b = build_butterfly();
  for (std::uint64_t q : {2, 3}) {
    auto r = search_solution(b, make_field_of_order(q), 2);
    REQUIRE(r.outcome == Outcome::found);
    auto p = parallelize(b, 2);
    auto pc = parallelize_code(b, *r.code);
    CHECK(pc.t == 1);
    CHECK(pc.h == 4);
    CHECK(verify_solution(p, pc).accepted);
  }
}

TEST_CASE("extension transfers in both directions") {
  auto b = build_butterfly();
  for (std::uint64_t q : {2, 3})
    for (unsigned h2 : {3u, 4u}) {
      auto f = make_field_of_order(q);
      auto base = search_solution(b, f, 1);
      REQUIRE(base.code);
      auto ext = extend_messages(b, h2);
      auto up = extend_code(b, *base.code, h2);
      CHECK(verify_solution(ext, up).accepted);
      auto down = restrict_extended_code(b, ext, up);
      CHECK(verify_solution(b, down).accepted);
      auto found = search_solution(ext, f, 1);
      REQUIRE(found.code);
      CHECK(verify_solution(b, restrict_extended_code(b, ext, *found.code)).accepted);
    }
}

TEST_CASE("padded basis") {
  auto f = make_field_of_order(3);
  auto s = Subspace::span(Matrix::from_codes(f, 3, {{1, 2, 0}}));
  auto m = padded_basis(s, 2);
  CHECK(m.rows() == 2);
  CHECK(Subspace::span(m) == s);
}

}
