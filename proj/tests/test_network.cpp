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
#include "ncgap/network.hpp"
#include "support.hpp"

using namespace ncgap;

namespace {

std::size_t oracle_cut(const Network& n, NodeId t) {
  auto s = support::sim(n);
  return oracle::min_cut(s.edges, s.nodes, s.source, t);
}

// Random layered DAG from node 0 with a few terminals.
Network random_dag(std::mt19937& rng, unsigned h) {
  std::size_t nodes = 5 + rng() % 3;
  Network n(nodes, 0, {nodes - 1, nodes - 2}, h);
  std::size_t edges = 8 + rng() % 5;
  for (std::size_t i = 0; i < edges; ++i) {
    NodeId a = rng() % (nodes - 1), b = a + 1 + rng() % (nodes - 1 - a);
    n.add_edge(a, b);
  }
  return n;
}

}  // namespace

TEST_SUITE("network") {

TEST_CASE("butterfly shape") {
  auto n = build_butterfly();
  CHECK(n.node_count() == 7);
  CHECK(n.edge_count() == 9);
  CHECK(n.h() == 2);
  CHECK(n.terminals().size() == 2);
  CHECK(n.name(n.source()) == "sigma");
  CHECK(n.name(n.edge(5).from) == "nu3");
  CHECK(n.name(n.edge(5).to) == "nu4");
  for (auto t : n.terminals()) CHECK(min_cut(n, t) == 2);
  CHECK(n.all_essential());
}

TEST_CASE("min cut agrees with brute force") {
  std::mt19937 rng(9);
  for (int i = 0; i < 40; ++i) {
    auto n = random_dag(rng, 2);
    for (auto t : n.terminals()) CHECK(min_cut(n, t) == oracle_cut(n, t));
  }
  auto b = build_butterfly();
  for (auto t : b.terminals()) CHECK(min_cut(b, t) == oracle_cut(b, t));
}

TEST_CASE("combination network structure") {
  auto n = build_combination(2, 5, 3);
  CHECK(n.node_count() == 1 + 5 + 10);
  CHECK(n.edge_count() == 5 + 30);
  for (auto t : n.terminals()) {
    CHECK(n.in_degree(t) == 3);
    CHECK(min_cut(n, t) == 3);
  }
  CHECK_THROWS_AS(build_combination(2, 3, 4), InvalidArgument);
  Limits l;
  l.max_terminals = 5;
  CHECK_THROWS_AS(build_combination(2, 6, 3, l), LimitExceeded);
}

TEST_CASE("Kneser terminal count agrees with brute force") {
  for (auto [q, t, h] : {std::tuple{2u, 1u, 2u}, {3u, 1u, 2u}, {2u, 1u, 3u}, {2u, 2u, 2u}, {4u, 1u, 2u}}) {
    KneserNetwork k(q, t, h);
    auto o = support::field(k.field());
    const auto& mid = k.middle();
    std::uint64_t count = 0;
    std::vector<std::size_t> pick(h);
    for (std::size_t i = 0; i < h; ++i) pick[i] = i;
    while (true) {
      oracle::Rows rows;
      for (auto p : pick)
        for (auto& r : support::rows(mid[p].basis())) rows.push_back(r);
      count += oracle::rank(o, rows) == h * t;
      std::size_t i = h;
      while (i > 0 && pick[i - 1] == mid.size() - h + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t x = i; x < h; ++x) pick[x] = pick[x - 1] + 1;
    }
    CHECK(k.terminal_count() == count);
    auto n = k.materialize();
    CHECK(n.terminals().size() == count);
    CHECK(n.edge_count() == mid.size() + h * count);
  }
}

TEST_CASE("Kneser terminals are spanning sets") {
  KneserNetwork k(2, 2, 2);
  std::size_t seen = 0;
  k.for_each_terminal([&](std::span<const std::size_t> ix) {
    CHECK(k.is_terminal(ix));
    std::vector<Subspace> parts;
    for (auto i : ix) parts.push_back(k.middle()[i]);
    CHECK(sum_dim(parts) == 4);
    return ++seen < 50;
  });
  CHECK(seen == 50);
}

TEST_CASE("validation") {
  Network cyc(3, 0, {2}, 1);
  cyc.add_edge(0, 1);
  cyc.add_edge(1, 2);
  cyc.add_edge(2, 1);
  CHECK_THROWS_AS(cyc.validate(), InvalidArgument);
  CHECK_THROWS_AS(Network(3, 0, {0}, 1).validate(), InvalidArgument);
  CHECK_THROWS_AS(Network(3, 5, {1}, 1), InvalidArgument);
  Network loop(2, 0, {1}, 1);
  CHECK_THROWS_AS(loop.add_edge(1, 1), InvalidArgument);
}

TEST_CASE("prune drops dead ends") {
  Network n(5, 0, {2}, 1);
  n.add_edge(0, 1);
  n.add_edge(1, 2);
  n.add_edge(1, 3);  // 3 and 4 reach no terminal
  n.add_edge(3, 4);
  CHECK(n.non_essential_nodes().size() == 2);
  auto p = prune(n);
  CHECK(p.node_count() == 3);
  CHECK(p.edge_count() == 2);
  CHECK(p.all_essential());
}

TEST_CASE("minimality") {
  CHECK(is_minimal(build_butterfly()).status == Minimality::minimal);
  for (std::size_t r = 2; r <= 5; ++r) CHECK(is_minimal(build_combination(2, r, 2)).status == Minimality::minimal);
  CHECK(is_minimal(build_combination(3, 4, 3)).status == Minimality::minimal);
  auto rep = is_minimal(build_combination(2, 4, 3));
  CHECK(rep.status == Minimality::not_minimal);
  REQUIRE(rep.redundant_edge);
  auto cut = build_combination(2, 4, 3).without_edge(*rep.redundant_edge);
  for (auto t : cut.terminals()) CHECK(min_cut(cut, t) >= 2);
  auto bad = is_minimal(build_combination(3, 4, 2));
  CHECK(bad.status == Minimality::unsolvable);
  CHECK(bad.deficient_terminal.has_value());
  CHECK(is_minimal(parallelize(build_butterfly(), 2)).status == Minimality::minimal);
}

TEST_CASE("minimality agrees with a brute-force definition") {
  std::mt19937 rng(4);
  for (int i = 0; i < 25; ++i) {
    auto n = random_dag(rng, 2);
    bool solvable = true;
    for (auto t : n.terminals()) solvable = solvable && oracle_cut(n, t) >= 2;
    bool minimal = solvable;
    for (EdgeId e = 0; solvable && e < n.edge_count(); ++e) {
      auto m = n.without_edge(e);
      bool still = true;
      for (auto t : m.terminals()) still = still && oracle_cut(m, t) >= 2;
      if (still) minimal = false;
    }
    auto rep = is_minimal(n);
    CHECK((rep.status == Minimality::unsolvable) == !solvable);
    if (solvable) CHECK((rep.status == Minimality::minimal) == minimal);
  }
}

TEST_CASE("extend and parallelize") {
  auto b = build_butterfly();
  auto e = extend_messages(b, 4);
  CHECK(e.h() == 4);
  CHECK(e.node_count() == 8);
  CHECK(e.edge_count() == 9 + 2 + 2 * 2);
  CHECK(e.source() == 7);
  for (auto t : e.terminals()) CHECK(min_cut(e, t) == 4);
  CHECK_THROWS_AS(extend_messages(b, 2), InvalidArgument);

  auto p = parallelize(b, 3);
  CHECK(p.h() == 6);
  CHECK(p.edge_count() == 27);
  CHECK(p.edge(3 * 5 + 2).from == b.edge(5).from);
  for (auto t : p.terminals()) CHECK(min_cut(p, t) == 6);
}

TEST_CASE("topological order respects edges") {
  auto n = build_kneser(2, 1, 3);
  auto order = n.topological_order();
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (const auto& e : n.edges()) CHECK(pos[e.from] < pos[e.to]);
}

}
