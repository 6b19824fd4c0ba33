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

#include "ncgap/error.hpp"
#include "ncgap/ic.hpp"
#include "ncgap/subspace.hpp"
#include "support.hpp"

using namespace ncgap;

namespace {

bool oracle_ic(const IndependentConfiguration& c, unsigned alpha) {
  auto o = support::field(c.field);
  const std::size_t k = c.members.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (c.members[i] == c.members[j]) return false;
  if (alpha > k) return true;
  std::vector<std::size_t> pick(alpha);
  for (std::size_t i = 0; i < alpha; ++i) pick[i] = i;
  while (true) {
    oracle::Rows rows;
    for (auto p : pick)
      for (auto& r : support::rows(c.members[p].basis())) rows.push_back(r);
    if (oracle::rank(o, rows) != alpha * c.t) return false;
    std::size_t i = alpha;
    while (i > 0 && pick[i - 1] == k - alpha + i - 1) --i;
    if (i == 0) return true;
    ++pick[i - 1];
    for (std::size_t x = i; x < alpha; ++x) pick[x] = pick[x - 1] + 1;
  }
}

}  // namespace

TEST_SUITE("ic") {

TEST_CASE("validity agrees with the oracle") {
  std::mt19937 rng(47);
  for (auto [q, t, h] : {std::tuple{2u, 1u, 2u}, {3u, 1u, 2u}, {2u, 2u, 2u}, {2u, 1u, 3u}}) {
    auto f = make_field_of_order(q);
    auto all = enumerate_subspaces(f, h * t, t);
    for (int i = 0; i < 40; ++i) {
      IndependentConfiguration c{f, t, h, {}};
      std::size_t k = 2 + rng() % 4;
      for (std::size_t j = 0; j < k; ++j) c.members.push_back(all[rng() % all.size()]);
      for (unsigned alpha = 2; alpha <= h; ++alpha) CHECK(ic_is_valid(c, alpha) == oracle_ic(c, alpha));
    }
  }
}

TEST_CASE("size bound") {
  CHECK(ic_size_bound(2, 1, 2, 2) == 3);
  CHECK(ic_size_bound(2, 1, 3, 3) == 4);
  CHECK(ic_size_bound(2, 2, 2, 2) == 5);
  CHECK(ic_size_bound(3, 1, 2, 2) == 4);
  CHECK(ic_size_bound(2, 1, 3, 2) == 7);
  CHECK_THROWS_AS(ic_size_bound(2, 1, 2, 1), InvalidArgument);
}

TEST_CASE("maximum sizes") {
  for (auto [q, t, h, expect] : {std::tuple{2u, 1u, 2u, 3u}, {2u, 1u, 3u, 4u}, {2u, 2u, 2u, 5u}, {3u, 1u, 2u, 4u}}) {
    auto r = ic_max_size(q, t, h, h);
    CHECK(r.exact);
    CHECK(r.best == expect);
    CHECK(r.best == r.bound);
    CHECK(oracle_ic(r.witness, h));
    CHECK(ic_find(q, t, h, h, expect + 1).outcome == Outcome::none);
    CHECK(ic_find(q, t, h, h, expect).outcome == Outcome::found);
  }
  // With alpha = 2 in F_2^3 every pair of distinct lines works.
  CHECK(ic_max_size(2, 1, 3, 2).best == 7);
}

TEST_CASE("solutions and configurations correspond") {
  for (auto [q, t, h] : {std::tuple{2u, 1u, 2u}, {2u, 2u, 2u}, {2u, 1u, 3u}, {3u, 1u, 2u}}) {
    auto r = ic_max_size(q, t, h, h);
    auto code = ic_to_solution(r.witness);
    auto n = build_combination(h, r.witness.members.size(), h);
    CHECK(verify_solution(n, code).accepted);
    auto back = solution_to_ic(n, code);
    auto a = back.members, b = r.witness.members;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
  IndependentConfiguration bad{make_field_of_order(2), 1, 2, {}};
  auto all = enumerate_subspaces(bad.field, 2, 1);
  bad.members = {all[0], all[0]};
  CHECK_THROWS_AS(ic_to_solution(bad), InvalidArgument);
}

}
