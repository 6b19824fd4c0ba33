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

#include "ncgap/codes.hpp"
#include "ncgap/error.hpp"
#include "ncgap/network.hpp"
#include "support.hpp"

using namespace ncgap;

TEST_SUITE("codes") {

TEST_CASE("Reed-Solomon codes are MDS") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8})
    for (std::size_t r = 2; r <= q + 1; ++r)
      for (std::size_t h = 1; h <= std::min<std::size_t>(r, 3); ++h) {
        auto c = rs_code(q, r, h);
        CHECK(c.length() == r);
        CHECK(c.dimension() == h);
        auto d = oracle::min_distance(support::field(c.field()), support::rows(c.generator));
        CHECK(d == r - h + 1);
        CHECK(min_distance(c) == d);
      }
  CHECK_THROWS_AS(rs_code(3, 5, 2), InvalidArgument);
}

TEST_CASE("codebooks and distances") {
  auto c = rs_code(3, 4, 2);
  auto book = codebook_of(c);
  CHECK(book.words.size() == 9);
  validate(book);
  std::size_t brute = 99;
  for (std::size_t i = 0; i < book.words.size(); ++i)
    for (std::size_t j = i + 1; j < book.words.size(); ++j)
      brute = std::min(brute, hamming_distance(book.words[i], book.words[j]));
  CHECK(min_distance(book) == brute);
  CHECK(brute == 3);
  auto bad = book;
  bad.words.push_back(bad.words.front());
  CHECK_THROWS_AS(validate(bad), InvalidArgument);
}

TEST_CASE("projections are injective exactly up to the distance") {
  for (std::uint64_t q : {2, 3, 4}) {
    auto c = rs_code(q, q + 1, 2);
    auto book = codebook_of(c);
    auto d = min_distance(book);
    for (std::size_t s = 1; s <= q + 1; ++s) CHECK(projections_injective(book, s) == (d >= q + 1 - s + 1));
  }
}

TEST_CASE("solvability of combination networks by codes") {
  auto c = rs_code(4, 5, 2);
  auto sol = solvability_by_code(2, 5, 2, c);
  CHECK(sol.solvable);
  CHECK(sol.required == 4);
  REQUIRE(sol.linear_solution);
  auto n = build_combination(2, 5, 2);
  CHECK(verify_solution(n, *sol.linear_solution).accepted);
  CHECK(support::simulate(n, *sol.linear_solution));

  auto weak = solvability_by_code(2, 5, 3, rs_code(4, 5, 2));
  CHECK(weak.solvable);

  Codebook book = codebook_of(rs_code(3, 4, 2));
  auto nb = solvability_by_code(2, 4, 2, book);
  CHECK(nb.solvable);
  CHECK_FALSE(nb.forwarding.empty());
}

TEST_CASE("exhaustive codebook search agrees with brute force") {
  auto f = make_field_of_order(2);
  for (std::size_t r = 2; r <= 4; ++r) {
    // Best distance of 4 binary words of length r by trying all 4-subsets.
    std::size_t words = std::size_t{1} << r, best = 0;
    for (std::size_t a = 0; a < words; ++a)
      for (std::size_t b = a + 1; b < words; ++b)
        for (std::size_t c = b + 1; c < words; ++c)
          for (std::size_t d = c + 1; d < words; ++d) {
            std::size_t m = 99;
            std::size_t w[4] = {a, b, c, d};
            for (int i = 0; i < 4; ++i)
              for (int j = i + 1; j < 4; ++j)
                m = std::min<std::size_t>(m, static_cast<std::size_t>(__builtin_popcountll(w[i] ^ w[j])));
            best = std::max(best, m);
          }
    auto res = max_codebook_distance(2, r, 4);
    CHECK(res.exact);
    CHECK(res.best_distance == best);
    CHECK(min_distance(res.witness) == best);
  }
  CHECK_THROWS_AS(max_codebook_distance(3, 5, 9), LimitExceeded);
}

}
