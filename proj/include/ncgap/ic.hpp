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

/**
 * @file ic.hpp
 * @brief Independent configurations.
 *
 * A (t;h,alpha)_q-IC is a set of t-subspaces of F_q^{ht} in which any alpha
 * members form a direct sum. With alpha = h these are exactly the vector
 * solutions of N_{h,r,h}: member i is what the i-th middle node receives.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "ncgap/budget.hpp"
#include "ncgap/lincode.hpp"
#include "ncgap/network.hpp"
#include "ncgap/subspace.hpp"

namespace ncgap {

struct IndependentConfiguration {
  FieldSpec field;
  std::size_t t = 1;
  unsigned h = 2;
  std::vector<Subspace> members;
};

/// Members are distinct t-subspaces of F_q^{ht} and every alpha of them
/// sum to dimension alpha*t.
bool ic_is_valid(const IndependentConfiguration& c, unsigned alpha);

/// (q^{(h-alpha+2)t} - 1)/(q^t - 1) + alpha - 2, for alpha >= 2.
std::uint64_t ic_size_bound(std::uint64_t q, std::size_t t, unsigned h, unsigned alpha);

struct ICSearchResult {
  Outcome outcome = Outcome::unknown;  ///< for target searches
  std::size_t best = 0;
  IndependentConfiguration witness;
  bool exact = false;  ///< best is the true maximum
  std::uint64_t bound = 0;
  std::uint64_t nodes = 0;
};

/// Maximum IC size. The first two members are pinned to span(e_1..e_t)
/// and span(e_{t+1}..e_{2t}); the rest are added in canonical order with
/// forward filtering. Stops early once the size bound is met.
ICSearchResult ic_max_size(std::uint64_t q, std::size_t t, unsigned h, unsigned alpha, const Budget& budget = {},
                           const Limits& limits = {});

/// Existence of an IC with `size` members (outcome found / none / unknown).
ICSearchResult ic_find(std::uint64_t q, std::size_t t, unsigned h, unsigned alpha, std::size_t size,
                       const Budget& budget = {}, const Limits& limits = {});

/// Solution of build_combination(h, |C|, h): source edge i carries member i.
/// Throws InvalidArgument unless c is valid with alpha = h.
NetworkCode ic_to_solution(const IndependentConfiguration& c);

/// Middle-node spaces of an accepted solution of a combination network.
/// Throws InvalidArgument for rejected codes.
IndependentConfiguration solution_to_ic(const Network& n, const NetworkCode& code);

}  // namespace ncgap
