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
 * @file qkneser.hpp
 * @brief q-Kneser graphs and hypergraphs, exact coloring, homomorphisms.
 *
 * qK_{n:m} has the m-subspaces of F_q^n as vertices (canonical order) and
 * joins two of them when they intersect trivially. qK^h_{ht:t} has an
 * h-hyperedge for every h subspaces summing to F_q^{ht}.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ncgap/budget.hpp"
#include "ncgap/graph.hpp"

namespace ncgap {

UGraph build_qkneser(std::uint64_t q, std::size_t n, std::size_t m, const Limits& limits = {});
Hypergraph build_qkneser_hyper(std::uint64_t q, std::size_t t, unsigned h, const Limits& limits = {});

struct ChromaticResult {
  bool exact = false;
  std::size_t lower = 0;
  std::size_t upper = 0;
  Coloring witness;                 ///< proper, with `upper` colors
  std::vector<std::size_t> clique;  ///< witness for `lower` when no coloring bound is tighter
  std::uint64_t nodes = 0;
  std::size_t value() const { return upper; }
};

/// Exact chromatic number: clique lower bound, DSATUR upper bound, then
/// k-colorability by DSATUR backtracking for ascending k with a maximum
/// clique pinned to the first colors. On budget exhaustion the result is
/// the bracket [lower, upper] with exact = false.
ChromaticResult chromatic_number(const UGraph& g, const Budget& budget = {});
/// Hypergraph version, solved on the co-occurrence graph.
ChromaticResult chromatic_number(const Hypergraph& g, const Budget& budget = {});

/// Largest clique found (maximum unless the budget runs out).
std::vector<std::size_t> max_clique(const UGraph& g, BudgetMeter& meter);
Coloring dsatur_coloring(const UGraph& g);

struct ColorabilityResult {
  Outcome outcome = Outcome::unknown;
  Coloring witness;
  std::uint64_t nodes = 0;
};
/// Decides whether g has a proper k-coloring; `pinned` (a clique) gets
/// colors 0, 1, ... in order.
ColorabilityResult k_colorable(const UGraph& g, std::size_t k, const std::vector<std::size_t>& pinned,
                               const Budget& budget = {});

/// Colors each m-subspace by the least line of its intersection with
/// S = span(e_1, ..., e_{n-m+1}); uses [n-m+1, 1]_q colors.
Coloring canonical_coloring(std::uint64_t q, std::size_t n, std::size_t m, const Limits& limits = {});

struct HomomorphismResult {
  Outcome outcome = Outcome::unknown;
  std::vector<std::size_t> map;  ///< set when found
  std::uint64_t nodes = 0;
};

/// Backtracking with forward checking and smallest-domain-first ordering.
/// hint[v], when present, is tried first for v.
HomomorphismResult find_homomorphism(const UGraph& from, const UGraph& to, const Budget& budget = {},
                                     const std::vector<std::optional<std::size_t>>& hint = {});
bool is_homomorphism(const UGraph& from, const UGraph& to, const std::vector<std::size_t>& map);

/// Vertex indices of qK_{2t:t} forming the spread clique.
std::vector<std::size_t> spread_clique(std::uint64_t q, std::size_t t, const Limits& limits = {});

}  // namespace ncgap
