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
 * @file gap.hpp
 * @brief Smallest scalar and vector alphabets, and the gap between them.
 *
 * q_s(N) is the least field size with a scalar linear solution, q_v(N) the
 * least q^t with a (q,t)-linear solution, and gap(N) = q_s(N) - q_v(N).
 * Values that a search could not settle are reported as brackets.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncgap/budget.hpp"
#include "ncgap/graph.hpp"
#include "ncgap/ic.hpp"
#include "ncgap/lincode.hpp"
#include "ncgap/network.hpp"

namespace ncgap {

/// Prime powers p^k with k >= 1.
bool is_prime_power(std::uint64_t n);
/// Smallest prime power >= x; x must be positive.
std::uint64_t psi(std::uint64_t x);
/// psi(num / den), for den > 0 and num > 0.
std::uint64_t psi_ratio(std::uint64_t num, std::uint64_t den);

struct Bracket {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool exact() const { return lower == upper; }
  std::string str() const;
};

enum class GapMethod { automatic, skeleton, exhaustive };

struct GapOptions {
  GapMethod method = GapMethod::automatic;
  Budget budget;
  Limits limits;
};

struct AlphabetResult {
  Bracket value;
  std::string method;  ///< skeleton-chi | homomorphism | IC | exhaustive
  std::optional<NetworkCode> code;  ///< certificate for value.upper
  std::size_t t = 1;                ///< vector length of the certificate
  std::optional<Coloring> coloring;                ///< skeleton coloring (q_s)
  std::optional<std::vector<std::size_t>> hom;     ///< skeleton homomorphism (q_v)
  std::optional<IndependentConfiguration> ic;      ///< IC witness (q_v)
  std::vector<std::size_t> skeleton_clique;        ///< refutes small targets (q_v)
  std::vector<std::string> notes;
};

/// (r, s) when n is the combination network N_{h,r,s} up to relabeling.
std::optional<std::pair<std::size_t, std::size_t>> combination_params(const Network& n);

AlphabetResult qs_exact(const Network& n, const GapOptions& opt = {});
AlphabetResult qv_exact(const Network& n, const GapOptions& opt = {});

struct GapReport {
  AlphabetResult qs;
  AlphabetResult qv;
  /// [max(0, qs.lower - qv.upper), qs.upper - qv.lower]
  Bracket gap;
};

GapReport gap_exact(const Network& n, const GapOptions& opt = {});

enum class FormulaKind {
  kneser_h2,   ///< gap(K_{q,t;2}) = psi(q^t+q^{t-1}-1) - q^t       (needs q >= 5 or t <= 3)
  minimal_h2,  ///< gap <= psi(q^t+q^{t-1}-1) - q^t for minimal h = 2, q_v = q^t
  kneser_t2,   ///< gap(K_{q,t;2}) >= psi(q^t+1) - q^t                (t >= 2)
  kneser_h3,   ///< gap(K_{q,t;h}) >= psi(q^t + q^{t-1}/(h-1)^e) - q^t (t >= 2, h >= 3)
  combination  ///< gap(N_{h,r,h}) <= psi(r-1) - psi(r-h+1)           (r >= h >= 2)
};

struct FormulaParams {
  std::uint64_t q = 2;
  std::uint64_t t = 1;
  std::uint64_t h = 2;
  std::uint64_t r = 2;
};

struct FormulaValue {
  std::int64_t value = 0;
  std::string relation;       ///< "=", ">=", "<="
  std::string expression;     ///< evaluated closed form
  std::string weaker;         ///< the simpler companion bound, evaluated
  bool hypotheses_met = true;
  std::string note;           ///< "outside stated hypotheses: ..." when not met
};

FormulaValue gap_formula(FormulaKind kind, const FormulaParams& p);
std::optional<FormulaKind> parse_formula_kind(const std::string& name);
std::string to_string(FormulaKind kind);

}  // namespace ncgap
