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
 * @file codes.hpp
 * @brief Classical block codes and their link to combination networks.
 *
 * N_{h,r,s} has a scalar solution over an alphabet of size q exactly when a
 * length-r code with q^h words and minimum distance r-s+1 exists: source
 * edge i carries coordinate i of the codeword, and a terminal seeing any s
 * coordinates can still tell codewords apart.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncgap/budget.hpp"
#include "ncgap/gf.hpp"
#include "ncgap/lincode.hpp"

namespace ncgap {

using Word = std::vector<Felt>;

/// [r, h]_q linear code given by an h x r generator of rank h.
struct LinearCode {
  Matrix generator;

  const FieldSpec& field() const { return generator.field(); }
  std::size_t length() const { return generator.cols(); }
  std::size_t dimension() const { return generator.rows(); }
};

/// Throws InvalidArgument when the generator is rank deficient.
LinearCode make_linear_code(Matrix generator);

/// Generalized Reed-Solomon [r, h, r-h+1]_q code: columns are (1, a, ..., a^{h-1})
/// for the field elements a = 0, 1, ... in code order, plus (0, ..., 0, 1)
/// last when r = q + 1.
LinearCode rs_code(std::uint64_t q, std::size_t r, std::size_t h, const Limits& limits = {});

/// Arbitrary set of distinct words of a common length.
struct Codebook {
  FieldSpec field;
  std::size_t length = 0;
  std::vector<Word> words;
};

/// Throws on repeated words, wrong lengths or invalid symbols.
void validate(const Codebook& c);
/// All q^h codewords; throws LimitExceeded past limits.max_codewords.
Codebook codebook_of(const LinearCode& code, const Limits& limits = {});

std::size_t hamming_distance(const Word& a, const Word& b);
/// Minimum nonzero weight over all q^h codewords.
std::size_t min_distance(const LinearCode& code, const Limits& limits = {});
/// Minimum pairwise distance; 0 for fewer than two words would be
/// meaningless, so that case throws.
std::size_t min_distance(const Codebook& code);

/// True iff every s-subset of coordinates determines the codeword.
bool projections_injective(const Codebook& code, std::size_t s);

struct CodeSolvability {
  bool solvable = false;
  std::size_t distance = 0;
  std::size_t required = 0;  ///< r - s + 1
  /// Scalar linear solution of N_{h,r,s}, for linear codes that qualify.
  std::optional<NetworkCode> linear_solution;
  /// Forwarding description for nonlinear codebooks that qualify.
  std::string forwarding;
};

CodeSolvability solvability_by_code(unsigned h, std::size_t r, std::size_t s, const LinearCode& code,
                                    const Limits& limits = {});
CodeSolvability solvability_by_code(unsigned h, std::size_t r, std::size_t s, const Codebook& code);

struct CodebookSearchResult {
  std::size_t best_distance = 0;
  Codebook witness;
  std::uint64_t nodes = 0;
  bool exact = false;
};

/// Largest minimum distance of any `size`-word code of length r over F_q,
/// by exhaustive search. Words are translated so one codeword is zero.
/// Refuses instances with size * r > 24.
CodebookSearchResult max_codebook_distance(std::uint64_t q, std::size_t r, std::size_t size,
                                           const Budget& budget = {});

}  // namespace ncgap
