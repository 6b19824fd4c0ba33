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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "ncgap/budget.hpp"
#include "ncgap/gf.hpp"

namespace ncgap {

/// Subspace of F_q^n stored by its RREF basis, so equal subspaces have
/// identical representations.
///
/// Subspaces are totally ordered: first by dimension, then by pivot set
/// (lexicographic), then by basis entries (row-major lexicographic). Within a
/// fixed dimension this is the order produced by enumerate_subspaces.
class Subspace {
 public:
  Subspace() = default;

  /// Span of the rows of `vectors`.
  static Subspace span(const Matrix& vectors);
  static Subspace zero(const FieldSpec& field, std::size_t ambient);
  static Subspace full(const FieldSpec& field, std::size_t ambient);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Subspace& other) const;
  bool contains_vector(std::span<const Felt> v) const;
  /// Coordinates of v with respect to basis(); v must lie in the subspace.
  std::vector<Felt> coordinates(std::span<const Felt> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_.cols() == b.basis_.cols() && a.basis_ == b.basis_;
  }
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical subspace spanned by the rows of `vectors` over `field`.
Subspace canonicalize(const FieldSpec& field, const Matrix& vectors);

/// Number of t-dimensional subspaces of F_q^n. Throws on t > n or overflow.
std::uint64_t gaussian_coefficient(std::uint64_t n, std::uint64_t t, std::uint64_t q);

/// All t-subspaces of F_q^n in canonical order. Walks RREF profiles (pivot
/// set, then free entries), so the cost is linear in the output.
std::vector<Subspace> enumerate_subspaces(const FieldSpec& field, std::size_t n, std::size_t t,
                                          const Limits& limits = {});

Subspace sum(std::span<const Subspace> spaces);
Subspace sum(const Subspace& a, const Subspace& b);
/// dim(V_1 + ... + V_k). Throws DimensionMismatch on mixed ambient spaces.
std::size_t sum_dim(std::span<const Subspace> spaces);
std::size_t sum_dim(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// A t-spread of F_q^{2t}: q^t + 1 pairwise trivially intersecting
/// t-subspaces. Built from the lines of F_{q^t}^2 read over F_q.
std::vector<Subspace> spread(const FieldSpec& field, std::size_t t, const Limits& limits = {});

}  // namespace ncgap
