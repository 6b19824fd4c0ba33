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
 * @file gf.hpp
 * @brief Finite fields F_{p^m} and dense matrices over them.
 *
 * Elements are packed as integers: the polynomial-basis coefficient vector
 * (c_0, ..., c_{m-1}) is stored as c_0 + c_1 p + ... + c_{m-1} p^{m-1}. The
 * modulus is the lexicographically smallest monic irreducible polynomial of
 * degree m, coefficients compared from the constant term upwards, so two
 * calls of make_field(p, m) always produce the same representation.
 *
 * Multiplication uses log/antilog tables up to q = 2^16 and schoolbook
 * multiplication with reduction above that.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ncgap/budget.hpp"

namespace ncgap {

/// Field element, encoded in base p. Only meaningful together with its field.
struct Felt {
  std::uint32_t code = 0;

  constexpr Felt() = default;
  constexpr explicit Felt(std::uint32_t c) : code(c) {}

  friend constexpr bool operator==(Felt, Felt) = default;
  friend constexpr auto operator<=>(Felt, Felt) = default;
};

namespace detail {
struct FieldData;
}

/// Descriptor of F_q, q = p^m. Cheap to copy; immutable.
class FieldSpec {
 public:
  /// F_2.
  FieldSpec();

  std::uint32_t p() const;
  std::uint32_t m() const;
  std::uint32_t q() const;
  /// Coefficients of the monic modulus, low degree first (size m + 1).
  const std::vector<std::uint32_t>& modulus() const;
  bool is_prime_field() const { return m() == 1; }

  Felt zero() const { return Felt{0}; }
  Felt one() const { return Felt{1}; }
  bool valid(Felt a) const { return a.code < q(); }

  Felt add(Felt a, Felt b) const;
  Felt sub(Felt a, Felt b) const;
  Felt neg(Felt a) const;
  Felt mul(Felt a, Felt b) const;
  /// Throws InvalidArgument for a = 0.
  Felt inv(Felt a) const;
  Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }
  Felt pow(Felt a, std::uint64_t e) const;

  /// Image of an integer in the prime subfield.
  Felt from_int(std::int64_t v) const;
  /// Base-p digits of the encoding, low degree first (size m).
  std::vector<std::uint32_t> digits(Felt a) const;
  Felt from_digits(std::span<const std::uint32_t> d) const;

  /// "F_4" etc.
  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  friend FieldSpec make_field(std::uint32_t, std::uint32_t, const Limits&);
  explicit FieldSpec(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

  std::shared_ptr<const detail::FieldData> d_;
};

/// Builds F_{p^m}. Throws InvalidArgument for non-prime p or m < 1, and
/// LimitExceeded when p^m exceeds limits.max_field_order.
FieldSpec make_field(std::uint32_t p, std::uint32_t m, const Limits& limits = {});

/// Field of the given prime-power order.
FieldSpec make_field_of_order(std::uint64_t q, const Limits& limits = {});

bool is_prime(std::uint64_t n);

/// Dense row-major matrix over a FieldSpec.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  /// Entries given as element codes. Throws on ragged rows or invalid codes.
  static Matrix from_codes(const FieldSpec& field, std::size_t cols,
                           const std::vector<std::vector<std::uint32_t>>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Felt operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Felt v) { data_[r * cols_ + c] = v; }

  std::span<const Felt> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Felt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  void append_row(std::span<const Felt> values);

  bool is_zero() const;
  Matrix transposed() const;
  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;
  Matrix operator*(const Matrix& rhs) const;

  std::vector<std::vector<std::uint32_t>> to_codes() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  /// Row-major lexicographic order on entry codes (shape compared first).
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Felt> data_;
};

/// Vertical concatenation. All parts must share field and column count.
Matrix vstack(std::span<const Matrix> parts);
Matrix vstack(const Matrix& top, const Matrix& bottom);

struct Rref {
  Matrix reduced;  ///< same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivot = leftmost column, first nonzero row.
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// True iff every row of b lies in the row space of a.
bool rowspace_contains(const Matrix& a, const Matrix& b);

}  // namespace ncgap
