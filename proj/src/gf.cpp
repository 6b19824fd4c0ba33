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

#include "ncgap/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "ncgap/error.hpp"
#include "ncgap/poly.hpp"

namespace ncgap {

namespace detail {

struct FieldData {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> modulus;  // low degree first, monic
  std::vector<std::uint32_t> pow_p;    // p^0 .. p^m

  // log/antilog tables (q <= 2^16); exp has length 2(q-1) to skip a modulo
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> neg;
  std::vector<std::uint32_t> add;  // q*q table for small non-binary extensions

  bool has_tables() const { return !exp.empty(); }

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    for (std::uint32_t k = 0; k < m; ++k) {
      const std::uint32_t s = (a % p + b % p) % p;
      out += s * pow_p[k];
      a /= p;
      b /= p;
    }
    return out;
  }

  std::uint32_t neg_digits(std::uint32_t a) const {
    std::uint32_t out = 0;
    for (std::uint32_t k = 0; k < m; ++k) {
      const std::uint32_t d = a % p;
      out += ((p - d) % p) * pow_p[k];
      a /= p;
    }
    return out;
  }

  std::uint32_t schoolbook_mul(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint64_t> da(m), db(m), prod(2 * m, 0);
    for (std::uint32_t k = 0; k < m; ++k) {
      da[k] = a % p;
      db[k] = b % p;
      a /= p;
      b /= p;
    }
    for (std::uint32_t i = 0; i < m; ++i) {
      if (da[i] == 0) continue;
      for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    for (std::uint32_t i = 2 * m - 1; i >= m; --i) {
      const std::uint64_t lead = prod[i];
      if (lead == 0) continue;
      prod[i] = 0;
      const std::uint32_t shift = i - m;
      for (std::uint32_t j = 0; j < m; ++j) {
        prod[shift + j] = (prod[shift + j] + (p - lead) * modulus[j]) % p;
      }
    }
    std::uint32_t out = 0;
    for (std::uint32_t k = 0; k < m; ++k) out += static_cast<std::uint32_t>(prod[k]) * pow_p[k];
    return out;
  }
};

}  // namespace detail

namespace {

constexpr std::uint32_t kTableLimit = 1u << 16;
constexpr std::uint32_t kAddTableLimit = 256;

std::shared_ptr<const detail::FieldData> build_field(std::uint32_t p, std::uint32_t m,
                                                     std::vector<std::uint32_t> modulus) {
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->m = m;
  d->modulus = std::move(modulus);
  d->pow_p.assign(m + 1, 1);
  for (std::uint32_t k = 1; k <= m; ++k) d->pow_p[k] = d->pow_p[k - 1] * p;
  d->q = d->pow_p[m];
  const std::uint32_t q = d->q;

  if (m > 1 && p != 2 && q <= kAddTableLimit) {
    d->add.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) d->add[a * q + b] = d->add_digits(a, b);
  }
  if (q <= kTableLimit) {
    d->neg.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) d->neg[a] = d->neg_digits(a);

    // Find a generator of the multiplicative group by checking element orders.
    std::uint32_t gen = 0;
    for (std::uint32_t g = (q == 2 ? 1 : 2); g < q && gen == 0; ++g) {
      std::uint32_t x = g;
      std::uint32_t order = 1;
      while (x != 1) {
        x = d->schoolbook_mul(x, g);
        ++order;
      }
      if (order == q - 1) gen = g;
    }
    d->log.assign(q, 0);
    d->exp.assign(2 * static_cast<std::size_t>(q - 1), 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      d->exp[i] = x;
      d->exp[i + q - 1] = x;
      d->log[x] = i;
      x = d->schoolbook_mul(x, gen);
    }
  }
  return d;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t i = 5; i * i <= n; i += 6) {
    if (n % i == 0 || n % (i + 2) == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec() {
  static const std::shared_ptr<const detail::FieldData> f2 = build_field(2, 1, {0, 1});
  d_ = f2;
}

std::uint32_t FieldSpec::p() const { return d_->p; }
std::uint32_t FieldSpec::m() const { return d_->m; }
std::uint32_t FieldSpec::q() const { return d_->q; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const { return d_->modulus; }

Felt FieldSpec::add(Felt a, Felt b) const {
  const auto& d = *d_;
  if (d.p == 2) return Felt{a.code ^ b.code};
  if (d.m == 1) {
    const std::uint32_t s = a.code + b.code;
    return Felt{s >= d.p ? s - d.p : s};
  }
  if (!d.add.empty()) return Felt{d.add[a.code * d.q + b.code]};
  return Felt{d.add_digits(a.code, b.code)};
}

Felt FieldSpec::neg(Felt a) const {
  const auto& d = *d_;
  if (d.p == 2) return a;
  if (d.m == 1) return Felt{a.code == 0 ? 0 : d.p - a.code};
  if (!d.neg.empty()) return Felt{d.neg[a.code]};
  return Felt{d.neg_digits(a.code)};
}

Felt FieldSpec::sub(Felt a, Felt b) const { return add(a, neg(b)); }

Felt FieldSpec::mul(Felt a, Felt b) const {
  const auto& d = *d_;
  if (a.code == 0 || b.code == 0) return Felt{0};
  if (d.m == 1) {
    return Felt{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.code) * b.code % d.p)};
  }
  if (d.has_tables()) return Felt{d.exp[d.log[a.code] + d.log[b.code]]};
  return Felt{d.schoolbook_mul(a.code, b.code)};
}

Felt FieldSpec::pow(Felt a, std::uint64_t e) const {
  Felt result = one();
  Felt base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Felt FieldSpec::inv(Felt a) const {
  if (a.code == 0) throw InvalidArgument("inverse of zero in " + name());
  const auto& d = *d_;
  if (d.has_tables()) return Felt{d.exp[(d.q - 1 - d.log[a.code]) % (d.q - 1)]};
  return pow(a, d.q - 2);
}

Felt FieldSpec::from_int(std::int64_t v) const {
  const std::int64_t p = d_->p;
  return Felt{static_cast<std::uint32_t>(((v % p) + p) % p)};
}

std::vector<std::uint32_t> FieldSpec::digits(Felt a) const {
  std::vector<std::uint32_t> out(d_->m);
  std::uint32_t c = a.code;
  for (auto& x : out) {
    x = c % d_->p;
    c /= d_->p;
  }
  return out;
}

Felt FieldSpec::from_digits(std::span<const std::uint32_t> dig) const {
  if (dig.size() != d_->m) throw InvalidArgument("digit count must equal extension degree");
  std::uint32_t c = 0;
  for (std::size_t k = 0; k < dig.size(); ++k) {
    if (dig[k] >= d_->p) throw InvalidArgument("digit out of range");
    c += dig[k] * d_->pow_p[k];
  }
  return Felt{c};
}

std::string FieldSpec::name() const { return "F_" + std::to_string(d_->q); }

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus);
}

FieldSpec make_field(std::uint32_t p, std::uint32_t m, const Limits& limits) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw InvalidArgument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t k = 0; k < m; ++k) {
    q *= p;
    if (q > limits.max_field_order) {
      throw LimitExceeded("field order " + std::to_string(p) + "^" + std::to_string(m) +
                          " exceeds limit " + std::to_string(limits.max_field_order));
    }
  }

  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, m});
  if (it != cache.end()) return FieldSpec(it->second);

  std::vector<std::uint32_t> modulus{0, 1};
  if (m > 1) {
    const FieldSpec prime(build_field(p, 1, {0, 1}));
    const poly::Poly f = poly::smallest_monic_irreducible(prime, m);
    modulus.clear();
    for (Felt c : f) modulus.push_back(c.code);
  }
  auto data = build_field(p, m, std::move(modulus));
  cache.emplace(std::make_pair(p, m), data);
  return FieldSpec(data);
}

FieldSpec make_field_of_order(std::uint64_t q, const Limits& limits) {
  if (q < 2) throw InvalidArgument("field order must be a prime power >= 2");
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    // p is the least prime factor
    std::uint64_t rest = q;
    std::uint32_t m = 0;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest != 1) throw InvalidArgument(std::to_string(q) + " is not a prime power");
    if (q > limits.max_field_order) {
      throw LimitExceeded("field order " + std::to_string(q) + " exceeds limit");
    }
    return make_field(static_cast<std::uint32_t>(p), m, limits);
  }
  throw InvalidArgument(std::to_string(q) + " is not a prime power");
}

// ---------------------------------------------------------------------------

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Felt{0}) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

Matrix Matrix::from_codes(const FieldSpec& field, std::size_t cols,
                          const std::vector<std::vector<std::uint32_t>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionMismatch("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                              " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] >= field.q()) {
        throw InvalidArgument("entry " + std::to_string(rows[r][c]) + " is not an element of " + field.name());
      }
      m.set(r, c, Felt{rows[r][c]});
    }
  }
  return m;
}

void Matrix::append_row(std::span<const Felt> values) {
  if (values.size() != cols_) throw DimensionMismatch("appended row has wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Felt x) { return x.code == 0; });
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
  return t;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw DimensionMismatch("row block out of range");
  Matrix out(field_, count, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), out.data_.begin());
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_)) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Felt a = (*this)(i, k);
      if (a.code == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.set(i, j, field_.add(out(i, j), field_.mul(a, rhs(k, j))));
      }
    }
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> Matrix::to_codes() const {
  std::vector<std::vector<std::uint32_t>> out(rows_, std::vector<std::uint32_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).code;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                                b.data_.end());
}

Matrix vstack(std::span<const Matrix> parts) {
  if (parts.empty()) return {};
  const std::size_t cols = parts.front().cols();
  Matrix out(parts.front().field(), 0, cols);
  for (const Matrix& m : parts) {
    if (m.cols() != cols || !(m.field() == out.field())) throw DimensionMismatch("vstack of incompatible matrices");
    for (std::size_t r = 0; r < m.rows(); ++r) out.append_row(m.row(r));
  }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  const Matrix parts[] = {top, bottom};
  return vstack(parts);
}

Rref rref(const Matrix& input) {
  Rref out{input, 0, {}};
  Matrix& m = out.reduced;
  const FieldSpec& f = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c).code == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      auto a = m.row(pivot);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Felt scale = f.inv(m(r, c));
    if (scale != f.one()) {
      for (Felt& x : m.row(r)) x = f.mul(x, scale);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Felt factor = m(i, c);
      if (factor.code == 0) continue;
      auto src = m.row(r);
      auto dst = m.row(i);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (src[j].code != 0) dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

bool rowspace_contains(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || !(a.field() == b.field())) {
    throw DimensionMismatch("rowspace_contains: operands differ in width or field");
  }
  if (b.rows() == 0) return true;
  return rank(vstack(a, b)) == rank(a);
}

}  // namespace ncgap
