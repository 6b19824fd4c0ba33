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

#include "ncgap/subspace.hpp"

#include <algorithm>
#include <limits>

#include "ncgap/error.hpp"
#include "ncgap/poly.hpp"

namespace ncgap {

Subspace Subspace::span(const Matrix& vectors) {
  Rref r = rref(vectors);
  return Subspace(r.reduced.row_block(0, r.rank), std::move(r.pivots));
}

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient) {
  return Subspace(Matrix(field, 0, ambient), {});
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(field, ambient), std::move(piv));
}

bool Subspace::contains_vector(std::span<const Felt> v) const {
  if (v.size() != ambient()) throw DimensionMismatch("vector length differs from ambient dimension");
  const FieldSpec& f = field();
  std::vector<Felt> w(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Felt c = w[pivots_[i]];
    if (c.code == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (row[j].code != 0) w[j] = f.sub(w[j], f.mul(c, row[j]));
    }
  }
  return std::all_of(w.begin(), w.end(), [](Felt x) { return x.code == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient() != ambient()) throw DimensionMismatch("subspaces live in different ambient spaces");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains_vector(other.basis_.row(i))) return false;
  }
  return true;
}

std::vector<Felt> Subspace::coordinates(std::span<const Felt> v) const {
  std::vector<Felt> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.pivots_.begin(), a.pivots_.end(),
                                                      b.pivots_.begin(), b.pivots_.end());
      c != 0) {
    return c;
  }
  return a.basis_ <=> b.basis_;
}

Subspace canonicalize(const FieldSpec& field, const Matrix& vectors) {
  if (!(vectors.field() == field)) throw DimensionMismatch("vectors are over a different field");
  return Subspace::span(vectors);
}

std::uint64_t gaussian_coefficient(std::uint64_t n, std::uint64_t t, std::uint64_t q) {
  if (t > n) throw InvalidArgument("gaussian coefficient needs t <= n");
  if (q < 2) throw InvalidArgument("gaussian coefficient needs q >= 2");
  t = std::min(t, n - t);
  constexpr unsigned __int128 kMax = std::numeric_limits<std::uint64_t>::max();
  auto qpow_minus_one = [&](std::uint64_t e) {
    unsigned __int128 v = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
      v *= q;
      if (v > kMax) throw LimitExceeded("gaussian coefficient overflows 64 bits");
    }
    return v - 1;
  };
  // Each partial product is itself a Gaussian coefficient [n, i+1]_q.
  unsigned __int128 result = 1;
  for (std::uint64_t i = 0; i < t; ++i) {
    const unsigned __int128 num = qpow_minus_one(n - i);
    const unsigned __int128 den = qpow_minus_one(i + 1);
    const unsigned __int128 g = result / den;  // den divides result * num; split to limit overflow
    const unsigned __int128 rem = result % den;
    // result * num / den == g * num + rem * num / den
    unsigned __int128 hi = g * num;
    if (g != 0 && hi / g != num) throw LimitExceeded("gaussian coefficient overflows 64 bits");
    unsigned __int128 lo = rem * num;
    if (rem != 0 && lo / rem != num) throw LimitExceeded("gaussian coefficient overflows 64 bits");
    result = hi + lo / den;
    if (result > kMax) throw LimitExceeded("gaussian coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

std::vector<Subspace> enumerate_subspaces(const FieldSpec& field, std::size_t n, std::size_t t,
                                          const Limits& limits) {
  if (t > n) throw InvalidArgument("subspace dimension exceeds ambient dimension");
  const std::uint64_t total = gaussian_coefficient(n, t, field.q());
  if (total > limits.max_subspaces) {
    throw LimitExceeded("[" + std::to_string(n) + " " + std::to_string(t) + "]_" +
                        std::to_string(field.q()) + " = " + std::to_string(total) +
                        " subspaces exceeds limit " + std::to_string(limits.max_subspaces));
  }
  std::vector<Subspace> out;
  out.reserve(total);
  const std::uint32_t q = field.q();

  std::vector<std::size_t> piv(t);
  for (std::size_t i = 0; i < t; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;  // row-major
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (!is_pivot[j]) free.emplace_back(i, j);

    Matrix m(field, t, n);
    for (std::size_t i = 0; i < t; ++i) m.set(i, piv[i], field.one());
    std::vector<std::uint32_t> digit(free.size(), 0);
    while (true) {
      out.push_back(Subspace::span(m));
      // Odometer: the last free position varies fastest, giving entry order.
      bool advanced = false;
      for (std::size_t k = free.size(); k-- > 0;) {
        if (++digit[k] < q) {
          m.set(free[k].first, free[k].second, Felt{digit[k]});
          advanced = true;
          break;
        }
        digit[k] = 0;
        m.set(free[k].first, free[k].second, Felt{0});
      }
      if (!advanced) break;
    }

    // next pivot set in lexicographic order
    std::size_t i = t;
    while (i > 0 && piv[i - 1] == n - t + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < t; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

Subspace sum(std::span<const Subspace> spaces) {
  if (spaces.empty()) throw InvalidArgument("sum of an empty list of subspaces");
  std::vector<Matrix> bases;
  bases.reserve(spaces.size());
  for (const Subspace& s : spaces) {
    if (s.ambient() != spaces.front().ambient() || !(s.field() == spaces.front().field())) {
      throw DimensionMismatch("sum of subspaces from different ambient spaces");
    }
    bases.push_back(s.basis());
  }
  return Subspace::span(vstack(bases));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  const Subspace parts[] = {a, b};
  return sum(parts);
}

std::size_t sum_dim(std::span<const Subspace> spaces) { return sum(spaces).dim(); }
std::size_t sum_dim(const Subspace& a, const Subspace& b) { return sum(a, b).dim(); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field())) {
    throw DimensionMismatch("intersection of subspaces from different ambient spaces");
  }
  // Zassenhaus: rows (u | u) for u in a, (v | 0) for v in b.
  const std::size_t n = a.ambient();
  Matrix z(a.field(), a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      z.set(i, j, a.basis()(i, j));
      z.set(i, n + j, a.basis()(i, j));
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) z.set(a.dim() + i, j, b.basis()(i, j));
  const Rref r = rref(z);
  Matrix meet(a.field(), 0, n);
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] >= n) meet.append_row(r.reduced.row(i).subspan(n, n));
  }
  return Subspace::span(meet);
}

std::vector<Subspace> spread(const FieldSpec& field, std::size_t t, const Limits& limits) {
  if (t < 1) throw InvalidArgument("spread needs t >= 1");
  std::uint64_t qt = 1;
  for (std::size_t i = 0; i < t; ++i) {
    qt *= field.q();
    if (qt + 1 > limits.max_subspaces) throw LimitExceeded("spread size exceeds subspace limit");
  }
  const poly::Extension ext(field, static_cast<unsigned>(t));
  std::vector<Subspace> out;
  out.reserve(qt + 1);

  // {(x, x*b) : x in F_{q^t}} for every b, and {(0, x)}.
  for (std::uint64_t idx = 0; idx < qt; ++idx) {
    poly::Poly b(t);
    std::uint64_t rest = idx;
    for (std::size_t k = 0; k < t; ++k) {
      b[k] = Felt{static_cast<std::uint32_t>(rest % field.q())};
      rest /= field.q();
    }
    Matrix m(field, t, 2 * t);
    for (std::size_t i = 0; i < t; ++i) {
      poly::Poly e(t, Felt{0});
      e[i] = field.one();
      const poly::Poly eb = ext.mul(e, b);
      m.set(i, i, field.one());
      for (std::size_t k = 0; k < t; ++k) m.set(i, t + k, eb[k]);
    }
    out.push_back(Subspace::span(m));
  }
  Matrix inf(field, t, 2 * t);
  for (std::size_t i = 0; i < t; ++i) inf.set(i, t + i, field.one());
  out.push_back(Subspace::span(inf));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncgap
