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

#include "ncgap/poly.hpp"

#include "ncgap/error.hpp"

namespace ncgap::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == Felt{0}) a.pop_back();
}

int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[static_cast<std::size_t>(i)] != Felt{0}) return i;
  }
  return -1;
}

Poly mul(const FieldSpec& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Felt{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Felt{0}) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  trim(out);
  return out;
}

Poly mod(const FieldSpec& f, Poly a, const Poly& d) {
  const int dd = degree(d);
  if (dd < 0) throw InvalidArgument("polynomial division by zero");
  if (d[static_cast<std::size_t>(dd)] != f.one()) {
    throw InvalidArgument("polynomial divisor must be monic");
  }
  for (int i = degree(a); i >= dd; i = degree(a)) {
    const Felt lead = a[static_cast<std::size_t>(i)];
    const std::size_t shift = static_cast<std::size_t>(i - dd);
    for (int j = 0; j <= dd; ++j) {
      const std::size_t k = shift + static_cast<std::size_t>(j);
      a[k] = f.sub(a[k], f.mul(lead, d[static_cast<std::size_t>(j)]));
    }
  }
  trim(a);
  return a;
}

namespace {

// Monic polynomial of the given degree whose lower coefficients are the
// base-q digits of `index`, constant term most significant.
Poly monic_from_index(const FieldSpec& f, unsigned deg, std::uint64_t index) {
  Poly p(deg + 1, Felt{0});
  p[deg] = f.one();
  for (unsigned k = deg; k-- > 0;) {
    p[k] = Felt{static_cast<std::uint32_t>(index % f.q())};
    index /= f.q();
  }
  return p;
}

std::uint64_t int_pow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_irreducible(const FieldSpec& f, const Poly& monic) {
  const int deg = degree(monic);
  if (deg < 1) return false;
  for (unsigned dd = 1; dd <= static_cast<unsigned>(deg) / 2; ++dd) {
    const std::uint64_t count = int_pow(f.q(), dd);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (mod(f, monic, monic_from_index(f, dd, idx)).empty()) return false;
    }
  }
  return true;
}

Poly smallest_monic_irreducible(const FieldSpec& f, unsigned deg) {
  if (deg < 1) throw InvalidArgument("irreducible polynomial degree must be >= 1");
  const std::uint64_t count = int_pow(f.q(), deg);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly cand = monic_from_index(f, deg, idx);
    if (is_irreducible(f, cand)) return cand;
  }
  throw Error("no irreducible polynomial found");  // unreachable for finite fields
}

Extension::Extension(FieldSpec base, unsigned degree)
    : base_(std::move(base)), degree_(degree) {
  modulus_ = smallest_monic_irreducible(base_, degree_);
}

Poly Extension::mul(const Poly& a, const Poly& b) const {
  Poly r = mod(base_, poly::mul(base_, a, b), modulus_);
  r.resize(degree_, Felt{0});
  return r;
}

}  // namespace ncgap::poly
