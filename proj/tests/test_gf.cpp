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

#include "ncgap/error.hpp"
#include "ncgap/gf.hpp"
#include "ncgap/poly.hpp"
#include "support.hpp"

using namespace ncgap;

namespace {

Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Felt{d(rng)});
  return m;
}

}  // namespace

TEST_SUITE("gf") {

TEST_CASE("field orders and names") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 125, 128, 256}) {
    auto f = make_field_of_order(q);
    CHECK(f.q() == q);
    CHECK(f.modulus().size() == f.m() + 1);
    CHECK(f.modulus().back() == 1);
  }
  CHECK(make_field(2, 2).name() == "F_4");
  CHECK_THROWS_AS(make_field_of_order(6), InvalidArgument);
  CHECK_THROWS_AS(make_field_of_order(1), InvalidArgument);
  CHECK_THROWS_AS(make_field(4, 1), InvalidArgument);
}

TEST_CASE("same parameters give the same representation") {
  CHECK(make_field(3, 2) == make_field(3, 2));
  CHECK(make_field(3, 2).modulus() == make_field_of_order(9).modulus());
}

TEST_CASE("modulus is the smallest monic irreducible") {
  // Oracle: a degree-m monic polynomial is irreducible iff it has no root
  // for m <= 3; the smallest such in the stated order for small fields.
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}, {2u, 4u}}) {
    auto f = make_field(p, m);
    auto mod = f.modulus();
    oracle::Field base{p, 1, {0, 1}};
    // The modulus has no root in F_p.
    for (std::uint32_t x = 0; x < p; ++x) {
      std::uint32_t v = 0, pw = 1;
      for (auto c : mod) {
        v = (v + c * pw) % p;
        pw = pw * x % p;
      }
      CHECK(v != 0);
    }
    // The field it defines has a multiplicative group of order q - 1 with
    // no zero divisors, which fails for reducible moduli.
    auto o = support::field(f);
    for (std::uint32_t a = 1; a < o.q(); ++a) CHECK(o.inv(a) != 0);
  }
}

TEST_CASE("arithmetic matches the oracle") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    auto f = make_field_of_order(q);
    auto o = support::field(f);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(Felt{a}, Felt{b}).code == o.add(a, b));
        CHECK(f.mul(Felt{a}, Felt{b}).code == o.mul(a, b));
        CHECK(f.sub(Felt{a}, Felt{b}).code == o.sub(a, b));
      }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (std::uint64_t q : {4, 9, 49, 256, 243, 1024, 65536, 131072}) {
    auto f = make_field_of_order(q);
    std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
    for (int i = 0; i < 200; ++i) {
      Felt a{d(rng)}, b{d(rng)}, c{d(rng)};
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(a, f.neg(a)) == f.zero());
      if (a != f.zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
    CHECK_THROWS_AS(f.inv(f.zero()), InvalidArgument);
  }
}

TEST_CASE("Frobenius fixes exactly the prime field") {
  auto f = make_field(3, 3);
  std::size_t fixed = 0;
  for (std::uint32_t a = 0; a < f.q(); ++a) fixed += f.pow(Felt{a}, 3) == Felt{a};
  CHECK(fixed == 3);
  CHECK(f.pow(Felt{5}, 26) == f.one());
}

TEST_CASE("digits round-trip") {
  auto f = make_field(5, 3);
  for (std::uint32_t a = 0; a < f.q(); ++a) CHECK(f.from_digits(f.digits(Felt{a})) == Felt{a});
  CHECK(f.from_int(-1) == Felt{4});
}

TEST_CASE("rank matches the oracle") {
  std::mt19937 rng(11);
  for (std::uint64_t q : {2, 3, 4, 5, 8, 9}) {
    auto f = make_field_of_order(q);
    auto o = support::field(f);
    for (int i = 0; i < 60; ++i) {
      std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      auto m = random_matrix(f, r, c, rng);
      if (i % 3 == 0 && r > 1) m.row(r - 1)[0] = m(0, 0);  // encourage dependence
      CHECK(rank(m) == oracle::rank(o, support::rows(m)));
    }
  }
}

TEST_CASE("rref is idempotent and has unit pivots") {
  std::mt19937 rng(3);
  auto f = make_field_of_order(7);
  for (int i = 0; i < 30; ++i) {
    auto m = random_matrix(f, 4, 6, rng);
    auto r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
    for (std::size_t k = 0; k < r.rank; ++k) {
      CHECK(r.reduced(k, r.pivots[k]) == f.one());
      for (std::size_t j = 0; j < 4; ++j)
        if (j != k) CHECK(r.reduced(j, r.pivots[k]) == f.zero());
    }
  }
}

TEST_CASE("row space containment") {
  auto f = make_field_of_order(3);
  auto a = Matrix::from_codes(f, 3, {{1, 0, 2}, {0, 1, 1}});
  CHECK(rowspace_contains(a, Matrix::from_codes(f, 3, {{1, 1, 0}})));
  CHECK_FALSE(rowspace_contains(a, Matrix::from_codes(f, 3, {{0, 0, 1}})));
  CHECK(rowspace_contains(a, Matrix(f, 0, 3)));
}

TEST_CASE("matrix product and shapes") {
  auto f = make_field_of_order(4);
  auto i = Matrix::identity(f, 3);
  auto m = Matrix::from_codes(f, 3, {{1, 2, 3}, {0, 1, 2}});
  CHECK(m * i == m);
  CHECK(m.transposed().transposed() == m);
  CHECK_THROWS_AS(i * m, DimensionMismatch);
  CHECK_THROWS_AS(Matrix::from_codes(f, 2, {{1, 4}}), InvalidArgument);
  CHECK_THROWS_AS(Matrix::from_codes(f, 2, {{1}}), InvalidArgument);
}

TEST_CASE("extension multiplication agrees with the big field") {
  // F_4 over F_2 with degree 2 is F_16; products commute and associate.
  poly::Extension ext(make_field_of_order(4), 2);
  auto f = ext.base();
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    poly::Poly a{Felt{static_cast<std::uint32_t>(rng() % 4)}, Felt{static_cast<std::uint32_t>(rng() % 4)}};
    poly::Poly b{Felt{static_cast<std::uint32_t>(rng() % 4)}, Felt{static_cast<std::uint32_t>(rng() % 4)}};
    poly::Poly c{Felt{static_cast<std::uint32_t>(rng() % 4)}, Felt{static_cast<std::uint32_t>(rng() % 4)}};
    CHECK(ext.mul(a, b) == ext.mul(b, a));
    CHECK(ext.mul(ext.mul(a, b), c) == ext.mul(a, ext.mul(b, c)));
  }
  CHECK(poly::is_irreducible(f, ext.modulus()));
}

TEST_CASE("field size limit") {
  Limits l;
  l.max_field_order = 100;
  CHECK_THROWS_AS(make_field_of_order(128, l), LimitExceeded);
}

}
