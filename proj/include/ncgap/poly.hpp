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

#include <vector>

#include "ncgap/gf.hpp"

// Univariate polynomials over a FieldSpec, coefficients low degree first.
// Only what modulus selection and extension arithmetic need.
namespace ncgap::poly {

using Poly = std::vector<Felt>;

void trim(Poly& a);
int degree(const Poly& a);  // -1 for the zero polynomial
Poly mul(const FieldSpec& f, const Poly& a, const Poly& b);
/// a mod d, d monic.
Poly mod(const FieldSpec& f, Poly a, const Poly& d);
/// Trial division by every monic polynomial of degree <= deg(a)/2.
bool is_irreducible(const FieldSpec& f, const Poly& monic);
/// Smallest monic irreducible of the given degree, comparing coefficients
/// from the constant term upwards.
Poly smallest_monic_irreducible(const FieldSpec& f, unsigned degree);

/// F_{q^d} as d-tuples over a base field F_q, modulo a fixed irreducible.
class Extension {
 public:
  Extension(FieldSpec base, unsigned degree);

  const FieldSpec& base() const { return base_; }
  unsigned degree() const { return degree_; }
  const Poly& modulus() const { return modulus_; }

  /// Product of two d-tuples, returned as a d-tuple.
  Poly mul(const Poly& a, const Poly& b) const;

 private:
  FieldSpec base_;
  unsigned degree_;
  Poly modulus_;
};

}  // namespace ncgap::poly
