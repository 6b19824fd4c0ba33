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

#include "ncgap/gf.hpp"
#include "ncgap/lincode.hpp"
#include "ncgap/network.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::Field field(const ncgap::FieldSpec& f) {
  oracle::Field o;
  o.p = f.p();
  o.m = f.m();
  o.modulus = f.modulus();
  return o;
}

inline oracle::Rows rows(const ncgap::Matrix& m) { return m.to_codes(); }

inline oracle::SimNetwork sim(const ncgap::Network& n) {
  oracle::SimNetwork s;
  s.nodes = n.node_count();
  s.source = n.source();
  s.terminals = n.terminals();
  for (const auto& e : n.edges()) s.edges.emplace_back(e.from, e.to);
  return s;
}

inline bool simulate(const ncgap::Network& n, const ncgap::NetworkCode& c) {
  std::vector<oracle::Rows> g;
  for (ncgap::EdgeId e = 0; e < n.edge_count(); ++e) g.push_back(rows(c.at(e)));
  return oracle::simulate_solution(field(c.field), sim(n), g, c.width());
}

}  // namespace support
