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
 * @file certificate.hpp
 * @brief Self-contained certificates and an independent checker.
 *
 * The checker rebuilds every object from field and subspace primitives and
 * never calls the searches, verifiers or graph builders that produced the
 * certificate. Certificate types:
 *
 *   coloring       {graph, colors, clique?, claim: {colors | chromatic_number, exact?}}
 *   homomorphism   {from, to, map}
 *   network_code   {network, code}
 *   ic             {q, t, h, alpha, members: [[rows]...], claim: {size, maximum?}}
 *   linear_code    {q, generator, claim: {min_distance}}
 *   gap            {network, qs: {lower, upper, t, code?}, qv: {...}}
 *
 * Graph specs: {kind: qkneser, q, n, m}, {kind: qkneser_hyper, q, t, h},
 * {kind: complete, n} or {kind: explicit, vertices, edges}.
 */

#pragma once

#include <string>
#include <vector>

#include "ncgap/budget.hpp"
#include "ncgap/codes.hpp"
#include "ncgap/gap.hpp"
#include "ncgap/graph.hpp"
#include "ncgap/ic.hpp"
#include "ncgap/io.hpp"
#include "ncgap/lincode.hpp"
#include "ncgap/network.hpp"

namespace ncgap::cert {

using io::json;

struct CheckReport {
  bool ok = true;
  /// Claims that were not re-derived (they rest on an exhaustive search).
  std::vector<std::string> unverified;
  std::vector<std::string> messages;

  void fail(std::string why) {
    ok = false;
    messages.push_back("FAIL: " + std::move(why));
  }
  void pass(std::string what) { messages.push_back("ok: " + std::move(what)); }
};

/// The budget bounds the re-search used for chromatic lower bounds.
CheckReport check(const json& certificate, const Budget& budget = Budget::nodes(20'000'000));

json qkneser_spec(std::uint64_t q, std::size_t n, std::size_t m);
json qkneser_hyper_spec(std::uint64_t q, std::size_t t, unsigned h);
json complete_spec(std::size_t n);
json explicit_spec(const UGraph& g);

json coloring_certificate(const json& graph, const Coloring& c, const std::vector<std::size_t>& clique,
                          bool exact);
json homomorphism_certificate(const json& from, const json& to, const std::vector<std::size_t>& map);
json code_certificate(const Network& n, const NetworkCode& code);
json ic_certificate(const IndependentConfiguration& c, unsigned alpha, bool maximum);
json linear_code_certificate(const LinearCode& code, std::size_t min_distance);
json gap_certificate(const Network& n, const GapReport& r);

}  // namespace ncgap::cert
