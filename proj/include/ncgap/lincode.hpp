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
 * @file lincode.hpp
 * @brief Linear network codes stored as global coding matrices.
 *
 * A (q,t)-linear code assigns every edge a t x ht matrix G_e over F_q; the
 * symbol on e is G_e (x_1 | ... | x_h)^T. Local coding is not stored. A code
 * is a solution when each node's outgoing matrices lie in the row space of
 * its stacked incoming ones and every terminal sees rank ht.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncgap/budget.hpp"
#include "ncgap/gf.hpp"
#include "ncgap/network.hpp"
#include "ncgap/subspace.hpp"

namespace ncgap {

struct NetworkCode {
  FieldSpec field;
  std::size_t t = 1;
  unsigned h = 1;
  std::map<EdgeId, Matrix> edges;

  std::size_t width() const { return h * t; }
  /// Throws InvalidArgument when edge e has no assignment.
  const Matrix& at(EdgeId e) const;
};

struct Verdict {
  bool accepted = false;
  bool locally_consistent = false;
  /// (terminal, rank of its stacked incoming matrices), in terminal order.
  std::vector<std::pair<NodeId, std::size_t>> terminal_ranks;
  std::optional<NodeId> bad_node;
  std::optional<EdgeId> bad_edge;
  /// Human-readable description of the first violation; empty on accept.
  std::string first_violation;
};

/// Throws InvalidArgument if an edge is unassigned or a matrix has the
/// wrong shape or field.
Verdict verify_solution(const Network& n, const NetworkCode& code);

/// Stacked incoming matrices G_v of a non-source node.
Matrix node_matrix(const Network& n, const NetworkCode& code, NodeId v);
/// dim M(v) = rank G_v. Throws for the source.
std::size_t node_space_dim(const Network& n, const NetworkCode& code, NodeId v);

/// Source edge k carries source_rows[k]; every node of in-degree 1 copies
/// its incoming matrix to all outgoing edges. Throws if a node with
/// in-degree >= 2 has outgoing edges.
NetworkCode forward_code(const Network& n, const FieldSpec& field, std::size_t t,
                         const std::vector<Matrix>& source_rows);

/// Scalar code on a combination network: source edge i carries column i of
/// the h x r generator G.
NetworkCode solution_from_classical_code(const Network& n, const Matrix& generator);

struct SearchResult {
  Outcome outcome = Outcome::unknown;
  std::optional<NetworkCode> code;
  std::uint64_t nodes = 0;
};

/// Exhaustive (q,t)-linear solution search. Edge spaces are chosen in the
/// topological order of their heads, each of dimension min(t, dim M(tail));
/// the first source edge is pinned to span(e_1..e_t) and parallel edges take
/// non-decreasing candidates. Outcome::none is a certificate over the
/// complete space; budget exhaustion gives Outcome::unknown.
SearchResult search_solution(const Network& n, const FieldSpec& field, std::size_t t,
                             const Budget& budget = {}, const Limits& limits = {});

/// (q,t) solution on n -> (q,1) solution on parallelize(n, t), by splitting
/// each matrix into its rows.
NetworkCode parallelize_code(const Network& n, const NetworkCode& code);

/// Solution on n -> solution on extend_messages(n, new_h).
NetworkCode extend_code(const Network& n, const NetworkCode& code, unsigned new_h);

/// Solution on extended = extend_messages(n, h') -> solution on n, using
/// coordinates relative to the space the new source sends into the old one.
/// Throws InvalidArgument if some original edge carries content outside it.
NetworkCode restrict_extended_code(const Network& n, const Network& extended, const NetworkCode& code);

/// t x width matrix whose first rows are the basis of s, rest zero.
Matrix padded_basis(const Subspace& s, std::size_t t);

}  // namespace ncgap
