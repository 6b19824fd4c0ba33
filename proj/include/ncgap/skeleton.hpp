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

#include <string>
#include <vector>

#include "ncgap/graph.hpp"
#include "ncgap/lincode.hpp"
#include "ncgap/network.hpp"

namespace ncgap {

/// Skeleton of a DAG: one vertex per edge class T(e), where e leaves a node
/// of in-degree != 1 and T(e) collects every edge reachable from e through
/// nodes of in-degree exactly 1. Two classes are adjacent when they both
/// enter a common node.
struct SkeletonGraph {
  UGraph graph;                              ///< vertex i is classes[i]
  std::vector<EdgeId> class_ids;             ///< least edge id of each class, ascending
  std::vector<std::vector<EdgeId>> classes;  ///< sorted edge ids
  std::vector<std::size_t> class_of_edge;    ///< edge id -> vertex index
};

SkeletonGraph skeleton(const Network& n);

/// Source -> one middle node per vertex -> one terminal per edge, h = 2.
/// Node 0 is the source, vertex i becomes node i+1 fed by source edge i,
/// terminals follow in the order of g.edges(). Throws on isolated vertices.
Network reverse_skeleton(const UGraph& g);

/// skeleton(reverse_skeleton(g)) equals g under the class <-> vertex
/// correspondence given by the source edges.
bool skeleton_roundtrip_check(const UGraph& g);

/// Empty when solutions of n correspond to homomorphisms of its skeleton
/// into q-Kneser graphs (h = 2 and n minimal); otherwise the reason not.
std::string skeleton_equivalence_issue(const Network& n);

/// Every edge carries the label of its class.
NetworkCode code_from_skeleton_labels(const Network& n, const SkeletonGraph& skel,
                                      const std::vector<Subspace>& labels, std::size_t t);

/// Row space of each class's first edge.
std::vector<Subspace> skeleton_labels_from_code(const Network& n, const SkeletonGraph& skel,
                                                const NetworkCode& code);

}  // namespace ncgap
