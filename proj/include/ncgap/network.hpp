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

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncgap/budget.hpp"
#include "ncgap/subspace.hpp"

namespace ncgap {

using NodeId = std::size_t;
using EdgeId = std::size_t;

enum class NodeRole { source, internal, terminal };

struct Edge {
  EdgeId id;
  NodeId from;
  NodeId to;
};

/// Single-source multicast network on a directed acyclic multigraph.
///
/// Nodes and edges are numbered densely from 0. Parallel edges are distinct
/// edges with their own ids. Every terminal demands all h source messages.
class Network {
 public:
  Network() = default;
  Network(std::size_t node_count, NodeId source, std::vector<NodeId> terminals, unsigned h);

  EdgeId add_edge(NodeId from, NodeId to);

  std::size_t node_count() const { return in_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeId>& in_edges(NodeId v) const { return in_.at(v); }
  const std::vector<EdgeId>& out_edges(NodeId v) const { return out_.at(v); }
  std::size_t in_degree(NodeId v) const { return in_.at(v).size(); }
  std::size_t out_degree(NodeId v) const { return out_.at(v).size(); }

  NodeId source() const { return source_; }
  const std::vector<NodeId>& terminals() const { return terminals_; }
  unsigned h() const { return h_; }
  NodeRole role(NodeId v) const;
  bool is_terminal(NodeId v) const { return is_terminal_.at(v); }

  const std::string& name(NodeId v) const { return names_.at(v); }
  void set_name(NodeId v, std::string name) { names_.at(v) = std::move(name); }
  /// Display name: the stored name, or the numeric id.
  std::string display_name(NodeId v) const;

  const std::optional<Subspace>& label(NodeId v) const { return labels_.at(v); }
  void set_label(NodeId v, Subspace s) { labels_.at(v) = std::move(s); }
  bool has_labels() const;

  /// Throws InvalidArgument if the graph has a directed cycle.
  std::vector<NodeId> topological_order() const;

  /// Structural checks: acyclic, source has in-degree 0, terminals distinct
  /// and not the source, h >= 1. Throws InvalidArgument on failure.
  void validate() const;

  /// Nodes that lie on no source-to-terminal path.
  std::vector<NodeId> non_essential_nodes() const;
  bool all_essential() const { return non_essential_nodes().empty(); }

  /// Copy without edge e; edge ids above e shift down by one.
  Network without_edge(EdgeId e) const;

 private:
  NodeId source_ = 0;
  std::vector<NodeId> terminals_;
  unsigned h_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<bool> is_terminal_;
  std::vector<std::string> names_;
  std::vector<std::optional<Subspace>> labels_;
};

/// Drops non-essential nodes (and their edges), renumbering densely.
Network prune(const Network& n);

/// The butterfly network with the usual labels: edges e1..e9 get ids 0..8.
///   e1: sigma->nu1  e2: sigma->nu2  e3: nu1->nu3  e4: nu2->nu3  e5: nu1->tau1
///   e6: nu3->nu4    e7: nu2->tau2   e8: nu4->tau1 e9: nu4->tau2
Network build_butterfly();

/// N_{h,r,s}: source -> r middle nodes -> one terminal per s-subset.
/// Node 0 is the source, nodes 1..r the middle layer (source edge i-1 feeds
/// middle node i), then terminals in lexicographic order of their subsets.
Network build_combination(unsigned h, std::size_t r, std::size_t s, const Limits& limits = {});

/// The Kneser network K_{q,t;h}: middle nodes are all t-subspaces of
/// F_q^{ht} (canonical order), terminals are the h-subsets that span.
/// Middle nodes can always be listed; terminals are generated on demand.
class KneserNetwork {
 public:
  KneserNetwork(std::uint64_t q, std::size_t t, unsigned h, const Limits& limits = {});

  const FieldSpec& field() const { return field_; }
  std::size_t t() const { return t_; }
  unsigned h() const { return h_; }
  const std::vector<Subspace>& middle() const { return middle_; }

  /// Exact count from the product formula; throws LimitExceeded on overflow.
  std::uint64_t terminal_count() const;
  bool is_terminal(std::span<const std::size_t> middle_indices) const;
  /// Streams terminals (sorted index tuples, lexicographic order). The
  /// callback returns false to stop early.
  void for_each_terminal(const std::function<bool(std::span<const std::size_t>)>& visit) const;

  /// Materialized network; throws LimitExceeded past limits.max_terminals.
  Network materialize(const Limits& limits = {}) const;

 private:
  FieldSpec field_;
  std::size_t t_;
  unsigned h_;
  std::vector<Subspace> middle_;
};

/// Materialized K_{q,t;h}.
Network build_kneser(std::uint64_t q, std::size_t t, unsigned h, const Limits& limits = {});

/// Adds a new source with h parallel edges to the old source and h'-h
/// parallel edges to every terminal. The new source is the last node; the
/// original edges keep their ids and the new edges follow.
Network extend_messages(const Network& n, unsigned new_h);

/// Every edge duplicated m times (edge e becomes e*m .. e*m+m-1), h -> h*m.
Network parallelize(const Network& n, unsigned m);

/// Minimum number of edges separating the source from a terminal.
std::size_t min_cut(const Network& n, NodeId terminal);

enum class Minimality { minimal, not_minimal, unsolvable };

struct MinimalityReport {
  Minimality status = Minimality::unsolvable;
  /// not_minimal: an edge whose removal keeps every cut >= h.
  std::optional<EdgeId> redundant_edge;
  /// unsolvable: a terminal with min-cut < h.
  std::optional<NodeId> deficient_terminal;
};

/// Minimal iff solvable and removing any single edge drops some terminal's
/// min-cut below h.
MinimalityReport is_minimal(const Network& n);

}  // namespace ncgap
