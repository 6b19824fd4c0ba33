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

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ncgap/subspace.hpp"

namespace ncgap {

/// Fixed-size bitset sized at runtime.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set_all() {
    for (auto& w : w_) w = ~std::uint64_t{0};
    trim();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  /// First set bit at or after `from`, or size().
  std::size_t next(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t wi = from >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return std::min(n_, (wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
      if (++wi >= w_.size()) return n_;
      w = w_[wi];
    }
  }
  std::size_t first() const { return next(0); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  std::size_t and_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
    return c;
  }
  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Simple undirected graph on vertices 0..n-1, optionally labeled by
/// subspaces and by external integer ids.
class UGraph {
 public:
  UGraph() = default;
  explicit UGraph(std::size_t n);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Adds {u, v}; duplicate edges are ignored. Throws on self-loops.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const Bitset& neighbours(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return nbr_[v].size(); }
  const std::vector<std::size_t>& neighbour_list(std::size_t v) const { return nbr_[v]; }
  /// Edges with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  void set_labels(std::vector<Subspace> labels);
  const std::vector<Subspace>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  /// External ids (defaults to 0..n-1).
  std::vector<std::int64_t> ids() const;
  void set_ids(std::vector<std::int64_t> ids);

  friend bool operator==(const UGraph& a, const UGraph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<Bitset> adj_;
  std::vector<std::vector<std::size_t>> nbr_;
  std::size_t edge_count_ = 0;
  std::vector<Subspace> labels_;
  std::vector<std::int64_t> ids_;
};

UGraph complete_graph(std::size_t n);

/// h-uniform hypergraph.
class Hypergraph {
 public:
  Hypergraph(std::size_t vertices, std::size_t uniformity);

  std::size_t vertex_count() const { return n_; }
  std::size_t uniformity() const { return h_; }
  /// Throws on wrong size or repeated vertices.
  void add_edge(std::vector<std::size_t> vertices);
  const std::vector<std::vector<std::size_t>>& edges() const { return edges_; }

  void set_labels(std::vector<Subspace> labels) { labels_ = std::move(labels); }
  const std::vector<Subspace>& labels() const { return labels_; }

  /// Two vertices adjacent iff some hyperedge contains both. A coloring is
  /// proper for the hypergraph iff it is proper for this graph.
  UGraph cooccurrence_graph() const;

 private:
  std::size_t n_;
  std::size_t h_;
  std::vector<std::vector<std::size_t>> edges_;
  std::vector<Subspace> labels_;
};

/// Vertex colors in [0, num_colors).
struct Coloring {
  std::vector<std::size_t> colors;
  std::size_t num_colors = 0;

  /// Number of distinct colors actually used.
  std::size_t used_colors() const;
};

bool is_proper(const UGraph& g, const Coloring& c);
bool is_proper(const Hypergraph& g, const Coloring& c);

}  // namespace ncgap
