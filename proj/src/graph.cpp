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

#include "ncgap/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ncgap/error.hpp"

namespace ncgap {

UGraph::UGraph(std::size_t n) : adj_(n, Bitset(n)), nbr_(n) {}

void UGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count() || v >= vertex_count()) throw InvalidArgument("edge endpoint out of range");
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  nbr_[u].insert(std::upper_bound(nbr_[u].begin(), nbr_[u].end(), v), v);
  nbr_[v].insert(std::upper_bound(nbr_[v].begin(), nbr_[v].end(), u), u);
  ++edge_count_;
}

std::vector<std::pair<std::size_t, std::size_t>> UGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < vertex_count(); ++u)
    for (std::size_t v : nbr_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void UGraph::set_labels(std::vector<Subspace> labels) {
  if (!labels.empty() && labels.size() != vertex_count()) throw InvalidArgument("label count differs from vertex count");
  labels_ = std::move(labels);
}

std::vector<std::int64_t> UGraph::ids() const {
  if (!ids_.empty()) return ids_;
  std::vector<std::int64_t> out(vertex_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::int64_t>(i);
  return out;
}

void UGraph::set_ids(std::vector<std::int64_t> ids) {
  if (!ids.empty() && ids.size() != vertex_count()) throw InvalidArgument("id count differs from vertex count");
  ids_ = std::move(ids);
}

UGraph complete_graph(std::size_t n) {
  UGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Hypergraph::Hypergraph(std::size_t vertices, std::size_t uniformity) : n_(vertices), h_(uniformity) {
  if (uniformity < 2) throw InvalidArgument("hypergraph uniformity must be >= 2");
}

void Hypergraph::add_edge(std::vector<std::size_t> vertices) {
  if (vertices.size() != h_) throw InvalidArgument("hyperedge has wrong size");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw InvalidArgument("hyperedge repeats a vertex");
  }
  if (vertices.back() >= n_) throw InvalidArgument("hyperedge vertex out of range");
  edges_.push_back(std::move(vertices));
}

UGraph Hypergraph::cooccurrence_graph() const {
  UGraph g(n_);
  for (const auto& e : edges_)
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) g.add_edge(e[i], e[j]);
  g.set_labels(labels_);
  return g;
}

std::size_t Coloring::used_colors() const {
  return std::set<std::size_t>(colors.begin(), colors.end()).size();
}

bool is_proper(const UGraph& g, const Coloring& c) {
  if (c.colors.size() != g.vertex_count()) return false;
  for (std::size_t col : c.colors)
    if (col >= c.num_colors) return false;
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) return false;
  return true;
}

bool is_proper(const Hypergraph& g, const Coloring& c) {
  if (c.colors.size() != g.vertex_count()) return false;
  for (std::size_t col : c.colors)
    if (col >= c.num_colors) return false;
  for (const auto& e : g.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        if (c.colors[e[i]] == c.colors[e[j]]) return false;
  return true;
}

}  // namespace ncgap
