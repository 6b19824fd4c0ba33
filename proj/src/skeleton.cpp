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

#include "ncgap/skeleton.hpp"

#include <algorithm>
#include <limits>

#include "ncgap/error.hpp"

namespace ncgap {

SkeletonGraph skeleton(const Network& n) {
  (void)n.topological_order();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> owner(n.edge_count(), kUnset);
  std::vector<std::vector<EdgeId>> raw;
  for (const Edge& start : n.edges()) {
    if (n.in_degree(start.from) == 1) continue;
    const std::size_t c = raw.size();
    raw.emplace_back();
    std::vector<EdgeId> stack{start.id};
    owner[start.id] = c;
    while (!stack.empty()) {
      const EdgeId e = stack.back();
      stack.pop_back();
      raw[c].push_back(e);
      const NodeId w = n.edge(e).to;
      if (n.in_degree(w) != 1) continue;
      for (EdgeId f : n.out_edges(w)) {
        if (owner[f] == kUnset) {
          owner[f] = c;
          stack.push_back(f);
        }
      }
    }
  }
  for (auto& c : raw) std::sort(c.begin(), c.end());
  std::vector<std::size_t> perm(raw.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return raw[a].front() < raw[b].front(); });
  std::vector<std::size_t> rank_of(raw.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rank_of[perm[i]] = i;

  SkeletonGraph s;
  s.graph = UGraph(raw.size());
  s.class_of_edge.resize(n.edge_count());
  for (std::size_t i : perm) {
    s.class_ids.push_back(raw[i].front());
    s.classes.push_back(raw[i]);
  }
  for (EdgeId e = 0; e < n.edge_count(); ++e) {
    if (owner[e] == kUnset) throw Error("edge " + std::to_string(e) + " belongs to no class");
    s.class_of_edge[e] = rank_of[owner[e]];
  }
  for (NodeId v = 0; v < n.node_count(); ++v) {
    const auto& in = n.in_edges(v);
    for (std::size_t i = 0; i < in.size(); ++i)
      for (std::size_t j = i + 1; j < in.size(); ++j) {
        const std::size_t a = s.class_of_edge[in[i]];
        const std::size_t b = s.class_of_edge[in[j]];
        if (a != b) s.graph.add_edge(a, b);
      }
  }
  std::vector<std::int64_t> ids(s.class_ids.begin(), s.class_ids.end());
  s.graph.set_ids(std::move(ids));
  return s;
}

Network reverse_skeleton(const UGraph& g) {
  const std::size_t r = g.vertex_count();
  for (std::size_t v = 0; v < r; ++v) {
    if (g.degree(v) == 0) throw InvalidArgument("vertex " + std::to_string(v) + " is isolated");
  }
  const auto edges = g.edges();
  std::vector<NodeId> terminals;
  for (std::size_t i = 0; i < edges.size(); ++i) terminals.push_back(1 + r + i);
  Network n(1 + r + edges.size(), 0, terminals, 2);
  n.set_name(0, "sigma");
  for (std::size_t v = 0; v < r; ++v) {
    n.set_name(1 + v, "m" + std::to_string(v));
    n.add_edge(0, 1 + v);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    n.set_name(1 + r + i, "t" + std::to_string(u) + "_" + std::to_string(v));
    n.add_edge(1 + u, 1 + r + i);
    n.add_edge(1 + v, 1 + r + i);
  }
  return n;
}

bool skeleton_roundtrip_check(const UGraph& g) {
  const Network n = reverse_skeleton(g);
  const SkeletonGraph s = skeleton(n);
  const std::size_t r = g.vertex_count();
  if (s.graph.vertex_count() != r) return false;
  // vertex v of g <-> class of source edge v
  std::vector<std::size_t> to_class(r);
  for (std::size_t v = 0; v < r; ++v) to_class[v] = s.class_of_edge[v];
  std::vector<char> hit(r, 0);
  for (std::size_t c : to_class) {
    if (c >= r || hit[c]) return false;
    hit[c] = 1;
  }
  if (s.graph.edge_count() != g.edge_count()) return false;
  for (auto [u, v] : g.edges())
    if (!s.graph.adjacent(to_class[u], to_class[v])) return false;
  return true;
}

std::string skeleton_equivalence_issue(const Network& n) {
  if (n.h() != 2) return "h = " + std::to_string(n.h()) + ", the correspondence needs h = 2";
  const MinimalityReport m = is_minimal(n);
  if (m.status == Minimality::unsolvable) return "network is not solvable (a terminal has min-cut < 2)";
  if (m.status == Minimality::not_minimal) {
    return "network is not minimal (edge " + std::to_string(*m.redundant_edge) + " is redundant)";
  }
  return {};
}

NetworkCode code_from_skeleton_labels(const Network& n, const SkeletonGraph& skel,
                                      const std::vector<Subspace>& labels, std::size_t t) {
  if (labels.size() != skel.classes.size()) throw DimensionMismatch("need one label per skeleton vertex");
  if (labels.empty()) throw InvalidArgument("skeleton has no vertices");
  NetworkCode code{labels.front().field(), t, n.h(), {}};
  for (const Subspace& s : labels) {
    if (s.ambient() != code.width() || s.dim() > t) throw DimensionMismatch("label has the wrong shape");
  }
  for (const Edge& e : n.edges()) code.edges[e.id] = padded_basis(labels[skel.class_of_edge[e.id]], t);
  return code;
}

std::vector<Subspace> skeleton_labels_from_code(const Network& n, const SkeletonGraph& skel,
                                                const NetworkCode& code) {
  (void)n;
  std::vector<Subspace> out;
  out.reserve(skel.classes.size());
  for (EdgeId id : skel.class_ids) out.push_back(Subspace::span(code.at(id)));
  return out;
}

}  // namespace ncgap
