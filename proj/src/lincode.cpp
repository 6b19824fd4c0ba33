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

#include "ncgap/lincode.hpp"

#include <algorithm>
#include <limits>

#include "ncgap/error.hpp"

namespace ncgap {

const Matrix& NetworkCode::at(EdgeId e) const {
  auto it = edges.find(e);
  if (it == edges.end()) throw InvalidArgument("edge " + std::to_string(e) + " has no coding matrix");
  return it->second;
}

Matrix padded_basis(const Subspace& s, std::size_t t) {
  if (s.dim() > t) throw DimensionMismatch("subspace dimension exceeds t");
  Matrix m(s.field(), t, s.ambient());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.ambient(); ++j) m.set(i, j, s.basis()(i, j));
  return m;
}

namespace {

void check_shapes(const Network& n, const NetworkCode& code) {
  if (code.h != n.h()) {
    throw InvalidArgument("code is for h = " + std::to_string(code.h) + " but the network has h = " +
                          std::to_string(n.h()));
  }
  if (code.t < 1) throw InvalidArgument("code needs t >= 1");
  for (const Edge& e : n.edges()) {
    const Matrix& g = code.at(e.id);
    if (!(g.field() == code.field)) throw InvalidArgument("edge " + std::to_string(e.id) + " is over another field");
    if (g.rows() != code.t || g.cols() != code.width()) {
      throw DimensionMismatch("edge " + std::to_string(e.id) + " matrix is " + std::to_string(g.rows()) + "x" +
                              std::to_string(g.cols()) + ", expected " + std::to_string(code.t) + "x" +
                              std::to_string(code.width()));
    }
  }
}

}  // namespace

Matrix node_matrix(const Network& n, const NetworkCode& code, NodeId v) {
  Matrix g(code.field, 0, code.width());
  for (EdgeId e : n.in_edges(v)) {
    const Matrix& m = code.at(e);
    for (std::size_t r = 0; r < m.rows(); ++r) g.append_row(m.row(r));
  }
  return g;
}

std::size_t node_space_dim(const Network& n, const NetworkCode& code, NodeId v) {
  if (v == n.source()) throw InvalidArgument("node space of the source is not defined");
  return rank(node_matrix(n, code, v));
}

Verdict verify_solution(const Network& n, const NetworkCode& code) {
  check_shapes(n, code);
  Verdict out;
  out.locally_consistent = true;
  for (NodeId v : n.topological_order()) {
    if (v == n.source()) continue;
    const Matrix gv = node_matrix(n, code, v);
    for (EdgeId e : n.out_edges(v)) {
      if (!rowspace_contains(gv, code.at(e))) {
        out.locally_consistent = false;
        out.bad_node = v;
        out.bad_edge = e;
        out.first_violation = "edge " + std::to_string(e) + " leaving " + n.display_name(v) +
                              " carries content outside the node's incoming space";
        break;
      }
    }
    if (!out.locally_consistent) break;
  }
  bool ranks_ok = true;
  for (NodeId tau : n.terminals()) {
    const std::size_t r = rank(node_matrix(n, code, tau));
    out.terminal_ranks.emplace_back(tau, r);
    if (r < code.width() && ranks_ok) {
      ranks_ok = false;
      if (out.first_violation.empty()) {
        out.bad_node = tau;
        out.first_violation = "terminal " + n.display_name(tau) + " has rank " + std::to_string(r) + " < " +
                              std::to_string(code.width());
      }
    }
  }
  out.accepted = out.locally_consistent && ranks_ok;
  return out;
}

NetworkCode forward_code(const Network& n, const FieldSpec& field, std::size_t t,
                         const std::vector<Matrix>& source_rows) {
  const auto& src_out = n.out_edges(n.source());
  if (source_rows.size() != src_out.size()) {
    throw DimensionMismatch("need one matrix per source edge: " + std::to_string(src_out.size()) + " edges, " +
                            std::to_string(source_rows.size()) + " matrices");
  }
  NetworkCode code{field, t, n.h(), {}};
  for (std::size_t k = 0; k < src_out.size(); ++k) {
    const Matrix& m = source_rows[k];
    if (m.rows() != t || m.cols() != code.width() || !(m.field() == field)) {
      throw DimensionMismatch("source matrix " + std::to_string(k) + " has the wrong shape");
    }
    code.edges[src_out[k]] = m;
  }
  for (NodeId v : n.topological_order()) {
    if (v == n.source() || n.out_degree(v) == 0) continue;
    if (n.in_degree(v) != 1) {
      throw InvalidArgument("node " + n.display_name(v) + " has in-degree " + std::to_string(n.in_degree(v)) +
                            " and outgoing edges; forwarding is undefined");
    }
    const Matrix& in = code.at(n.in_edges(v).front());
    for (EdgeId e : n.out_edges(v)) code.edges[e] = in;
  }
  return code;
}

NetworkCode solution_from_classical_code(const Network& n, const Matrix& generator) {
  if (generator.rows() != n.h()) {
    throw DimensionMismatch("generator has " + std::to_string(generator.rows()) + " rows, network has h = " +
                            std::to_string(n.h()));
  }
  if (generator.cols() != n.out_degree(n.source())) {
    throw DimensionMismatch("generator has " + std::to_string(generator.cols()) + " columns, network has " +
                            std::to_string(n.out_degree(n.source())) + " source edges");
  }
  std::vector<Matrix> rows;
  for (std::size_t i = 0; i < generator.cols(); ++i) {
    Matrix m(generator.field(), 1, generator.rows());
    for (std::size_t j = 0; j < generator.rows(); ++j) m.set(0, j, generator(j, i));
    rows.push_back(std::move(m));
  }
  return forward_code(n, generator.field(), 1, rows);
}

// ---------------------------------------------------------------------------

namespace {

class SolutionSearch {
 public:
  SolutionSearch(const Network& n, const FieldSpec& field, std::size_t t, const Budget& budget, const Limits& limits)
      : n_(n), f_(field), t_(t), width_(n.h() * t), meter_(budget), limits_(limits) {
    const auto topo = n.topological_order();
    std::vector<std::size_t> pos(n.node_count());
    for (std::size_t i = 0; i < topo.size(); ++i) pos[topo[i]] = i;
    topo_ = topo;
    for (const Edge& e : n.edges()) order_.push_back(e.id);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](EdgeId a, EdgeId b) { return pos[n.edge(a).to] < pos[n.edge(b).to]; });
    parallel_prev_.assign(n.edge_count(), kNone);
    for (std::size_t i = 1; i < order_.size(); ++i) {
      const Edge& a = n.edge(order_[i - 1]);
      const Edge& b = n.edge(order_[i]);
      if (a.from == b.from && a.to == b.to) parallel_prev_[b.id] = a.id;
    }
    for (EdgeId e : order_) {
      if (n.edge(e).from == n.source()) {
        pinned_ = e;
        break;
      }
    }
    assigned_.resize(n.edge_count());
    chosen_.assign(n.edge_count(), 0);
    space_.resize(n.node_count());
    space_[n.source()] = Subspace::full(f_, width_);
    pending_.resize(n.node_count());
    for (NodeId v = 0; v < n.node_count(); ++v) {
      pending_[v] = n.in_degree(v);
      if (v != n.source() && pending_[v] == 0) space_[v] = Subspace::zero(f_, width_);
    }
  }

  SearchResult run() {
    SearchResult res;
    const bool found = dfs(0);
    res.nodes = meter_.used();
    if (found) {
      res.outcome = Outcome::found;
      NetworkCode code{f_, t_, n_.h(), {}};
      for (const Edge& e : n_.edges()) code.edges[e.id] = padded_basis(*assigned_[e.id], t_);
      res.code = std::move(code);
    } else {
      res.outcome = meter_.exhausted() ? Outcome::unknown : Outcome::none;
    }
    return res;
  }

 private:
  static constexpr EdgeId kNone = std::numeric_limits<EdgeId>::max();

  const std::vector<Subspace>& coordinate_spaces(std::size_t d, std::size_t k) {
    auto it = coords_.find({d, k});
    if (it == coords_.end()) it = coords_.emplace(std::make_pair(d, k), enumerate_subspaces(f_, d, k, limits_)).first;
    return it->second;
  }

  std::vector<Subspace> candidates(const Subspace& tail_space) {
    const std::size_t d = tail_space.dim();
    const std::size_t k = std::min(t_, d);
    std::vector<Subspace> out;
    const auto& coords = coordinate_spaces(d, k);
    out.reserve(coords.size());
    for (const Subspace& c : coords) out.push_back(Subspace::span(c.basis() * tail_space.basis()));
    return out;
  }

  // Optimistic spaces: assigned edges as they are, unassigned edges as
  // everything their tail could still carry.
  bool feasible() const {
    std::vector<Subspace> upper(n_.node_count());
    for (NodeId v : topo_) {
      if (space_[v]) {
        upper[v] = *space_[v];
        continue;
      }
      std::vector<Subspace> parts;
      for (EdgeId e : n_.in_edges(v)) parts.push_back(assigned_[e] ? *assigned_[e] : upper[n_.edge(e).from]);
      upper[v] = sum(parts);
      if (n_.is_terminal(v)) {
        if (upper[v].dim() < width_) return false;
        std::vector<Subspace> fixed{Subspace::zero(f_, width_)};
        std::size_t loose = 0;
        for (EdgeId e : n_.in_edges(v)) {
          if (assigned_[e]) {
            fixed.push_back(*assigned_[e]);
          } else {
            loose += std::min(t_, upper[n_.edge(e).from].dim());
          }
        }
        if (sum_dim(fixed) + loose < width_) return false;
      }
    }
    return true;
  }

  bool dfs(std::size_t depth) {
    if (depth == order_.size()) return true;
    const EdgeId e = order_[depth];
    const Edge& edge = n_.edge(e);
    const std::vector<Subspace> cand = candidates(*space_[edge.from]);
    std::size_t first = 0;
    std::size_t last = cand.size();
    if (e == pinned_) last = std::min<std::size_t>(1, last);
    if (parallel_prev_[e] != kNone) first = chosen_[parallel_prev_[e]];
    for (std::size_t i = first; i < last; ++i) {
      if (!meter_.charge()) return false;
      assigned_[e] = cand[i];
      chosen_[e] = i;
      bool ok = true;
      if (--pending_[edge.to] == 0) {
        std::vector<Subspace> parts;
        for (EdgeId in : n_.in_edges(edge.to)) parts.push_back(*assigned_[in]);
        space_[edge.to] = sum(parts);
        if (n_.is_terminal(edge.to) && space_[edge.to]->dim() < width_) ok = false;
      }
      if (ok && feasible() && dfs(depth + 1)) return true;
      if (pending_[edge.to]++ == 0) space_[edge.to].reset();
      assigned_[e].reset();
      if (meter_.exhausted()) return false;
    }
    return false;
  }

  const Network& n_;
  FieldSpec f_;
  std::size_t t_;
  std::size_t width_;
  BudgetMeter meter_;
  Limits limits_;
  std::vector<NodeId> topo_;
  std::vector<EdgeId> order_;
  std::vector<EdgeId> parallel_prev_;
  EdgeId pinned_ = kNone;
  std::vector<std::optional<Subspace>> assigned_;
  std::vector<std::size_t> chosen_;
  std::vector<std::optional<Subspace>> space_;
  std::vector<std::size_t> pending_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Subspace>> coords_;
};

}  // namespace

SearchResult search_solution(const Network& n, const FieldSpec& field, std::size_t t, const Budget& budget,
                             const Limits& limits) {
  if (t < 1) throw InvalidArgument("search needs t >= 1");
  n.validate();
  for (NodeId tau : n.terminals()) {
    if (min_cut(n, tau) < n.h()) return SearchResult{Outcome::none, std::nullopt, 0};
  }
  return SolutionSearch(n, field, t, budget, limits).run();
}

// ---------------------------------------------------------------------------

NetworkCode parallelize_code(const Network& n, const NetworkCode& code) {
  check_shapes(n, code);
  NetworkCode out{code.field, 1, static_cast<unsigned>(code.h * code.t), {}};
  for (const Edge& e : n.edges()) {
    const Matrix& g = code.at(e.id);
    for (std::size_t j = 0; j < code.t; ++j) out.edges[e.id * code.t + j] = g.row_block(j, 1);
  }
  return out;
}

NetworkCode extend_code(const Network& n, const NetworkCode& code, unsigned new_h) {
  check_shapes(n, code);
  if (new_h <= n.h()) throw InvalidArgument("extended message count must exceed h");
  const std::size_t t = code.t;
  const std::size_t width = new_h * t;
  NetworkCode out{code.field, t, new_h, {}};
  for (const Edge& e : n.edges()) {
    const Matrix& g = code.at(e.id);
    Matrix m(code.field, t, width);
    for (std::size_t r = 0; r < t; ++r)
      for (std::size_t c = 0; c < g.cols(); ++c) m.set(r, c, g(r, c));
    out.edges[e.id] = std::move(m);
  }
  auto message = [&](std::size_t i) {
    Matrix m(code.field, t, width);
    for (std::size_t r = 0; r < t; ++r) m.set(r, i * t + r, code.field.one());
    return m;
  };
  EdgeId next = n.edge_count();
  for (unsigned i = 0; i < n.h(); ++i) out.edges[next++] = message(i);
  for (std::size_t k = 0; k < n.terminals().size(); ++k)
    for (unsigned i = n.h(); i < new_h; ++i) out.edges[next++] = message(i);
  return out;
}

NetworkCode restrict_extended_code(const Network& n, const Network& extended, const NetworkCode& code) {
  check_shapes(extended, code);
  const std::size_t t = code.t;
  const EdgeId base = n.edge_count();
  std::vector<Matrix> feed;
  for (unsigned i = 0; i < n.h(); ++i) {
    const Edge& e = extended.edge(base + i);
    if (e.from != extended.source() || e.to != n.source()) {
      throw InvalidArgument("network is not an extension of the given base network");
    }
    feed.push_back(code.at(base + i));
  }
  const Subspace into_source = Subspace::span(vstack(feed));
  if (into_source.dim() != n.h() * t) {
    throw InvalidArgument("the new source sends a " + std::to_string(into_source.dim()) +
                          "-dimensional space into the old source, need " + std::to_string(n.h() * t));
  }
  NetworkCode out{code.field, t, n.h(), {}};
  for (const Edge& e : n.edges()) {
    const Matrix& g = code.at(e.id);
    Matrix m(code.field, t, n.h() * t);
    for (std::size_t r = 0; r < t; ++r) {
      if (!into_source.contains_vector(g.row(r))) {
        throw InvalidArgument("edge " + std::to_string(e.id) + " carries messages the old source never receives");
      }
      const auto c = into_source.coordinates(g.row(r));
      for (std::size_t j = 0; j < c.size(); ++j) m.set(r, j, c[j]);
    }
    out.edges[e.id] = std::move(m);
  }
  return out;
}

}  // namespace ncgap
