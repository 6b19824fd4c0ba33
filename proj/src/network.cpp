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

#include "ncgap/network.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "ncgap/error.hpp"

namespace ncgap {

Network::Network(std::size_t node_count, NodeId source, std::vector<NodeId> terminals, unsigned h)
    : source_(source),
      terminals_(std::move(terminals)),
      h_(h),
      in_(node_count),
      out_(node_count),
      is_terminal_(node_count, false),
      names_(node_count),
      labels_(node_count) {
  if (source >= node_count) throw InvalidArgument("source node out of range");
  for (NodeId t : terminals_) {
    if (t >= node_count) throw InvalidArgument("terminal node out of range");
    is_terminal_[t] = true;
  }
}

EdgeId Network::add_edge(NodeId from, NodeId to) {
  if (from >= node_count() || to >= node_count()) throw InvalidArgument("edge endpoint out of range");
  if (from == to) throw InvalidArgument("self-loop on node " + std::to_string(from));
  const EdgeId id = edges_.size();
  edges_.push_back(Edge{id, from, to});
  out_[from].push_back(id);
  in_[to].push_back(id);
  return id;
}

NodeRole Network::role(NodeId v) const {
  if (v == source_) return NodeRole::source;
  return is_terminal_.at(v) ? NodeRole::terminal : NodeRole::internal;
}

std::string Network::display_name(NodeId v) const {
  return names_.at(v).empty() ? std::to_string(v) : names_[v];
}

bool Network::has_labels() const {
  return std::any_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.has_value(); });
}

std::vector<NodeId> Network::topological_order() const {
  std::vector<std::size_t> indeg(node_count());
  for (NodeId v = 0; v < node_count(); ++v) indeg[v] = in_[v].size();
  std::vector<NodeId> order;
  order.reserve(node_count());
  std::deque<NodeId> ready;
  for (NodeId v = 0; v < node_count(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    const NodeId v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (EdgeId e : out_[v])
      if (--indeg[edges_[e].to] == 0) ready.push_back(edges_[e].to);
  }
  if (order.size() != node_count()) throw InvalidArgument("network graph contains a directed cycle");
  return order;
}

void Network::validate() const {
  if (h_ < 1) throw InvalidArgument("message count h must be >= 1");
  if (terminals_.empty()) throw InvalidArgument("network has no terminals");
  if (!in_[source_].empty()) throw InvalidArgument("source node has incoming edges");
  std::set<NodeId> seen;
  for (NodeId t : terminals_) {
    if (t == source_) throw InvalidArgument("source cannot be a terminal");
    if (!seen.insert(t).second) throw InvalidArgument("terminal listed twice");
  }
  (void)topological_order();
}

std::vector<NodeId> Network::non_essential_nodes() const {
  std::vector<char> from_source(node_count(), 0), to_terminal(node_count(), 0);
  std::vector<NodeId> stack{source_};
  from_source[source_] = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId e : out_[v]) {
      const NodeId w = edges_[e].to;
      if (!from_source[w]) {
        from_source[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (NodeId t : terminals_) {
    to_terminal[t] = 1;
    stack.push_back(t);
  }
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId e : in_[v]) {
      const NodeId w = edges_[e].from;
      if (!to_terminal[w]) {
        to_terminal[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < node_count(); ++v)
    if (!(from_source[v] && to_terminal[v])) out.push_back(v);
  return out;
}

Network Network::without_edge(EdgeId removed) const {
  if (removed >= edge_count()) throw InvalidArgument("edge id out of range");
  Network out(node_count(), source_, terminals_, h_);
  out.names_ = names_;
  out.labels_ = labels_;
  for (const Edge& e : edges_)
    if (e.id != removed) out.add_edge(e.from, e.to);
  return out;
}

Network prune(const Network& n) {
  const auto dead = n.non_essential_nodes();
  std::vector<char> drop(n.node_count(), 0);
  for (NodeId v : dead) drop[v] = 1;
  if (drop[n.source()]) throw InvalidArgument("source reaches no terminal");
  std::vector<NodeId> remap(n.node_count(), std::numeric_limits<NodeId>::max());
  NodeId next = 0;
  for (NodeId v = 0; v < n.node_count(); ++v)
    if (!drop[v]) remap[v] = next++;
  std::vector<NodeId> terminals;
  for (NodeId t : n.terminals())
    if (!drop[t]) terminals.push_back(remap[t]);
  Network out(next, remap[n.source()], terminals, n.h());
  for (NodeId v = 0; v < n.node_count(); ++v) {
    if (drop[v]) continue;
    out.set_name(remap[v], n.name(v));
    if (n.label(v)) out.set_label(remap[v], *n.label(v));
  }
  for (const Edge& e : n.edges())
    if (!drop[e.from] && !drop[e.to]) out.add_edge(remap[e.from], remap[e.to]);
  return out;
}

Network build_butterfly() {
  // sigma=0, nu1..nu4=1..4, tau1=5, tau2=6
  Network n(7, 0, {5, 6}, 2);
  const char* names[] = {"sigma", "nu1", "nu2", "nu3", "nu4", "tau1", "tau2"};
  for (NodeId v = 0; v < 7; ++v) n.set_name(v, names[v]);
  n.add_edge(0, 1);  // e1
  n.add_edge(0, 2);  // e2
  n.add_edge(1, 3);  // e3
  n.add_edge(2, 3);  // e4
  n.add_edge(1, 5);  // e5
  n.add_edge(3, 4);  // e6
  n.add_edge(2, 6);  // e7
  n.add_edge(4, 5);  // e8
  n.add_edge(4, 6);  // e9
  return n;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) throw LimitExceeded("binomial coefficient overflows");
  }
  return static_cast<std::uint64_t>(r);
}

// Lexicographic successor of a sorted k-subset of {0..n-1}.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace

Network build_combination(unsigned h, std::size_t r, std::size_t s, const Limits& limits) {
  if (h < 1) throw InvalidArgument("combination network needs h >= 1");
  if (s < 1 || s > r) throw InvalidArgument("combination network needs 1 <= s <= r");
  const std::uint64_t terminals = binomial(r, s);
  if (terminals > limits.max_terminals) {
    throw LimitExceeded("N_{" + std::to_string(h) + "," + std::to_string(r) + "," + std::to_string(s) + "} has " +
                        std::to_string(terminals) + " terminals, over the limit");
  }
  std::vector<NodeId> term_ids(terminals);
  for (std::size_t i = 0; i < terminals; ++i) term_ids[i] = 1 + r + i;
  Network n(1 + r + terminals, 0, term_ids, h);
  n.set_name(0, "sigma");
  for (std::size_t i = 0; i < r; ++i) {
    n.set_name(1 + i, "m" + std::to_string(i + 1));
    n.add_edge(0, 1 + i);
  }
  std::vector<std::size_t> c(s);
  for (std::size_t i = 0; i < s; ++i) c[i] = i;
  std::size_t idx = 0;
  do {
    const NodeId t = 1 + r + idx++;
    std::string name = "t";
    for (std::size_t m : c) {
      name += "_" + std::to_string(m + 1);
      n.add_edge(1 + m, t);
    }
    n.set_name(t, name);
  } while (next_combination(c, r));
  return n;
}

// ---------------------------------------------------------------------------

KneserNetwork::KneserNetwork(std::uint64_t q, std::size_t t, unsigned h, const Limits& limits)
    : field_(make_field_of_order(q, limits)), t_(t), h_(h) {
  if (h < 2) throw InvalidArgument("Kneser network needs h >= 2");
  if (t < 1) throw InvalidArgument("Kneser network needs t >= 1");
  middle_ = enumerate_subspaces(field_, h * t, t, limits);
}

std::uint64_t KneserNetwork::terminal_count() const {
  // Ordered spanning h-tuples: the (i+1)-th member avoids an it-dimensional
  // sum, and there are q^{it*t} [(h-i)t, t]_q such t-subspaces.
  const std::uint64_t q = field_.q();
  constexpr unsigned __int128 kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 ordered = 1;
  auto mul = [&](unsigned __int128 x) {
    if (x != 0 && ordered > (static_cast<unsigned __int128>(1) << 126) / x) {
      throw LimitExceeded("Kneser terminal count overflows");
    }
    ordered *= x;
  };
  for (unsigned i = 0; i < h_; ++i) {
    for (std::size_t k = 0; k < i * t_ * t_; ++k) mul(q);
    mul(gaussian_coefficient((h_ - i) * t_, t_, q));
  }
  for (unsigned i = 2; i <= h_; ++i) ordered /= i;
  if (ordered > kMax) throw LimitExceeded("Kneser terminal count overflows");
  return static_cast<std::uint64_t>(ordered);
}

bool KneserNetwork::is_terminal(std::span<const std::size_t> idx) const {
  if (idx.size() != h_) return false;
  std::vector<Subspace> parts;
  for (std::size_t i : idx) {
    if (i >= middle_.size()) throw InvalidArgument("middle index out of range");
    parts.push_back(middle_[i]);
  }
  std::set<std::size_t> distinct(idx.begin(), idx.end());
  if (distinct.size() != idx.size()) return false;
  return sum_dim(parts) == h_ * t_;
}

void KneserNetwork::for_each_terminal(const std::function<bool(std::span<const std::size_t>)>& visit) const {
  // Every sub-collection of a spanning h-set is a direct sum, so the running
  // sum must grow by t at each step.
  std::vector<std::size_t> chosen;
  std::vector<Subspace> sums{Subspace::zero(field_, h_ * t_)};
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (chosen.size() == h_) {
      if (!visit(chosen)) stop = true;
      return;
    }
    const std::size_t need = h_ - chosen.size();
    for (std::size_t i = start; i + need <= middle_.size() && !stop; ++i) {
      Subspace s = sum(sums.back(), middle_[i]);
      if (s.dim() != sums.back().dim() + t_) continue;
      chosen.push_back(i);
      sums.push_back(std::move(s));
      rec(i + 1);
      chosen.pop_back();
      sums.pop_back();
    }
  };
  rec(0);
}

Network KneserNetwork::materialize(const Limits& limits) const {
  const std::uint64_t count = terminal_count();
  if (count > limits.max_terminals) {
    throw LimitExceeded("K_{" + std::to_string(field_.q()) + "," + std::to_string(t_) + ";" + std::to_string(h_) +
                        "} has " + std::to_string(count) + " terminals, over the limit " +
                        std::to_string(limits.max_terminals) + "; use the implicit form");
  }
  const std::size_t mid = middle_.size();
  std::vector<NodeId> term_ids(count);
  for (std::size_t i = 0; i < count; ++i) term_ids[i] = 1 + mid + i;
  Network n(1 + mid + count, 0, std::move(term_ids), h_);
  n.set_name(0, "sigma");
  for (std::size_t i = 0; i < mid; ++i) {
    n.set_name(1 + i, "V" + std::to_string(i + 1));
    n.set_label(1 + i, middle_[i]);
    n.add_edge(0, 1 + i);
  }
  std::size_t next = 1 + mid;
  for_each_terminal([&](std::span<const std::size_t> idx) {
    for (std::size_t i : idx) n.add_edge(1 + i, next);
    ++next;
    return true;
  });
  if (next != 1 + mid + count) throw Error("Kneser terminal count formula disagrees with enumeration");
  return n;
}

Network build_kneser(std::uint64_t q, std::size_t t, unsigned h, const Limits& limits) {
  return KneserNetwork(q, t, h, limits).materialize(limits);
}

Network extend_messages(const Network& n, unsigned new_h) {
  if (new_h <= n.h()) {
    throw InvalidArgument("extended message count " + std::to_string(new_h) + " must exceed h = " +
                          std::to_string(n.h()));
  }
  const NodeId new_source = n.node_count();
  Network out(n.node_count() + 1, new_source, n.terminals(), new_h);
  for (NodeId v = 0; v < n.node_count(); ++v) {
    out.set_name(v, n.name(v));
    if (n.label(v)) out.set_label(v, *n.label(v));
  }
  out.set_name(new_source, "sigma'");
  for (const Edge& e : n.edges()) out.add_edge(e.from, e.to);
  for (unsigned i = 0; i < n.h(); ++i) out.add_edge(new_source, n.source());
  for (NodeId t : n.terminals())
    for (unsigned i = n.h(); i < new_h; ++i) out.add_edge(new_source, t);
  return out;
}

Network parallelize(const Network& n, unsigned m) {
  if (m < 1) throw InvalidArgument("parallelization factor must be >= 1");
  Network out(n.node_count(), n.source(), n.terminals(), n.h() * m);
  for (NodeId v = 0; v < n.node_count(); ++v) {
    out.set_name(v, n.name(v));
    if (n.label(v)) out.set_label(v, *n.label(v));
  }
  for (const Edge& e : n.edges())
    for (unsigned j = 0; j < m; ++j) out.add_edge(e.from, e.to);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Unit-capacity max flow from the source to `sink` by BFS augmenting paths,
// restricted to ancestors of the sink and ignoring edge `skip`. Stops once
// the flow reaches `cap`.
std::size_t flow_to(const Network& n, NodeId sink, EdgeId skip, std::size_t cap) {
  std::vector<char> anc(n.node_count(), 0);
  std::vector<NodeId> stack{sink};
  anc[sink] = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId e : n.in_edges(v)) {
      if (e == skip) continue;
      const NodeId w = n.edge(e).from;
      if (!anc[w]) {
        anc[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (!anc[n.source()]) return 0;

  std::vector<char> flow(n.edge_count(), 0);
  std::vector<EdgeId> via(n.node_count());
  std::vector<char> seen(n.node_count());
  std::size_t total = 0;
  while (total < cap) {
    std::fill(seen.begin(), seen.end(), 0);
    std::deque<NodeId> queue{n.source()};
    seen[n.source()] = 1;
    while (!queue.empty() && !seen[sink]) {
      const NodeId v = queue.front();
      queue.pop_front();
      for (EdgeId e : n.out_edges(v)) {
        const NodeId w = n.edge(e).to;
        if (e == skip || flow[e] || !anc[w] || seen[w]) continue;
        seen[w] = 1;
        via[w] = e;
        queue.push_back(w);
      }
      for (EdgeId e : n.in_edges(v)) {
        const NodeId w = n.edge(e).from;
        if (e == skip || !flow[e] || !anc[w] || seen[w]) continue;
        seen[w] = 1;
        via[w] = e;
        queue.push_back(w);
      }
    }
    if (!seen[sink]) break;
    for (NodeId v = sink; v != n.source();) {
      const Edge& e = n.edge(via[v]);
      if (e.to == v) {
        flow[e.id] = 1;
        v = e.from;
      } else {
        flow[e.id] = 0;
        v = e.to;
      }
    }
    ++total;
  }
  return total;
}

}  // namespace

std::size_t min_cut(const Network& n, NodeId terminal) {
  if (terminal >= n.node_count() || !n.is_terminal(terminal)) {
    throw InvalidArgument("node " + std::to_string(terminal) + " is not a terminal");
  }
  return flow_to(n, terminal, kNoEdge, std::numeric_limits<std::size_t>::max());
}

MinimalityReport is_minimal(const Network& n) {
  MinimalityReport report;
  for (NodeId t : n.terminals()) {
    if (flow_to(n, t, kNoEdge, n.h()) < n.h()) {
      report.status = Minimality::unsolvable;
      report.deficient_terminal = t;
      return report;
    }
  }
  std::vector<char> reach(n.node_count());
  for (const Edge& e : n.edges()) {
    // terminals downstream of e are the only ones whose cuts can change
    std::fill(reach.begin(), reach.end(), 0);
    std::vector<NodeId> stack{e.to};
    reach[e.to] = 1;
    bool critical = false;
    while (!stack.empty() && !critical) {
      const NodeId v = stack.back();
      stack.pop_back();
      if (n.is_terminal(v) && flow_to(n, v, e.id, n.h()) < n.h()) critical = true;
      for (EdgeId f : n.out_edges(v)) {
        const NodeId w = n.edge(f).to;
        if (!reach[w]) {
          reach[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (!critical) {
      report.status = Minimality::not_minimal;
      report.redundant_edge = e.id;
      return report;
    }
  }
  report.status = Minimality::minimal;
  return report;
}

}  // namespace ncgap
