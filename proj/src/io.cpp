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

#include "ncgap/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "ncgap/error.hpp"

namespace ncgap::io {

namespace {

template <class T>
T field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad field '") + key + "': " + e.what());
  }
}

// Checks that ids form exactly {0, ..., n-1} and returns the position of each id.
std::vector<std::size_t> dense_ids(const std::vector<std::int64_t>& ids, const char* what) {
  std::vector<std::size_t> pos(ids.size(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto id = ids[i];
    if (id < 0 || static_cast<std::size_t>(id) >= ids.size())
      throw InvalidArgument(std::string(what) + " ids must be 0.." + std::to_string(ids.size() - 1));
    if (pos[static_cast<std::size_t>(id)] != ids.size())
      throw InvalidArgument(std::string("duplicate ") + what + " id " + std::to_string(id));
    pos[static_cast<std::size_t>(id)] = i;
  }
  return pos;
}

FieldSpec field_from_json(const json& j) {
  auto p = field_of<std::uint32_t>(j, "p");
  auto m = j.contains("m") ? field_of<std::uint32_t>(j, "m") : 1u;
  return make_field(p, m);
}

}  // namespace

json matrix_to_json(const Matrix& m) { return json(m.to_codes()); }

Matrix matrix_from_json(const FieldSpec& f, const json& j, std::size_t cols) {
  if (!j.is_array()) throw InvalidArgument("matrix must be an array of rows");
  std::vector<std::vector<std::uint32_t>> rows;
  try {
    rows = j.get<std::vector<std::vector<std::uint32_t>>>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad matrix: ") + e.what());
  }
  for (const auto& r : rows)
    if (r.size() != cols)
      throw InvalidArgument("matrix row has " + std::to_string(r.size()) + " entries, expected " +
                            std::to_string(cols));
  return Matrix::from_codes(f, cols, rows);
}

json network_to_json(const Network& n) {
  json j;
  j["h"] = n.h();
  j["source"] = n.source();
  j["terminals"] = n.terminals();
  json nodes = json::array();
  for (NodeId v = 0; v < n.node_count(); ++v) {
    json node{{"id", v}};
    if (!n.name(v).empty()) node["name"] = n.name(v);
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& e : n.edges()) edges.push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}});
  j["edges"] = std::move(edges);
  if (n.has_labels()) {
    json labels = json::object();
    FieldSpec f;
    for (NodeId v = 0; v < n.node_count(); ++v) {
      if (!n.label(v)) continue;
      f = n.label(v)->field();
      labels[std::to_string(v)] = matrix_to_json(n.label(v)->basis());
    }
    j["field"] = {{"p", f.p()}, {"m", f.m()}};
    j["labels"] = std::move(labels);
  }
  return j;
}

Network network_from_json(const json& j) {
  auto h = field_of<unsigned>(j, "h");
  auto source = field_of<std::int64_t>(j, "source");
  auto terminals = field_of<std::vector<std::int64_t>>(j, "terminals");
  const auto& nodes = j.at("nodes");
  if (!nodes.is_array()) throw InvalidArgument("'nodes' must be an array");
  std::vector<std::int64_t> node_ids;
  for (const auto& nd : nodes) node_ids.push_back(field_of<std::int64_t>(nd, "id"));
  dense_ids(node_ids, "node");
  const std::size_t count = node_ids.size();
  auto check_node = [&](std::int64_t v) {
    if (v < 0 || static_cast<std::size_t>(v) >= count)
      throw InvalidArgument("unknown node id " + std::to_string(v));
    return static_cast<NodeId>(v);
  };
  std::vector<NodeId> ts;
  for (auto t : terminals) ts.push_back(check_node(t));
  Network n(count, check_node(source), ts, h);
  for (const auto& nd : nodes)
    if (nd.contains("name")) n.set_name(static_cast<NodeId>(nd["id"].get<std::int64_t>()), field_of<std::string>(nd, "name"));

  const auto& edges = j.at("edges");
  if (!edges.is_array()) throw InvalidArgument("'edges' must be an array");
  std::vector<std::int64_t> edge_ids;
  for (const auto& e : edges) edge_ids.push_back(field_of<std::int64_t>(e, "id"));
  auto pos = dense_ids(edge_ids, "edge");
  for (std::size_t id = 0; id < pos.size(); ++id) {
    const auto& e = edges[pos[id]];
    n.add_edge(check_node(field_of<std::int64_t>(e, "from")), check_node(field_of<std::int64_t>(e, "to")));
  }

  if (j.contains("labels")) {
    if (!j.contains("field")) throw InvalidArgument("'labels' needs 'field'");
    auto f = field_from_json(j["field"]);
    std::optional<std::size_t> ambient;
    for (const auto& [key, rows] : j["labels"].items()) {
      NodeId v = check_node(std::stoll(key));
      if (!rows.is_array() || rows.empty()) throw InvalidArgument("label of node " + key + " is empty");
      std::size_t cols = rows[0].size();
      if (ambient && *ambient != cols) throw InvalidArgument("labels live in different ambient spaces");
      ambient = cols;
      n.set_label(v, Subspace::span(matrix_from_json(f, rows, cols)));
    }
  }
  n.validate();
  return n;
}

json code_to_json(const NetworkCode& c) {
  json j;
  j["q"] = c.field.q();
  j["p"] = c.field.p();
  j["m"] = c.field.m();
  j["t"] = c.t;
  j["h"] = c.h;
  json edges = json::object();
  for (const auto& [e, m] : c.edges) edges[std::to_string(e)] = matrix_to_json(m);
  j["edges"] = std::move(edges);
  return j;
}

NetworkCode code_from_json(const json& j) {
  NetworkCode c;
  c.field = field_from_json(j);
  if (j.contains("q") && field_of<std::uint64_t>(j, "q") != c.field.q())
    throw InvalidArgument("'q' does not match p^m");
  c.t = field_of<std::size_t>(j, "t");
  c.h = field_of<unsigned>(j, "h");
  if (c.t == 0 || c.h == 0) throw InvalidArgument("t and h must be positive");
  const auto& edges = j.at("edges");
  if (!edges.is_object()) throw InvalidArgument("'edges' must map edge ids to matrices");
  for (const auto& [key, rows] : edges.items()) {
    std::size_t pos = 0;
    auto id = std::stoll(key, &pos);
    if (pos != key.size() || id < 0) throw InvalidArgument("bad edge id '" + key + "'");
    c.edges[static_cast<EdgeId>(id)] = matrix_from_json(c.field, rows, c.width());
  }
  return c;
}

json graph_to_json(const UGraph& g) {
  json j;
  j["vertices"] = g.ids();
  json edges = json::array();
  auto ids = g.ids();
  for (auto [u, v] : g.edges()) edges.push_back({ids[u], ids[v]});
  j["edges"] = std::move(edges);
  return j;
}

UGraph graph_from_json(const json& j) {
  auto vertices = field_of<std::vector<std::int64_t>>(j, "vertices");
  auto edges = field_of<std::vector<std::vector<std::int64_t>>>(j, "edges");
  std::map<std::int64_t, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!index.emplace(vertices[i], i).second)
      throw InvalidArgument("duplicate vertex " + std::to_string(vertices[i]));
  UGraph g(vertices.size());
  g.set_ids(vertices);
  for (const auto& e : edges) {
    if (e.size() != 2) throw InvalidArgument("graph edges must be pairs");
    auto a = index.find(e[0]), b = index.find(e[1]);
    if (a == index.end() || b == index.end()) throw InvalidArgument("edge uses an unknown vertex");
    g.add_edge(a->second, b->second);
  }
  return g;
}

std::string network_to_dot(const Network& n) {
  std::ostringstream os;
  os << "digraph network {\n  rankdir=TB;\n";
  for (NodeId v = 0; v < n.node_count(); ++v) {
    const char* shape = "circle";
    switch (n.role(v)) {
      case NodeRole::source: shape = "doublecircle"; break;
      case NodeRole::terminal: shape = "box"; break;
      case NodeRole::internal: break;
    }
    os << "  n" << v << " [label=\"" << n.display_name(v) << "\", shape=" << shape << "];\n";
  }
  for (const auto& e : n.edges())
    os << "  n" << e.from << " -> n" << e.to << " [label=\"e" << e.id << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_dot(const UGraph& g, const std::string& name) {
  std::ostringstream os;
  auto ids = g.ids();
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "  v" << ids[v] << ";\n";
  for (auto [u, v] : g.edges()) os << "  v" << ids[u] << " -- v" << ids[v] << ";\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_dimacs(const UGraph& g) {
  std::ostringstream os;
  os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw InvalidArgument("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(p.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& p, const json& j) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw InvalidArgument("cannot write " + p.string());
  out << j.dump(2) << '\n';
}

}  // namespace ncgap::io
