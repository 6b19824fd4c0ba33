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
 * @file io.hpp
 * @brief JSON, DOT and DIMACS encodings.
 *
 * Network:     {h, source, terminals, nodes: [{id, name?}], edges: [{id, from, to}],
 *               field?: {p, m}, labels?: {"<node id>": [[row], ...]}}
 * NetworkCode: {q, p, m, t, h, edges: {"<edge id>": [[row], ...]}}
 * UGraph:      {vertices: [id, ...], edges: [[a, b], ...]}
 *
 * Node and edge ids must be exactly 0..n-1 (in any order); matrix entries
 * are field element codes.
 */

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ncgap/graph.hpp"
#include "ncgap/lincode.hpp"
#include "ncgap/network.hpp"

namespace ncgap::io {

using json = nlohmann::json;

json matrix_to_json(const Matrix& m);
/// Rows of element codes; `cols` is used when there are no rows.
Matrix matrix_from_json(const FieldSpec& f, const json& j, std::size_t cols);

json network_to_json(const Network& n);
Network network_from_json(const json& j);

json code_to_json(const NetworkCode& c);
NetworkCode code_from_json(const json& j);

json graph_to_json(const UGraph& g);
UGraph graph_from_json(const json& j);

std::string network_to_dot(const Network& n);
std::string graph_to_dot(const UGraph& g, const std::string& name = "G");
/// "p edge V E" followed by 1-based "e u v" lines.
std::string graph_to_dimacs(const UGraph& g);

json read_json(const std::filesystem::path& p);
void write_json(const std::filesystem::path& p, const json& j);

}  // namespace ncgap::io
