// Copyright 2026 The HyperImmerse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON documents for witnesses and derivations.
//
//   immersion:  {"vertex_map": {h: g}, "edge_map": {h_edge: [g_edge, ...]}}
//   derivation: {"initial_subgraph": {"vertices": [...], "edges": [...]},
//                "steps": [{"op": "coalesce", "edges": [e1, e2]},
//                          {"op": "dewet", "edge": e, "vertex": v}],
//                "vertex_map": {h: derived}}
//
// A witness document carries both under "witness": the immersion keys plus
// a "derivation" object.

#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hyperimmerse/derivation.hpp"
#include "hyperimmerse/immersion.hpp"
#include "hyperimmerse/text_format.hpp"

namespace hyperimmerse {

inline constexpr const char* kVersion = "0.1.0";

inline nlohmann::json to_json(const ImmersionMap& a) {
  nlohmann::json j;
  j["vertex_map"] = a.vertex_map;
  j["edge_map"] = a.edge_map;
  return j;
}

inline nlohmann::json to_json(const DerivationSequence& seq) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : seq.steps) {
    if (const auto* c = std::get_if<CoalesceStep>(&s))
      steps.push_back({{"op", "coalesce"}, {"edges", {c->first, c->second}}});
    else {
      const auto& d = std::get<DewetStep>(s);
      steps.push_back({{"op", "dewet"}, {"edge", d.edge}, {"vertex", d.vertex}});
    }
  }
  return {{"initial_subgraph", {{"vertices", seq.initial_vertices}, {"edges", seq.initial_edges}}},
          {"steps", steps},
          {"vertex_map", seq.vertex_map}};
}

inline nlohmann::json to_json(const SearchStats& s) {
  return {{"nodes", s.nodes}, {"members_examined", s.members_examined}, {"seconds", s.seconds}};
}

/// Throws std::invalid_argument when a required key is missing or mistyped.
inline ImmersionMap immersion_from_json(const nlohmann::json& j) {
  try {
    ImmersionMap a;
    a.vertex_map = j.at("vertex_map").get<std::map<VertexId, VertexId>>();
    a.edge_map = j.at("edge_map").get<std::map<EdgeId, std::vector<EdgeId>>>();
    for (auto& [e, ids] : a.edge_map) std::sort(ids.begin(), ids.end());
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad immersion document: ") + e.what());
  }
}

inline DerivationSequence derivation_from_json(const nlohmann::json& j) {
  try {
    DerivationSequence seq;
    const auto& init = j.at("initial_subgraph");
    seq.initial_vertices = init.at("vertices").get<std::vector<VertexId>>();
    seq.initial_edges = init.at("edges").get<std::vector<EdgeId>>();
    for (const auto& s : j.at("steps")) {
      const auto op = s.at("op").get<std::string>();
      if (op == "coalesce") {
        const auto es = s.at("edges").get<std::vector<EdgeId>>();
        if (es.size() != 2) throw std::invalid_argument("coalesce needs exactly two edges");
        seq.steps.push_back(CoalesceStep{es[0], es[1]});
      } else if (op == "dewet") {
        seq.steps.push_back(DewetStep{s.at("edge").get<EdgeId>(), s.at("vertex").get<VertexId>()});
      } else {
        throw std::invalid_argument("unknown step op '" + op + "'");
      }
    }
    if (j.contains("vertex_map")) seq.vertex_map = j.at("vertex_map").get<std::map<VertexId, VertexId>>();
    return seq;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad derivation document: ") + e.what());
  }
}

/// Parses JSON text; syntax errors become ParseError with line and column.
inline nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(line, column, what);
  }
}

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace hyperimmerse
