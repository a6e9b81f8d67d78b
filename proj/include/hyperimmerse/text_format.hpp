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

// Line-oriented hypergraph format:
//
//   # comment
//   v <id> [x]              vertex; trailing `x` marks a cross-labelled vertex
//   e <edge_id> <v1> <v2>   hyperedge over previously declared vertices
//
// Serialization is canonical: vertices, then edges, each in sorted id order.

#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperimmerse/hypergraph.hpp"

namespace hyperimmerse {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

}  // namespace detail

inline Hypergraph parse_hypergraph(std::istream& in) {
  Hypergraph g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    const auto& head = tokens[0];
    if (head.text == "v") {
      if (tokens.size() < 2) throw ParseError(lineno, head.column, "vertex directive needs an id");
      if (tokens.size() > 3) throw ParseError(lineno, tokens[3].column, "unexpected token '" + tokens[3].text + "'");
      VertexLabel label = VertexLabel::normal;
      if (tokens.size() == 3) {
        if (tokens[2].text != "x") throw ParseError(lineno, tokens[2].column, "unknown vertex label '" + tokens[2].text + "'");
        label = VertexLabel::cross;
      }
      if (g.has_vertex(tokens[1].text)) throw ParseError(lineno, tokens[1].column, "duplicate vertex '" + tokens[1].text + "'");
      g.add_vertex(tokens[1].text, label);
    } else if (head.text == "e") {
      if (tokens.size() < 3) throw ParseError(lineno, head.column, "edge directive needs an id and at least one member");
      if (g.has_edge(tokens[1].text)) throw ParseError(lineno, tokens[1].column, "duplicate edge id '" + tokens[1].text + "'");
      std::vector<VertexId> members;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const auto& t = tokens[i];
        if (!g.has_vertex(t.text)) throw ParseError(lineno, t.column, "undeclared vertex '" + t.text + "'");
        for (const auto& m : members)
          if (m == t.text) throw ParseError(lineno, t.column, "vertex '" + t.text + "' repeated in edge (loop)");
        members.push_back(t.text);
      }
      g.add_edge(tokens[1].text, std::move(members));
    } else {
      throw ParseError(lineno, head.column, "unknown directive '" + head.text + "'");
    }
  }
  return g;
}

inline Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

inline Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_hypergraph(in);
}

inline std::string serialize(const Hypergraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) {
    out << "v " << v.id;
    if (v.is_cross()) out << " x";
    out << '\n';
  }
  for (const auto& e : g.edges()) {
    out << "e " << e.id;
    for (const auto& m : e.members) out << ' ' << m;
    out << '\n';
  }
  return out.str();
}

}  // namespace hyperimmerse
