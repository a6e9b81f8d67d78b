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

#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperimmerse/hypergraph.hpp"

namespace hyperimmerse {

struct MultiEdge {
  EdgeId id;
  VertexId u;  // u < v
  VertexId v;
  bool is_virtual = false;

  const VertexId& other(const VertexId& x) const { return x == u ? v : u; }
};

/// Loopless multigraph: a hypergraph whose edges all have size two, plus a
/// marker for virtual edges introduced by component decompositions.
class MultiGraph {
 public:
  MultiGraph() = default;

  void add_vertex(VertexId id, VertexLabel label = VertexLabel::normal) { g_.add_vertex(std::move(id), label); }

  void add_edge(EdgeId id, const VertexId& a, const VertexId& b, bool is_virtual = false) {
    if (a == b) throw std::invalid_argument("edge '" + id + "' would be a loop at '" + a + "'");
    if (is_virtual) virtual_.insert(id);
    g_.add_edge(std::move(id), {a, b});
  }

  void remove_edge(const EdgeId& id) {
    g_.remove_edge(id);
    virtual_.erase(id);
  }

  const std::vector<Vertex>& vertices() const { return g_.vertices(); }
  std::size_t vertex_count() const { return g_.vertex_count(); }
  std::size_t edge_count() const { return g_.edge_count(); }
  bool has_vertex(const VertexId& v) const { return g_.has_vertex(v); }
  bool has_edge(const EdgeId& e) const { return g_.has_edge(e); }
  VertexLabel label(const VertexId& v) const { return g_.label(v); }
  std::size_t vertex_index(const VertexId& v) const { return g_.vertex_index(v); }
  EdgeId fresh_edge_id(EdgeId base) const { return g_.fresh_edge_id(std::move(base)); }

  MultiEdge edge(const EdgeId& id) const { return to_multi(g_.edge(id)); }

  std::vector<MultiEdge> edges() const {
    std::vector<MultiEdge> out;
    out.reserve(g_.edge_count());
    for (const auto& e : g_.edges()) out.push_back(to_multi(e));
    return out;
  }

  bool is_virtual(const EdgeId& id) const { return virtual_.count(id) != 0; }

  std::size_t degree(const VertexId& v) const { return g_.degree(v); }

  std::size_t multiplicity(const VertexId& a, const VertexId& b) const {
    return static_cast<std::size_t>(std::count_if(g_.edges().begin(), g_.edges().end(), [&](const HyperEdge& e) {
      return e.contains(a) && e.contains(b);
    }));
  }

  std::vector<VertexId> neighbours(const VertexId& v) const {
    std::set<VertexId> out;
    for (const auto& e : g_.edges())
      if (e.contains(v)) out.insert(e.members[0] == v ? e.members[1] : e.members[0]);
    return {out.begin(), out.end()};
  }

  /// Ids of the edges joining a and b, ascending.
  std::vector<EdgeId> edges_between(const VertexId& a, const VertexId& b) const {
    std::vector<EdgeId> out;
    for (const auto& e : g_.edges())
      if (e.contains(a) && e.contains(b)) out.push_back(e.id);
    return out;
  }

  /// Hypergraph view; the virtual marker is dropped.
  const Hypergraph& as_hypergraph() const { return g_; }

  static MultiGraph from_hypergraph(const Hypergraph& h) {
    MultiGraph out;
    for (const auto& v : h.vertices()) out.add_vertex(v.id, v.label);
    for (const auto& e : h.edges()) {
      if (e.size() != 2) throw std::invalid_argument("edge '" + e.id + "' does not have size 2");
      out.add_edge(e.id, e.members[0], e.members[1]);
    }
    return out;
  }

 private:
  MultiEdge to_multi(const HyperEdge& e) const { return {e.id, e.members[0], e.members[1], is_virtual(e.id)}; }

  Hypergraph g_;
  std::set<EdgeId> virtual_;
};

/// Index form: ends per edge and (neighbour, edge) adjacency per vertex.
struct IndexedMultiGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<int, int>> ends;
  std::vector<std::vector<std::pair<int, int>>> adj;

  explicit IndexedMultiGraph(const MultiGraph& g) : vertex_count(g.vertex_count()), adj(g.vertex_count()) {
    for (const auto& e : g.as_hypergraph().edges()) {
      const int a = static_cast<int>(g.vertex_index(e.members[0]));
      const int b = static_cast<int>(g.vertex_index(e.members[1]));
      const int id = static_cast<int>(ends.size());
      ends.emplace_back(a, b);
      adj[static_cast<std::size_t>(a)].emplace_back(b, id);
      adj[static_cast<std::size_t>(b)].emplace_back(a, id);
    }
  }
};

}  // namespace hyperimmerse
