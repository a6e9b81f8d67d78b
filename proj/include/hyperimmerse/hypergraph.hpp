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
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperimmerse {

using VertexId = std::string;
using EdgeId = std::string;

/// Vertices produced by factoring a size-3 hyperedge into a Y carry the
/// `cross` label; they are not physical network nodes.
enum class VertexLabel { normal, cross };

struct Vertex {
  VertexId id;
  VertexLabel label = VertexLabel::normal;

  bool is_cross() const { return label == VertexLabel::cross; }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A loopless hyperedge. `members` is kept sorted and duplicate free.
struct HyperEdge {
  EdgeId id;
  std::vector<VertexId> members;

  std::size_t size() const { return members.size(); }
  bool contains(const VertexId& v) const {
    return std::binary_search(members.begin(), members.end(), v);
  }
  friend bool operator==(const HyperEdge&, const HyperEdge&) = default;
};

/// Multi-hypergraph with identity-distinct (parallel) hyperedges.
///
/// Vertices and edges are always enumerated in sorted id order. Vertices are
/// never removed by edge operations, so isolated vertices are legal.
class Hypergraph {
 public:
  Hypergraph() = default;

  void add_vertex(VertexId id, VertexLabel label = VertexLabel::normal) {
    auto it = lower_vertex(id);
    if (it != vertices_.end() && it->id == id) {
      throw std::invalid_argument("duplicate vertex '" + id + "'");
    }
    vertices_.insert(it, Vertex{std::move(id), label});
  }

  void add_edge(EdgeId id, std::vector<VertexId> members) {
    if (members.empty()) {
      throw std::invalid_argument("edge '" + id + "' has no members");
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw std::invalid_argument("edge '" + id + "' repeats a vertex (loops are not allowed)");
    }
    for (const auto& m : members) {
      if (!has_vertex(m)) {
        throw std::invalid_argument("edge '" + id + "' references undeclared vertex '" + m + "'");
      }
    }
    auto it = lower_edge(id);
    if (it != edges_.end() && it->id == id) {
      throw std::invalid_argument("duplicate edge id '" + id + "'");
    }
    edges_.insert(it, HyperEdge{std::move(id), std::move(members)});
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<HyperEdge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const VertexId& id) const {
    auto it = lower_vertex(id);
    return it != vertices_.end() && it->id == id;
  }
  bool has_edge(const EdgeId& id) const {
    auto it = lower_edge(id);
    return it != edges_.end() && it->id == id;
  }

  const HyperEdge& edge(const EdgeId& id) const {
    auto it = lower_edge(id);
    if (it == edges_.end() || it->id != id) {
      throw std::invalid_argument("unknown edge id '" + id + "'");
    }
    return *it;
  }

  VertexLabel label(const VertexId& id) const { return vertices_[vertex_index(id)].label; }

  /// Position of `id` in the sorted vertex list.
  std::size_t vertex_index(const VertexId& id) const {
    auto it = lower_vertex(id);
    if (it == vertices_.end() || it->id != id) {
      throw std::invalid_argument("unknown vertex '" + id + "'");
    }
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  std::size_t edge_index(const EdgeId& id) const {
    auto it = lower_edge(id);
    if (it == edges_.end() || it->id != id) {
      throw std::invalid_argument("unknown edge id '" + id + "'");
    }
    return static_cast<std::size_t>(it - edges_.begin());
  }

  /// Sum of edge sizes.
  std::size_t total_incidence() const {
    return std::accumulate(edges_.begin(), edges_.end(), std::size_t{0},
                           [](std::size_t acc, const HyperEdge& e) { return acc + e.size(); });
  }

  /// Number of edges containing `v`.
  std::size_t degree(const VertexId& v) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [&](const HyperEdge& e) { return e.contains(v); }));
  }

  /// Returns `base` if unused, otherwise `base` with primes appended.
  EdgeId fresh_edge_id(EdgeId base) const {
    while (has_edge(base)) base += '\'';
    return base;
  }

  void remove_edge(const EdgeId& id) { edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(edge_index(id))); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<Vertex>::const_iterator lower_vertex(const VertexId& id) const {
    return std::lower_bound(vertices_.begin(), vertices_.end(), id,
                            [](const Vertex& v, const VertexId& key) { return v.id < key; });
  }
  std::vector<Vertex>::iterator lower_vertex(const VertexId& id) {
    return std::lower_bound(vertices_.begin(), vertices_.end(), id,
                            [](const Vertex& v, const VertexId& key) { return v.id < key; });
  }
  std::vector<HyperEdge>::const_iterator lower_edge(const EdgeId& id) const {
    return std::lower_bound(edges_.begin(), edges_.end(), id,
                            [](const HyperEdge& e, const EdgeId& key) { return e.id < key; });
  }
  std::vector<HyperEdge>::iterator lower_edge(const EdgeId& id) {
    return std::lower_bound(edges_.begin(), edges_.end(), id,
                            [](const HyperEdge& e, const EdgeId& key) { return e.id < key; });
  }

  std::vector<Vertex> vertices_;
  std::vector<HyperEdge> edges_;
};

/// Dense integer view used by the search algorithms. Vertex and edge indices
/// follow the sorted order of the source hypergraph.
struct IndexedHypergraph {
  std::size_t vertex_count = 0;
  std::vector<std::vector<int>> members;   // per edge, sorted vertex indices
  std::vector<std::vector<int>> incident;  // per vertex, ascending edge indices
  std::vector<char> cross;

  explicit IndexedHypergraph(const Hypergraph& g)
      : vertex_count(g.vertex_count()), incident(g.vertex_count()), cross(g.vertex_count(), 0) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i) cross[i] = g.vertices()[i].is_cross() ? 1 : 0;
    members.reserve(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      std::vector<int> m;
      for (const auto& v : g.edges()[e].members) m.push_back(static_cast<int>(g.vertex_index(v)));
      for (int v : m) incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
      members.push_back(std::move(m));
    }
  }
};

/// Plain union-find with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// ---------------------------------------------------------------------------
// Routing operations

/// Merges two hyperedges that share at least one vertex. The merged edge gets
/// the id `e1+e2` (primed if that id is taken).
inline Hypergraph coalesce(const Hypergraph& g, const EdgeId& e1, const EdgeId& e2) {
  if (e1 == e2) throw std::invalid_argument("coalesce needs two distinct edges");
  const HyperEdge& a = g.edge(e1);
  const HyperEdge& b = g.edge(e2);
  std::vector<VertexId> shared;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(shared));
  if (shared.empty()) {
    throw std::invalid_argument("edges '" + e1 + "' and '" + e2 + "' share no vertex");
  }
  std::vector<VertexId> merged;
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                 std::back_inserter(merged));
  Hypergraph out = g;
  out.remove_edge(e1);
  out.remove_edge(e2);
  out.add_edge(out.fresh_edge_id(e1 + "+" + e2), std::move(merged));
  return out;
}

/// Detaches `v` from edge `e`. An edge dewetted to size zero is deleted.
inline Hypergraph dewet(const Hypergraph& g, const EdgeId& e, const VertexId& v) {
  const HyperEdge& edge = g.edge(e);
  if (!edge.contains(v)) {
    throw std::invalid_argument("vertex '" + v + "' is not incident on edge '" + e + "'");
  }
  std::vector<VertexId> rest;
  for (const auto& m : edge.members)
    if (m != v) rest.push_back(m);
  Hypergraph out = g;
  out.remove_edge(e);
  if (!rest.empty()) out.add_edge(e, std::move(rest));
  return out;
}

// ---------------------------------------------------------------------------
// Berge connectivity

/// Partition of the vertices into maximal Berge-connected sets, each sorted,
/// ordered by smallest member.
inline std::vector<std::vector<VertexId>> connected_components(const Hypergraph& g) {
  IndexedHypergraph ig(g);
  DisjointSets ds(ig.vertex_count);
  for (const auto& m : ig.members)
    for (std::size_t i = 1; i < m.size(); ++i) ds.unite(m[0], m[i]);
  std::vector<std::vector<VertexId>> out;
  std::vector<int> slot(ig.vertex_count, -1);
  for (std::size_t v = 0; v < ig.vertex_count; ++v) {
    int root = ds.find(static_cast<int>(v));
    auto& s = slot[static_cast<std::size_t>(root)];
    if (s < 0) {
      s = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(s)].push_back(g.vertices()[v].id);
  }
  return out;
}

/// Alternating cycle v0 e0 v1 e1 ... v_{t-1} e_{t-1} (back to v0); edge i
/// contains vertices[i] and vertices[(i+1) % t].
struct BergeCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
};

/// True iff `c` is a Berge cycle of `g`: distinct vertices, distinct edges,
/// consecutive incidences, length at least 2.
inline bool is_berge_cycle(const Hypergraph& g, const BergeCycle& c) {
  const std::size_t t = c.vertices.size();
  if (t < 2 || c.edges.size() != t) return false;
  auto vs = c.vertices;
  auto es = c.edges;
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (std::size_t i = 0; i < t; ++i) {
    if (!g.has_edge(c.edges[i])) return false;
    const auto& e = g.edge(c.edges[i]);
    if (!e.contains(c.vertices[i]) || !e.contains(c.vertices[(i + 1) % t])) return false;
  }
  return true;
}

namespace detail {

struct BergeCycleSearch {
  const IndexedHypergraph& g;
  std::size_t min_len;
  int start = 0;
  std::vector<int> path_vertices;
  std::vector<int> path_edges;
  std::vector<char> on_path;
  std::vector<char> edge_used;

  bool extend(int cur) {
    for (int e : g.incident[static_cast<std::size_t>(cur)]) {
      if (edge_used[static_cast<std::size_t>(e)]) continue;
      for (int w : g.members[static_cast<std::size_t>(e)]) {
        if (w == cur) continue;
        if (w == start) {
          if (path_edges.size() + 1 >= min_len) {
            path_edges.push_back(e);
            return true;
          }
          continue;
        }
        // The smallest vertex of a reported cycle is its start.
        if (w < start || on_path[static_cast<std::size_t>(w)]) continue;
        edge_used[static_cast<std::size_t>(e)] = 1;
        on_path[static_cast<std::size_t>(w)] = 1;
        path_edges.push_back(e);
        path_vertices.push_back(w);
        if (extend(w)) return true;
        path_vertices.pop_back();
        path_edges.pop_back();
        on_path[static_cast<std::size_t>(w)] = 0;
        edge_used[static_cast<std::size_t>(e)] = 0;
      }
    }
    return false;
  }
};

}  // namespace detail

/// Finds a Berge cycle of length >= `min_len`, exploring start vertices and
/// incident edges in sorted order. Exponential in the worst case.
inline std::optional<BergeCycle> find_berge_cycle(const Hypergraph& g, std::size_t min_len) {
  if (min_len < 2) throw std::invalid_argument("min_len must be at least 2");
  IndexedHypergraph ig(g);
  detail::BergeCycleSearch search{ig, min_len, 0, {}, {}, {}, {}};
  search.on_path.assign(ig.vertex_count, 0);
  search.edge_used.assign(ig.members.size(), 0);
  for (std::size_t v = 0; v < ig.vertex_count; ++v) {
    search.start = static_cast<int>(v);
    search.path_vertices = {static_cast<int>(v)};
    search.path_edges.clear();
    search.on_path[v] = 1;
    if (search.extend(static_cast<int>(v))) {
      BergeCycle c;
      for (int x : search.path_vertices) c.vertices.push_back(g.vertices()[static_cast<std::size_t>(x)].id);
      for (int e : search.path_edges) c.edges.push_back(g.edges()[static_cast<std::size_t>(e)].id);
      return c;
    }
    search.on_path[v] = 0;
  }
  return std::nullopt;
}

/// Sub-hypergraph keeping all vertices and only the listed edges.
inline Hypergraph with_edges(const Hypergraph& g, const std::vector<EdgeId>& keep) {
  Hypergraph out;
  for (const auto& v : g.vertices()) out.add_vertex(v.id, v.label);
  for (const auto& id : keep) {
    const auto& e = g.edge(id);
    out.add_edge(e.id, e.members);
  }
  return out;
}

}  // namespace hyperimmerse
