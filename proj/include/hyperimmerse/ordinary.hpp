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

// Algorithms on loopless multigraphs: lifting, articulation structure,
// series-parallel recognition, three-edge-connected components and the
// K4 immersion test for three-edge-connected series-parallel graphs.

#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperimmerse/multigraph.hpp"

namespace hyperimmerse {

/// Replaces adjacent edges {v,u} and {u,w} by a new edge {v,w}.
inline MultiGraph lift(const MultiGraph& g, const EdgeId& e1, const EdgeId& e2) {
  if (e1 == e2) throw std::invalid_argument("lift needs two distinct edges");
  const MultiEdge a = g.edge(e1);
  const MultiEdge b = g.edge(e2);
  std::vector<VertexId> shared;
  for (const auto& x : {a.u, a.v})
    if (x == b.u || x == b.v) shared.push_back(x);
  if (shared.empty()) throw std::invalid_argument("edges '" + e1 + "' and '" + e2 + "' are not adjacent");
  if (shared.size() == 2) throw std::invalid_argument("lifting parallel edges '" + e1 + "', '" + e2 + "' would create a loop");
  const VertexId& pivot = shared[0];
  MultiGraph out = g;
  out.remove_edge(e1);
  out.remove_edge(e2);
  out.add_edge(out.fresh_edge_id(e1 + "+" + e2), a.other(pivot), b.other(pivot));
  return out;
}

/// Graph on `vertices` (labels copied from g) with the listed edges of g.
inline MultiGraph subgraph(const MultiGraph& g, const std::vector<VertexId>& vertices, const std::vector<EdgeId>& edges) {
  MultiGraph out;
  for (const auto& v : vertices) out.add_vertex(v, g.label(v));
  for (const auto& id : edges) {
    auto e = g.edge(id);
    out.add_edge(e.id, e.u, e.v, e.is_virtual);
  }
  return out;
}

struct BiconnectedDecomposition {
  std::vector<VertexId> cut_points;     // sorted
  std::vector<MultiGraph> components;   // ordered by smallest vertex id
};

namespace detail {

struct BlockSearch {
  const IndexedMultiGraph& g;
  std::vector<int> disc, low;
  std::vector<char> is_cut;
  std::vector<int> stack;
  std::vector<std::vector<int>> blocks;  // edge indices
  int timer = 0;

  explicit BlockSearch(const IndexedMultiGraph& graph)
      : g(graph), disc(graph.vertex_count, 0), low(graph.vertex_count, 0), is_cut(graph.vertex_count, 0) {}

  void visit(int u, int parent_edge) {
    const auto uu = static_cast<std::size_t>(u);
    disc[uu] = low[uu] = ++timer;
    int children = 0;
    for (auto [w, e] : g.adj[uu]) {
      if (e == parent_edge) continue;
      const auto ww = static_cast<std::size_t>(w);
      if (disc[ww] == 0) {
        stack.push_back(e);
        ++children;
        visit(w, e);
        low[uu] = std::min(low[uu], low[ww]);
        if (low[ww] >= disc[uu]) {
          if (parent_edge != -1) is_cut[uu] = 1;
          std::vector<int> block;
          while (true) {
            int top = stack.back();
            stack.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
          blocks.push_back(std::move(block));
        }
      } else if (disc[ww] < disc[uu]) {
        stack.push_back(e);
        low[uu] = std::min(low[uu], disc[ww]);
      }
    }
    if (parent_edge == -1 && children > 1) is_cut[uu] = 1;
  }
};

}  // namespace detail

/// Cut points and biconnected components (blocks). Parallel edges between two
/// vertices form a block of their own and never create a cut point.
/// Isolated vertices belong to no block.
inline BiconnectedDecomposition cut_points_and_biconnected(const MultiGraph& g) {
  IndexedMultiGraph ig(g);
  detail::BlockSearch search(ig);
  for (std::size_t v = 0; v < ig.vertex_count; ++v)
    if (search.disc[v] == 0) search.visit(static_cast<int>(v), -1);

  const auto graph_edges = g.edges();
  BiconnectedDecomposition out;
  for (std::size_t v = 0; v < ig.vertex_count; ++v)
    if (search.is_cut[v]) out.cut_points.push_back(g.vertices()[v].id);
  for (const auto& block : search.blocks) {
    std::set<VertexId> vs;
    std::vector<EdgeId> es;
    for (int e : block) {
      const auto& me = graph_edges[static_cast<std::size_t>(e)];
      vs.insert(me.u);
      vs.insert(me.v);
      es.push_back(me.id);
    }
    out.components.push_back(subgraph(g, {vs.begin(), vs.end()}, es));
  }
  std::sort(out.components.begin(), out.components.end(), [](const MultiGraph& a, const MultiGraph& b) {
    return a.vertices().front().id < b.vertices().front().id ||
           (a.vertices().front().id == b.vertices().front().id && a.vertex_count() < b.vertex_count());
  });
  return out;
}

namespace detail {

// Series/parallel reduction of one block; true iff it collapses to one edge.
inline bool block_reduces(const MultiGraph& block) {
  const std::size_t n = block.vertex_count();
  if (n <= 2) return true;
  std::vector<std::set<int>> nbrs(n);
  for (const auto& e : block.edges()) {
    const int a = static_cast<int>(block.vertex_index(e.u));
    const int b = static_cast<int>(block.vertex_index(e.v));
    nbrs[static_cast<std::size_t>(a)].insert(b);  // parallel copies merge here
    nbrs[static_cast<std::size_t>(b)].insert(a);
  }
  std::size_t alive = n;
  std::deque<int> work;
  for (std::size_t v = 0; v < n; ++v) work.push_back(static_cast<int>(v));
  std::vector<char> removed(n, 0);
  while (!work.empty() && alive > 2) {
    const int v = work.front();
    work.pop_front();
    const auto vv = static_cast<std::size_t>(v);
    if (removed[vv] || nbrs[vv].size() != 2) continue;
    const int a = *nbrs[vv].begin();
    const int b = *std::next(nbrs[vv].begin());
    nbrs[static_cast<std::size_t>(a)].erase(v);
    nbrs[static_cast<std::size_t>(b)].erase(v);
    nbrs[static_cast<std::size_t>(a)].insert(b);
    nbrs[static_cast<std::size_t>(b)].insert(a);
    nbrs[vv].clear();
    removed[vv] = 1;
    --alive;
    work.push_back(a);
    work.push_back(b);
  }
  return alive <= 2;
}

}  // namespace detail

/// True iff every block reduces to a single edge by series and parallel
/// reductions, i.e. the graph contains no subdivision of K4.
inline bool is_series_parallel(const MultiGraph& g) {
  for (const auto& block : cut_points_and_biconnected(g).components)
    if (!detail::block_reduces(block)) return false;
  return true;
}

namespace detail {

// Unit-capacity augmenting paths on an undirected multigraph; stops at `cap`.
// Edges with removed[e] set are ignored.
inline std::size_t edge_disjoint_paths(const IndexedMultiGraph& g, int s, int t, std::size_t cap,
                                       const std::vector<char>* removed = nullptr) {
  if (s == t) return cap;
  std::vector<int> flow(g.ends.size(), 0);  // +1: first->second, -1: reverse
  std::size_t found = 0;
  std::vector<int> via_edge(g.vertex_count), via_vertex(g.vertex_count);
  while (found < cap) {
    std::fill(via_edge.begin(), via_edge.end(), -2);
    via_edge[static_cast<std::size_t>(s)] = -1;
    std::deque<int> queue{s};
    while (!queue.empty() && via_edge[static_cast<std::size_t>(t)] == -2) {
      const int x = queue.front();
      queue.pop_front();
      for (auto [y, e] : g.adj[static_cast<std::size_t>(x)]) {
        if (removed && (*removed)[static_cast<std::size_t>(e)]) continue;
        if (via_edge[static_cast<std::size_t>(y)] != -2) continue;
        const bool forward = g.ends[static_cast<std::size_t>(e)].first == x;
        const int f = flow[static_cast<std::size_t>(e)];
        if (forward ? f >= 1 : f <= -1) continue;
        via_edge[static_cast<std::size_t>(y)] = e;
        via_vertex[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
    }
    if (via_edge[static_cast<std::size_t>(t)] == -2) break;
    for (int y = t; y != s; y = via_vertex[static_cast<std::size_t>(y)]) {
      const int e = via_edge[static_cast<std::size_t>(y)];
      const int x = via_vertex[static_cast<std::size_t>(y)];
      flow[static_cast<std::size_t>(e)] += g.ends[static_cast<std::size_t>(e)].first == x ? 1 : -1;
    }
    ++found;
  }
  return found;
}

inline std::size_t count_components(const IndexedMultiGraph& g, const std::vector<char>& removed) {
  DisjointSets ds(g.vertex_count);
  std::size_t count = g.vertex_count;
  for (std::size_t e = 0; e < g.ends.size(); ++e)
    if (!removed[e] && ds.unite(g.ends[e].first, g.ends[e].second)) --count;
  return count;
}

}  // namespace detail

/// Number of pairwise edge-disjoint s-t paths, capped at `cap`.
inline std::size_t edge_disjoint_path_count(const MultiGraph& g, const VertexId& s, const VertexId& t, std::size_t cap) {
  IndexedMultiGraph ig(g);
  return detail::edge_disjoint_paths(ig, static_cast<int>(g.vertex_index(s)), static_cast<int>(g.vertex_index(t)), cap);
}

struct ThreeEdgeComponent {
  std::vector<VertexId> vertices;  // sorted
  MultiGraph graph;                // induced edges plus virtual edges
};

/// Maximal sets of pairwise three-edge-connected vertices (decided by
/// unit-capacity max-flow). Each component carries its induced edges plus one
/// virtual edge {u,v} for every pair of edges {u,x}, {v,y} (u != v inside,
/// x, y outside) that forms a two-edge cut in which neither edge is a bridge.
inline std::vector<ThreeEdgeComponent> three_edge_connected_components(const MultiGraph& g) {
  IndexedMultiGraph ig(g);
  const std::size_t n = ig.vertex_count;
  DisjointSets ds(n);
  std::vector<int> heavy;
  for (std::size_t v = 0; v < n; ++v)
    if (ig.adj[v].size() >= 3) heavy.push_back(static_cast<int>(v));
  for (std::size_t i = 0; i < heavy.size(); ++i)
    for (std::size_t j = i + 1; j < heavy.size(); ++j)
      if (ds.find(heavy[i]) != ds.find(heavy[j]) && detail::edge_disjoint_paths(ig, heavy[i], heavy[j], 3) >= 3)
        ds.unite(heavy[i], heavy[j]);

  std::map<int, std::vector<int>> groups;
  for (std::size_t v = 0; v < n; ++v) groups[ds.find(static_cast<int>(v))].push_back(static_cast<int>(v));

  const auto graph_edges = g.edges();
  std::vector<char> removed(ig.ends.size(), 0);
  const std::size_t base = detail::count_components(ig, removed);
  std::vector<char> bridge(ig.ends.size(), 0);
  for (std::size_t e = 0; e < ig.ends.size(); ++e) {
    removed[e] = 1;
    bridge[e] = detail::count_components(ig, removed) > base ? 1 : 0;
    removed[e] = 0;
  }

  std::vector<ThreeEdgeComponent> out;
  for (const auto& [root, members] : groups) {
    std::vector<char> inside(n, 0);
    for (int v : members) inside[static_cast<std::size_t>(v)] = 1;
    ThreeEdgeComponent comp;
    for (int v : members) comp.vertices.push_back(g.vertices()[static_cast<std::size_t>(v)].id);
    for (const auto& v : comp.vertices) comp.graph.add_vertex(v, g.label(v));
    std::vector<int> boundary;
    for (std::size_t e = 0; e < ig.ends.size(); ++e) {
      const bool a = inside[static_cast<std::size_t>(ig.ends[e].first)];
      const bool b = inside[static_cast<std::size_t>(ig.ends[e].second)];
      if (a && b) {
        const auto& me = graph_edges[e];
        comp.graph.add_edge(me.id, me.u, me.v, me.is_virtual);
      } else if (a != b && !bridge[e]) {
        boundary.push_back(static_cast<int>(e));
      }
    }
    auto inner_end = [&](int e) {
      const auto& [x, y] = ig.ends[static_cast<std::size_t>(e)];
      return inside[static_cast<std::size_t>(x)] ? x : y;
    };
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      for (std::size_t j = i + 1; j < boundary.size(); ++j) {
        const int u = inner_end(boundary[i]);
        const int v = inner_end(boundary[j]);
        if (u == v) continue;
        removed[static_cast<std::size_t>(boundary[i])] = removed[static_cast<std::size_t>(boundary[j])] = 1;
        const bool cut = detail::count_components(ig, removed) > base;
        removed[static_cast<std::size_t>(boundary[i])] = removed[static_cast<std::size_t>(boundary[j])] = 0;
        if (!cut) continue;
        const auto& ea = graph_edges[static_cast<std::size_t>(boundary[i])];
        const auto& eb = graph_edges[static_cast<std::size_t>(boundary[j])];
        comp.graph.add_edge(comp.graph.fresh_edge_id("~" + ea.id + "|" + eb.id), g.vertices()[static_cast<std::size_t>(u)].id,
                            g.vertices()[static_cast<std::size_t>(v)].id, true);
      }
    }
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const ThreeEdgeComponent& a, const ThreeEdgeComponent& b) { return a.vertices.front() < b.vertices.front(); });
  return out;
}

/// Pruning: for every vertex v with exactly two neighbours u, w joined by a
/// single {u,w} edge, the bundles {u,v} and {v,w} are capped at two copies.
/// Capping never changes which vertices qualify, so one pass is a fixpoint.
inline MultiGraph prune(const MultiGraph& g) {
  MultiGraph out = g;
  for (const auto& vert : g.vertices()) {
    const auto nb = g.neighbours(vert.id);
    if (nb.size() != 2 || g.multiplicity(nb[0], nb[1]) != 1) continue;
    for (const auto& x : nb) {
      auto ids = out.edges_between(vert.id, x);
      while (ids.size() > 2) {
        out.remove_edge(ids.back());
        ids.pop_back();
      }
    }
  }
  return out;
}

inline bool is_three_edge_connected(const MultiGraph& g) {
  IndexedMultiGraph ig(g);
  for (std::size_t s = 1; s < ig.vertex_count; ++s)
    if (detail::edge_disjoint_paths(ig, 0, static_cast<int>(s), 3) < 3) return false;
  return true;
}

/// A subdivision of K4: four branch vertices (sorted) and, for each pair
/// (i, j) with i < j, the edge ids of the path joining them.
struct K4Subdivision {
  std::vector<VertexId> branch;
  std::map<std::pair<int, int>, std::vector<EdgeId>> paths;
};

/// A K4 subdivision contained in g, found by deleting edges while the graph
/// stays non-series-parallel. Empty iff g is series-parallel.
inline std::optional<K4Subdivision> find_k4_subdivision(const MultiGraph& g) {
  if (is_series_parallel(g)) return std::nullopt;
  MultiGraph x = g;
  for (const auto& e : g.edges()) {
    MultiGraph y = x;
    y.remove_edge(e.id);
    if (!is_series_parallel(y)) x = std::move(y);
  }
  K4Subdivision out;
  for (const auto& v : x.vertices())
    if (x.degree(v.id) == 3) out.branch.push_back(v.id);
  if (out.branch.size() != 4) throw std::logic_error("minimal non-series-parallel subgraph is not a K4 subdivision");
  auto index_of = [&](const VertexId& v) {
    return static_cast<int>(std::find(out.branch.begin(), out.branch.end(), v) - out.branch.begin());
  };
  const auto edges = x.edges();
  for (int i = 0; i < 4; ++i) {
    for (const auto& start : edges) {
      const auto& b = out.branch[static_cast<std::size_t>(i)];
      if (start.u != b && start.v != b) continue;
      std::vector<EdgeId> path{start.id};
      VertexId cur = start.other(b);
      EdgeId last = start.id;
      while (index_of(cur) == 4) {
        for (const auto& e : edges)
          if (e.id != last && (e.u == cur || e.v == cur)) {
            path.push_back(e.id);
            last = e.id;
            cur = e.other(cur);
            break;
          }
      }
      const int j = index_of(cur);
      if (i < j) {
        std::sort(path.begin(), path.end());
        out.paths[{i, j}] = path;
      }
    }
  }
  return out;
}

/// K4 immersion test for a three-edge-connected series-parallel multigraph.
/// Throws std::invalid_argument when the precondition does not hold.
inline bool test_k4(const MultiGraph& x) {
  if (!is_series_parallel(x)) throw std::invalid_argument("test_k4: input is not series-parallel");
  if (!is_three_edge_connected(x)) throw std::invalid_argument("test_k4: input is not three-edge-connected");

  MultiGraph trimmed = x;
  for (const auto& v : x.vertices()) {
    const auto nb = x.neighbours(v.id);
    if (nb.size() != 1) continue;
    auto ids = trimmed.edges_between(v.id, nb[0]);
    while (ids.size() > 3) {
      trimmed.remove_edge(ids.back());
      ids.pop_back();
    }
  }

  const auto decomposition = cut_points_and_biconnected(trimmed);
  for (const auto& c : decomposition.cut_points)
    if (trimmed.degree(c) >= 7) return true;
  for (const auto& block : decomposition.components) {
    if (block.vertex_count() < 4) continue;
    const MultiGraph pruned = prune(block);
    for (const auto& v : pruned.vertices())
      if (pruned.degree(v.id) >= 5) return true;
  }
  return false;
}

/// K4 immersion in an ordinary multigraph: either the graph is not
/// series-parallel, or one of its three-edge-connected components passes
/// test_k4.
inline bool k4_immersion_multigraph(const MultiGraph& g) {
  if (!is_series_parallel(g)) return true;
  for (const auto& comp : three_edge_connected_components(g))
    if (comp.vertices.size() >= 4 && test_k4(comp.graph)) return true;
  return false;
}

}  // namespace hyperimmerse
