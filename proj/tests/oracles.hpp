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

// Independent reference implementations used by the tests. Nothing here
// calls into the search code of the library; only the data types are shared.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperimmerse/hypergraph.hpp"
#include "hyperimmerse/multigraph.hpp"

namespace oracle {

using hyperimmerse::Hypergraph;
using hyperimmerse::MultiGraph;

// Plain adjacency data: vertex count, edges as vertex index lists.
struct Plain {
  int n = 0;
  std::vector<std::vector<int>> edges;
  std::vector<bool> cross;
};

inline Plain plain(const Hypergraph& g) {
  Plain p;
  p.n = static_cast<int>(g.vertex_count());
  std::map<std::string, int> idx;
  for (int i = 0; i < p.n; ++i) {
    idx[g.vertices()[static_cast<std::size_t>(i)].id] = i;
    p.cross.push_back(g.vertices()[static_cast<std::size_t>(i)].is_cross());
  }
  for (const auto& e : g.edges()) {
    std::vector<int> m;
    for (const auto& v : e.members) m.push_back(idx.at(v));
    p.edges.push_back(m);
  }
  return p;
}

// Union of the listed edges is connected and touches every vertex in need.
inline bool connected_cover(const Plain& g, const std::vector<int>& edge_ids, const std::vector<int>& need) {
  if (edge_ids.empty()) return need.empty();
  std::vector<int> parent(static_cast<std::size_t>(g.n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
  std::vector<char> touched(static_cast<std::size_t>(g.n), 0);
  for (int e : edge_ids) {
    const auto& m = g.edges[static_cast<std::size_t>(e)];
    for (int v : m) touched[static_cast<std::size_t>(v)] = 1;
    for (int v : m) parent[static_cast<std::size_t>(find(v))] = find(m[0]);
  }
  for (int v : need)
    if (!touched[static_cast<std::size_t>(v)]) return false;
  int root = -1;
  for (int v = 0; v < g.n; ++v) {
    if (!touched[static_cast<std::size_t>(v)]) continue;
    if (root < 0) root = find(v);
    if (find(v) != root) return false;
  }
  return true;
}

// Immersion by exhaustion: every G edge goes to one H edge or stays unused,
// then an injective vertex map is sought for the resulting classes.
// Exponential in |E(G)|; intended for |E(G)| <= 7 or so.
inline bool immerses(const Hypergraph& hh, const Hypergraph& gg, bool restricted = false) {
  const Plain h = plain(hh), g = plain(gg);
  if (h.n > g.n) return false;
  const int k = static_cast<int>(h.edges.size());
  const int m = static_cast<int>(g.edges.size());
  std::vector<int> cls(static_cast<std::size_t>(m), 0);  // 0 unused, j+1 for H edge j
  std::vector<int> map(static_cast<std::size_t>(h.n), -1);
  std::vector<char> used(static_cast<std::size_t>(g.n), 0);
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(k));
  std::vector<std::set<int>> span(static_cast<std::size_t>(k));

  // Vertex map given fixed classes.
  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == h.n) {
      for (int j = 0; j < k; ++j) {
        std::vector<int> need;
        for (int x : h.edges[static_cast<std::size_t>(j)]) need.push_back(map[static_cast<std::size_t>(x)]);
        const auto& grp = groups[static_cast<std::size_t>(j)];
        if (grp.empty()) {
          if (h.edges[static_cast<std::size_t>(j)].size() != 1) return false;
          continue;
        }
        if (!connected_cover(g, grp, need)) return false;
      }
      return true;
    }
    for (int x = 0; x < g.n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      if (restricted && !h.cross[static_cast<std::size_t>(v)] && g.cross[static_cast<std::size_t>(x)]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        const auto& he = h.edges[static_cast<std::size_t>(j)];
        if (std::find(he.begin(), he.end(), v) == he.end()) continue;
        if (groups[static_cast<std::size_t>(j)].empty()) continue;
        if (!span[static_cast<std::size_t>(j)].count(x)) ok = false;
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(x)] = 1;
      map[static_cast<std::size_t>(v)] = x;
      if (place(v + 1)) return true;
      used[static_cast<std::size_t>(x)] = 0;
    }
    return false;
  };

  std::function<bool(int)> assign = [&](int e) -> bool {
    if (e == m) {
      for (int j = 0; j < k; ++j) {
        groups[static_cast<std::size_t>(j)].clear();
        span[static_cast<std::size_t>(j)].clear();
      }
      for (int i = 0; i < m; ++i) {
        if (cls[static_cast<std::size_t>(i)] == 0) continue;
        const auto j = static_cast<std::size_t>(cls[static_cast<std::size_t>(i)] - 1);
        groups[j].push_back(i);
        for (int v : g.edges[static_cast<std::size_t>(i)]) span[j].insert(v);
      }
      for (int j = 0; j < k; ++j)
        if (groups[static_cast<std::size_t>(j)].empty() && h.edges[static_cast<std::size_t>(j)].size() > 1) return false;
      for (int j = 0; j < k; ++j)
        if (!groups[static_cast<std::size_t>(j)].empty() && !connected_cover(g, groups[static_cast<std::size_t>(j)], {}))
          return false;
      return place(0);
    }
    for (int c = 0; c <= k; ++c) {
      cls[static_cast<std::size_t>(e)] = c;
      if (assign(e + 1)) return true;
    }
    return false;
  };
  return assign(0);
}

// K4 immersion in a loopless multigraph as four branch vertices joined by six
// pairwise edge-disjoint paths.
inline bool has_k4_immersion(const MultiGraph& mg) {
  const Plain g = plain(mg.as_hypergraph());
  const int n = g.n;
  const int m = static_cast<int>(g.edges.size());
  if (n < 4 || m < 6) return false;
  std::vector<char> taken(static_cast<std::size_t>(m), 0);
  std::vector<std::pair<int, int>> pairs;
  auto other = [&](int e, int v) {
    const auto& ed = g.edges[static_cast<std::size_t>(e)];
    return ed[0] == v ? ed[1] : ed[0];
  };
  std::function<bool(std::size_t)> route = [&](std::size_t p) -> bool {
    if (p == pairs.size()) return true;
    const int s = pairs[p].first, t = pairs[p].second;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> walk = [&](int v) -> bool {
      if (v == t) return route(p + 1);
      seen[static_cast<std::size_t>(v)] = 1;
      for (int e = 0; e < m; ++e) {
        if (taken[static_cast<std::size_t>(e)]) continue;
        const auto& ed = g.edges[static_cast<std::size_t>(e)];
        if (ed[0] != v && ed[1] != v) continue;
        const int w = other(e, v);
        if (seen[static_cast<std::size_t>(w)]) continue;
        taken[static_cast<std::size_t>(e)] = 1;
        if (walk(w)) return true;
        taken[static_cast<std::size_t>(e)] = 0;
      }
      seen[static_cast<std::size_t>(v)] = 0;
      return false;
    };
    return walk(s);
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          // Every ordering of the four as branch vertices gives the same K4.
          pairs = {{a, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, d}};
          std::fill(taken.begin(), taken.end(), 0);
          if (route(0)) return true;
        }
  return false;
}

// Smallest number of edges crossing a proper vertex bipartition.
inline int min_edge_cut(const MultiGraph& mg) {
  const Plain g = plain(mg.as_hypergraph());
  int best = 1 << 30;
  for (std::uint32_t s = 1; s + 1 < (1U << g.n); ++s) {
    if (!(s & 1U)) continue;
    int cut = 0;
    for (const auto& e : g.edges)
      if (((s >> e[0]) & 1U) != ((s >> e[1]) & 1U)) ++cut;
    best = std::min(best, cut);
  }
  return best;
}

// Label-respecting isomorphism by trying every vertex bijection.
inline std::vector<std::vector<int>> relabelled(const Plain& g, const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  for (const auto& e : g.edges) {
    std::vector<int> m;
    for (int v : e) m.push_back(perm[static_cast<std::size_t>(v)]);
    std::sort(m.begin(), m.end());
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<int>> canonical_form(const Hypergraph& hg) {
  const Plain g = plain(hg);
  // Normal vertices get the low labels, cross vertices the high ones.
  std::vector<int> normal, cross;
  for (int v = 0; v < g.n; ++v) (g.cross[static_cast<std::size_t>(v)] ? cross : normal).push_back(v);
  std::vector<std::vector<int>> best;
  bool first = true;
  std::vector<int> pn(normal.size()), pc(cross.size());
  std::iota(pn.begin(), pn.end(), 0);
  do {
    std::iota(pc.begin(), pc.end(), static_cast<int>(normal.size()));
    do {
      std::vector<int> perm(static_cast<std::size_t>(g.n));
      for (std::size_t i = 0; i < normal.size(); ++i) perm[static_cast<std::size_t>(normal[i])] = pn[i];
      for (std::size_t i = 0; i < cross.size(); ++i) perm[static_cast<std::size_t>(cross[i])] = pc[i];
      auto form = relabelled(g, perm);
      if (first || form < best) {
        best = std::move(form);
        first = false;
      }
    } while (std::next_permutation(pc.begin(), pc.end()));
  } while (std::next_permutation(pn.begin(), pn.end()));
  best.push_back({static_cast<int>(normal.size()), static_cast<int>(cross.size())});
  return best;
}

inline bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

// Random hypergraph with vertices v0.. and edges e0.., every edge size in
// [1, max_size] (capped by the vertex count).
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int max_vertices, int max_edges, int max_size, int min_size = 1) {
  Hypergraph g;
  const int n = std::uniform_int_distribution<int>(std::max(1, min_size), max_vertices)(rng);
  const int m = std::uniform_int_distribution<int>(0, max_edges)(rng);
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int j = 0; j < m; ++j) {
    const int s = std::uniform_int_distribution<int>(std::min(min_size, n), std::min(max_size, n))(rng);
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::string> members;
    for (int i = 0; i < s; ++i) members.push_back("v" + std::to_string(all[static_cast<std::size_t>(i)]));
    g.add_edge("e" + std::to_string(j), members);
  }
  return g;
}

// Series-parallel multigraph grown from one edge by subdividing an edge,
// doubling an edge or hanging a pendant edge.
inline MultiGraph random_series_parallel(std::mt19937_64& rng, int max_vertices, int max_multiplicity, int steps) {
  std::vector<std::pair<int, int>> edges{{0, 1}};
  int n = 2;
  auto mult = [&](int a, int b) {
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const auto& e) {
      return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    }));
  };
  for (int s = 0; s < steps; ++s) {
    const int op = std::uniform_int_distribution<int>(0, 2)(rng);
    const auto pick = std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng);
    if (op == 0 && n < max_vertices) {
      auto [a, b] = edges[pick];
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick));
      edges.push_back({a, n});
      edges.push_back({n, b});
      ++n;
    } else if (op == 1) {
      auto [a, b] = edges[pick];
      if (mult(a, b) < max_multiplicity) edges.push_back({a, b});
    } else if (n < max_vertices) {
      const int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
      edges.push_back({a, n});
      ++n;
    }
  }
  MultiGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::size_t i = 0; i < edges.size(); ++i)
    g.add_edge("e" + std::to_string(i), "v" + std::to_string(edges[i].first), "v" + std::to_string(edges[i].second));
  return g;
}

inline double ghz_amplitude(std::size_t r, std::size_t index) {
  const std::size_t all = (std::size_t{1} << r) - 1;
  return index == 0 || index == all ? 1.0 / std::sqrt(2.0) : 0.0;
}

}  // namespace oracle
