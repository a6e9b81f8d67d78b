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

// Ordinary graphs obtained from a hypergraph by dewetting alone, and the
// factor-graph variants of K_4^3.
//
// A 3-subset {a,b,c} of an edge e becomes a Y: a cross vertex X<e> joined to
// a, b and c by edges e/a, e/b, e/c. A 2-subset keeps the edge id.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperimmerse/hypergraph.hpp"
#include "hyperimmerse/isomorphism.hpp"
#include "hyperimmerse/lattice.hpp"
#include "hyperimmerse/multigraph.hpp"

namespace hyperimmerse {

/// pairs: every edge becomes one of its 2-subsets.
/// pairs_and_triples: every edge becomes a 2-subset or a Y on a 3-subset.
enum class DewetMode { pairs, pairs_and_triples };

/// One member of a dewetting family. `origin` maps each ordinary edge to the
/// hyperedge it came from.
struct Dewetting {
  MultiGraph graph;
  std::map<EdgeId, EdgeId> origin;
};

/// Members must have at least `vertices` normal vertices of degree >= `degree`.
struct DewetFilter {
  std::size_t vertices = 0;
  std::size_t degree = 0;
};

namespace detail {

inline std::vector<std::vector<int>> index_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<int>> out;
  if (k > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i < static_cast<int>(n); ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

struct DewetPlan {
  const Hypergraph& g;
  IndexedHypergraph ig;
  std::vector<std::vector<std::vector<int>>> options;  // per edge: vertex index subsets

  DewetPlan(const Hypergraph& graph, DewetMode mode, bool maximal) : g(graph), ig(graph) {
    for (const auto& m : ig.members) {
      if (m.size() < 2) throw std::invalid_argument("dewetting families need edges of size >= 2");
      std::vector<std::vector<int>> opts;
      auto add = [&](std::size_t k) {
        for (const auto& s : index_subsets(m.size(), k)) {
          std::vector<int> vs;
          for (int i : s) vs.push_back(m[static_cast<std::size_t>(i)]);
          opts.push_back(std::move(vs));
        }
      };
      if (maximal) {
        add(m.size() == 2 ? 2 : 3);
      } else {
        add(2);
        if (mode == DewetMode::pairs_and_triples) add(3);
      }
      options.push_back(std::move(opts));
    }
  }

  bool passes(const std::vector<std::size_t>& choice, const DewetFilter& filter) const {
    if (filter.vertices == 0) return true;
    std::vector<std::size_t> degree(ig.vertex_count, 0);
    for (std::size_t e = 0; e < choice.size(); ++e)
      for (int v : options[e][choice[e]]) ++degree[static_cast<std::size_t>(v)];
    std::size_t heavy = 0;
    for (std::size_t v = 0; v < ig.vertex_count; ++v)
      if (!ig.cross[v] && degree[v] >= filter.degree) ++heavy;
    return heavy >= filter.vertices;
  }

  Dewetting build(const std::vector<std::size_t>& choice) const {
    Dewetting out;
    for (const auto& v : g.vertices()) out.graph.add_vertex(v.id, v.label);
    for (std::size_t e = 0; e < choice.size(); ++e) {
      const auto& id = g.edges()[e].id;
      const auto& vs = options[e][choice[e]];
      auto name = [&](int v) { return g.vertices()[static_cast<std::size_t>(v)].id; };
      if (vs.size() == 2) {
        out.graph.add_edge(id, name(vs[0]), name(vs[1]));
        out.origin.emplace(id, id);
      } else {
        VertexId center = "X" + id;
        while (out.graph.has_vertex(center) || g.has_vertex(center)) center += '\'';
        out.graph.add_vertex(center, VertexLabel::cross);
        for (int v : vs) {
          const EdgeId spoke = out.graph.fresh_edge_id(id + "/" + name(v));
          out.graph.add_edge(spoke, center, name(v));
          out.origin.emplace(spoke, id);
        }
      }
    }
    return out;
  }

  template <class Visit>
  bool run(const DewetFilter& filter, Visit&& visit) const {
    std::vector<std::size_t> choice(options.size(), 0);
    while (true) {
      if (passes(choice, filter) && visit(build(choice))) return true;
      std::size_t e = choice.size();
      while (e > 0) {
        --e;
        if (++choice[e] < options[e].size()) break;
        choice[e] = 0;
        if (e == 0) return false;
      }
      if (choice.empty()) return false;
    }
  }
};

inline std::uint64_t saturating_product(const std::vector<std::uint64_t>& factors) {
  std::uint64_t total = 1;
  for (auto f : factors) {
    if (f != 0 && total > std::numeric_limits<std::uint64_t>::max() / f) return std::numeric_limits<std::uint64_t>::max();
    total *= f;
  }
  return total;
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Visits every member of the family in odometer order over the edges (last
/// edge fastest). `visit` returns true to stop; the return value reports
/// whether it did. Throws std::invalid_argument on edges of size 1.
template <class Visit>
bool for_each_dewetting(const Hypergraph& g, DewetMode mode, Visit&& visit, const DewetFilter& filter = {}) {
  detail::DewetPlan plan(g, mode, false);
  return plan.run(filter, visit);
}

/// Members of the pairs_and_triples family that are maximal: size-2 edges
/// stay, every larger edge becomes a Y on one of its 3-subsets.
template <class Visit>
bool for_each_maximal_dewetting(const Hypergraph& g, Visit&& visit, const DewetFilter& filter = {}) {
  detail::DewetPlan plan(g, DewetMode::pairs_and_triples, true);
  return plan.run(filter, visit);
}

inline std::vector<MultiGraph> enumerate_dewettings(const Hypergraph& g, DewetMode mode) {
  std::vector<MultiGraph> out;
  for_each_dewetting(g, mode, [&](Dewetting d) {
    out.push_back(std::move(d.graph));
    return false;
  });
  return out;
}

/// Family size, saturating at 2^64 - 1.
inline std::uint64_t count_dewettings(const Hypergraph& g, DewetMode mode) {
  std::vector<std::uint64_t> f;
  for (const auto& e : g.edges()) {
    std::uint64_t k = detail::choose(e.size(), 2);
    if (mode == DewetMode::pairs_and_triples) k += detail::choose(e.size(), 3);
    f.push_back(k);
  }
  return detail::saturating_product(f);
}

inline std::uint64_t count_maximal_dewettings(const Hypergraph& g) {
  std::vector<std::uint64_t> f;
  for (const auto& e : g.edges()) f.push_back(e.size() == 2 ? 1 : detail::choose(e.size(), 3));
  return detail::saturating_product(f);
}

/// A factor-graph variant of K_4^3 with the hyperedge each edge realizes.
struct K43Variant {
  MultiGraph graph;
  std::map<EdgeId, EdgeId> origin;
};

/// Every hyperedge {x,y,z} of K_4^3 becomes a two-edge path (three choices of
/// middle vertex) or a Y with a cross centre; the 256 combinations collapse
/// to 19 isomorphism classes. The first representative of each class in
/// enumeration order is kept.
inline std::vector<K43Variant> k43_variants() {
  const Hypergraph k43 = complete_hypergraph(4, 3);
  const auto& edges = k43.edges();
  std::vector<K43Variant> out;
  std::vector<std::size_t> choice(edges.size(), 0);
  while (true) {
    K43Variant v;
    for (const auto& x : k43.vertices()) v.graph.add_vertex(x.id);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto& t = edges[e];
      if (choice[e] < 3) {
        const auto& mid = t.members[choice[e]];
        for (const auto& other : t.members) {
          if (other == mid) continue;
          const EdgeId id = t.id + "." + std::min(mid, other) + std::max(mid, other);
          v.graph.add_edge(id, mid, other);
          v.origin.emplace(id, t.id);
        }
      } else {
        const VertexId center = "X" + t.id;
        v.graph.add_vertex(center, VertexLabel::cross);
        for (const auto& m : t.members) {
          const EdgeId id = t.id + "/" + m;
          v.graph.add_edge(id, center, m);
          v.origin.emplace(id, t.id);
        }
      }
    }
    const bool fresh = std::none_of(out.begin(), out.end(), [&](const K43Variant& w) {
      return is_isomorphic(w.graph.as_hypergraph(), v.graph.as_hypergraph());
    });
    if (fresh) out.push_back(std::move(v));
    std::size_t e = choice.size();
    while (e > 0) {
      --e;
      if (++choice[e] < 4) break;
      choice[e] = 0;
      if (e == 0) return out;
    }
  }
}

inline std::vector<MultiGraph> variants_k43() {
  std::vector<MultiGraph> out;
  for (auto& v : k43_variants()) out.push_back(std::move(v.graph));
  return out;
}

}  // namespace hyperimmerse
