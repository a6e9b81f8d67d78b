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

// Criteria for immersing the complete uniform hypergraphs K_n^r, n <= 4.
//
//   K_n^1   at least n vertices
//   K_2^2   some edge of size >= 2
//   K_3^2   a Berge cycle of length >= 3, or two edge-disjoint length-2
//           Berge cycles sharing exactly one vertex
//   K_3^3   a Berge-connected component with >= 3 vertices
//   K_4^4   a Berge-connected component with >= 4 vertices
//   K_4^2   some pairs-dewetting of G contains an immersed K_4
//   K_4^3   some maximal pairs-and-triples dewetting of G admits a restricted
//           immersion of one of the factor-graph variants of K_4^3
//
// Witnesses are immersions of complete_hypergraph(n, r) into G.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperimmerse/dewetting.hpp"
#include "hyperimmerse/hypergraph.hpp"
#include "hyperimmerse/immersion.hpp"
#include "hyperimmerse/isomorphism.hpp"
#include "hyperimmerse/lattice.hpp"
#include "hyperimmerse/ordinary.hpp"

namespace hyperimmerse {

inline bool knr_supported(int n, int r) { return n >= 1 && n <= 4 && r >= 1 && r <= n; }

namespace detail {

inline Hypergraph without_singletons(const Hypergraph& g) {
  Hypergraph out;
  for (const auto& v : g.vertices()) out.add_vertex(v.id, v.label);
  for (const auto& e : g.edges())
    if (e.size() >= 2) out.add_edge(e.id, e.members);
  return out;
}

// A length-2 Berge cycle: two distinct edges both containing u and v.
struct TwoCycle {
  VertexId u, v;
  EdgeId e1, e2;
};

inline std::optional<ImmersionMap> k32_from_two_cycles(const Hypergraph& g) {
  std::vector<TwoCycle> cycles;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      std::vector<VertexId> shared;
      std::set_intersection(es[i].members.begin(), es[i].members.end(), es[j].members.begin(), es[j].members.end(),
                            std::back_inserter(shared));
      for (std::size_t a = 0; a < shared.size(); ++a)
        for (std::size_t b = a + 1; b < shared.size(); ++b) cycles.push_back({shared[a], shared[b], es[i].id, es[j].id});
    }
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const auto& p = cycles[i];
      const auto& q = cycles[j];
      std::set<EdgeId> ids{p.e1, p.e2, q.e1, q.e2};
      if (ids.size() != 4) continue;
      std::set<VertexId> vs{p.u, p.v, q.u, q.v};
      if (vs.size() != 3) continue;
      const VertexId hub = (p.u == q.u || p.u == q.v) ? p.u : p.v;
      const VertexId x = p.u == hub ? p.v : p.u;
      const VertexId y = q.u == hub ? q.v : q.u;
      ImmersionMap w;
      w.vertex_map = {{"a", hub}, {"b", x}, {"c", y}};
      w.edge_map["eab"] = {p.e1};
      w.edge_map["eac"] = {q.e1};
      std::vector<EdgeId> bc{p.e2, q.e2};
      std::sort(bc.begin(), bc.end());
      w.edge_map["ebc"] = bc;
      return w;
    }
  return std::nullopt;
}

// Spanning a Berge-connected component: the first n vertices reached by a
// breadth-first walk over edges, and the edges that reached them.
inline std::optional<ImmersionMap> connected_witness(const Hypergraph& g, int n) {
  const Hypergraph k = complete_hypergraph(n, n);
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < static_cast<std::size_t>(n)) continue;
    std::vector<VertexId> reached{comp.front()};
    std::set<VertexId> seen{comp.front()};
    std::set<EdgeId> used;
    std::vector<EdgeId> taken;
    for (std::size_t head = 0; head < reached.size() && reached.size() < static_cast<std::size_t>(n); ++head) {
      for (const auto& e : g.edges()) {
        if (reached.size() >= static_cast<std::size_t>(n)) break;
        if (used.count(e.id) || !e.contains(reached[head])) continue;
        bool grows = false;
        for (const auto& m : e.members) grows = grows || !seen.count(m);
        if (!grows) continue;
        used.insert(e.id);
        taken.push_back(e.id);
        for (const auto& m : e.members)
          if (seen.insert(m).second) reached.push_back(m);
      }
    }
    ImmersionMap w;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) w.vertex_map[k.vertices()[i].id] = reached[i];
    std::sort(taken.begin(), taken.end());
    w.edge_map[k.edges().front().id] = taken;
    return w;
  }
  return std::nullopt;
}

}  // namespace detail

/// Decides whether K_n^r immerses in g. budget bounds the work of the K_4^2
/// and K_4^3 rows (members examined plus nodes of the inner searches).
/// Throws std::invalid_argument for rows outside 1 <= r <= n <= 4.
inline ImmersionResult check_knr(const Hypergraph& g, int n, int r, const SearchOptions& options = {}) {
  if (!knr_supported(n, r)) {
    throw std::invalid_argument("unsupported row K_" + std::to_string(n) + "^" + std::to_string(r));
  }
  const auto start = std::chrono::steady_clock::now();
  ImmersionResult result;
  auto finish = [&]() -> ImmersionResult& {
    result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.witness && !verify_immersion(complete_hypergraph(n, r), g, *result.witness))
      throw std::logic_error("check_knr produced an invalid witness");
    return result;
  };
  auto yes = [&](ImmersionMap w) -> ImmersionResult& {
    result.status = SearchStatus::found;
    result.witness = std::move(w);
    return finish();
  };
  auto no = [&]() -> ImmersionResult& {
    result.status = SearchStatus::absent;
    return finish();
  };
  const Hypergraph h = complete_hypergraph(n, r);

  if (r == 1) {
    if (g.vertex_count() < static_cast<std::size_t>(n)) return no();
    ImmersionMap w;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) w.vertex_map[h.vertices()[i].id] = g.vertices()[i].id;
    for (const auto& e : h.edges()) w.edge_map[e.id] = {};
    return yes(std::move(w));
  }

  if (n == 2) {
    for (const auto& e : g.edges())
      if (e.size() >= 2) return yes(ImmersionMap{{{"a", e.members[0]}, {"b", e.members[1]}}, {{"eab", {e.id}}}});
    return no();
  }

  if (n == 3 && r == 2) {
    if (auto c = find_berge_cycle(g, 3)) {
      ImmersionMap w;
      w.vertex_map = {{"a", c->vertices[0]}, {"b", c->vertices[1]}, {"c", c->vertices[2]}};
      w.edge_map["eab"] = {c->edges[0]};
      w.edge_map["ebc"] = {c->edges[1]};
      std::vector<EdgeId> rest(c->edges.begin() + 2, c->edges.end());
      std::sort(rest.begin(), rest.end());
      w.edge_map["eac"] = rest;
      return yes(std::move(w));
    }
    if (auto w = detail::k32_from_two_cycles(g)) return yes(std::move(*w));
    return no();
  }

  if (r == n) {
    if (auto w = detail::connected_witness(g, n)) return yes(std::move(*w));
    return no();
  }

  const Hypergraph core = detail::without_singletons(g);
  std::uint64_t spent = 0;
  bool exhausted = false;
  auto remaining = [&]() { return options.budget > spent ? options.budget - spent : 0; };

  if (r == 2) {
    std::optional<ImmersionMap> found;
    for_each_dewetting(
        core, DewetMode::pairs,
        [&](const Dewetting& d) {
          ++result.stats.members_examined;
          if (++spent > options.budget) {
            exhausted = true;
            return true;
          }
          if (!k4_immersion_multigraph(d.graph)) return false;
          if (auto sub = find_k4_subdivision(d.graph)) {
            ImmersionMap w;
            for (std::size_t i = 0; i < 4; ++i) w.vertex_map[h.vertices()[i].id] = sub->branch[i];
            for (const auto& [ij, path] : sub->paths)
              w.edge_map["e" + h.vertices()[static_cast<std::size_t>(ij.first)].id +
                         h.vertices()[static_cast<std::size_t>(ij.second)].id] = path;
            found = std::move(w);
            return true;
          }
          SearchOptions inner = options;
          inner.restricted = false;
          inner.budget = remaining();
          auto r2 = find_immersion_bruteforce(h, d.graph.as_hypergraph(), inner);
          spent += r2.stats.nodes;
          if (r2.status == SearchStatus::budget_exhausted) {
            exhausted = true;
            return true;
          }
          // test_k4 can say yes on a member with no K4 immersion; the search is exact.
          if (r2.status == SearchStatus::absent) return false;
          found = r2.witness;
          return true;
        },
        DewetFilter{4, 3});
    result.stats.nodes = std::min(spent, options.budget);
    if (found) return yes(std::move(*found));
    if (exhausted) {
      result.status = SearchStatus::budget_exhausted;
      return finish();
    }
    return no();
  }

  // K_4^3
  const auto variants = k43_variants();
  std::optional<ImmersionMap> found;
  for_each_maximal_dewetting(
      core,
      [&](const Dewetting& d) {
        ++result.stats.members_examined;
        if (++spent > options.budget) {
          exhausted = true;
          return true;
        }
        for (const auto& f : variants) {
          SearchOptions inner = options;
          inner.budget = remaining();
          if (inner.budget == 0) {
            exhausted = true;
            return true;
          }
          auto r3 = restricted_graph_immersion(f.graph, d.graph, inner);
          spent += r3.stats.nodes;
          if (r3.status == SearchStatus::budget_exhausted) {
            exhausted = true;
            return true;
          }
          if (r3.status != SearchStatus::found) continue;
          ImmersionMap w;
          for (const auto& v : h.vertices()) w.vertex_map[v.id] = r3.witness->vertex_map.at(v.id);
          std::map<EdgeId, std::set<EdgeId>> images;
          for (const auto& e : h.edges()) images[e.id];
          for (const auto& [fe, ids] : r3.witness->edge_map)
            for (const auto& id : ids) images[f.origin.at(fe)].insert(d.origin.at(id));
          for (const auto& [he, ids] : images) w.edge_map[he] = {ids.begin(), ids.end()};
          found = std::move(w);
          return true;
        }
        return false;
      },
      DewetFilter{4, 3});
  result.stats.nodes = std::min(spent, options.budget);
  if (found) return yes(std::move(*found));
  if (exhausted) {
    result.status = SearchStatus::budget_exhausted;
    return finish();
  }
  return no();
}

/// Size of the dewetting family check_knr walks for the row, or 1 for rows
/// decided directly.
inline std::uint64_t knr_family_size(const Hypergraph& g, int n, int r) {
  if (n == 4 && r == 2) return count_dewettings(detail::without_singletons(g), DewetMode::pairs);
  if (n == 4 && r == 3) return count_maximal_dewettings(detail::without_singletons(g));
  return 1;
}

/// (n, r) with h isomorphic to K_n^r, n <= 4, plus the isomorphism from h to
/// complete_hypergraph(n, r).
struct KnrMatch {
  int n = 0;
  int r = 0;
  std::map<VertexId, VertexId> to_complete;
};

inline std::optional<KnrMatch> recognize_knr(const Hypergraph& h) {
  const auto n = static_cast<int>(h.vertex_count());
  if (n < 1 || n > 4 || h.edge_count() == 0) return std::nullopt;
  const auto r = static_cast<int>(h.edges().front().size());
  if (!knr_supported(n, r)) return std::nullopt;
  auto iso = find_isomorphism(h, complete_hypergraph(n, r));
  if (!iso) return std::nullopt;
  return KnrMatch{n, r, *iso};
}

/// Rewrites a witness for complete_hypergraph(n, r) into one for h.
inline ImmersionMap witness_for(const Hypergraph& h, const KnrMatch& match, const ImmersionMap& w) {
  const Hypergraph k = complete_hypergraph(match.n, match.r);
  ImmersionMap out;
  for (const auto& [hv, kv] : match.to_complete) out.vertex_map[hv] = w.vertex_map.at(kv);
  // Edges of K_n^r are determined by their member sets.
  std::map<std::vector<VertexId>, EdgeId> by_members;
  for (const auto& e : k.edges()) by_members[e.members] = e.id;
  for (const auto& e : h.edges()) {
    std::vector<VertexId> m;
    for (const auto& v : e.members) m.push_back(match.to_complete.at(v));
    std::sort(m.begin(), m.end());
    out.edge_map[e.id] = w.edge_map.at(by_members.at(m));
  }
  return out;
}

}  // namespace hyperimmerse
