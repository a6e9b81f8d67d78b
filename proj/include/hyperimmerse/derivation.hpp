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

// Derivations: a subgraph of G followed by coalesce/dewet steps, ending in a
// hypergraph isomorphic to H. Vertices of the final hypergraph outside the
// image of vertex_map must be isolated; they are discarded.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hyperimmerse/hypergraph.hpp"
#include "hyperimmerse/immersion.hpp"
#include "hyperimmerse/isomorphism.hpp"

namespace hyperimmerse {

struct CoalesceStep {
  EdgeId first;
  EdgeId second;
  friend bool operator==(const CoalesceStep&, const CoalesceStep&) = default;
};

struct DewetStep {
  EdgeId edge;
  VertexId vertex;
  friend bool operator==(const DewetStep&, const DewetStep&) = default;
};

using Step = std::variant<CoalesceStep, DewetStep>;

struct DerivationSequence {
  std::vector<VertexId> initial_vertices;
  std::vector<EdgeId> initial_edges;
  std::vector<Step> steps;
  std::map<VertexId, VertexId> vertex_map;  // H vertex -> vertex of the final hypergraph

  friend bool operator==(const DerivationSequence&, const DerivationSequence&) = default;
};

inline Hypergraph apply_step(const Hypergraph& x, const Step& step) {
  if (const auto* c = std::get_if<CoalesceStep>(&step)) return coalesce(x, c->first, c->second);
  const auto& d = std::get<DewetStep>(step);
  return dewet(x, d.edge, d.vertex);
}

/// Id given to the edge created by a coalesce step applied to x.
inline EdgeId coalesced_id(const Hypergraph& x, const CoalesceStep& c) { return x.fresh_edge_id(c.first + "+" + c.second); }

/// The starting subgraph. Throws std::invalid_argument for unknown ids or an
/// edge whose members are not all listed.
inline Hypergraph initial_subgraph(const Hypergraph& g, const DerivationSequence& seq) {
  Hypergraph out;
  for (const auto& v : seq.initial_vertices) {
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex '" + v + "' in initial subgraph");
    out.add_vertex(v, g.label(v));
  }
  for (const auto& id : seq.initial_edges) {
    if (!g.has_edge(id)) throw std::invalid_argument("unknown edge '" + id + "' in initial subgraph");
    out.add_edge(id, g.edge(id).members);
  }
  return out;
}

/// Runs every step; throws std::invalid_argument when a precondition fails.
inline Hypergraph replay(const Hypergraph& g, const DerivationSequence& seq) {
  Hypergraph x = initial_subgraph(g, seq);
  for (const auto& s : seq.steps) x = apply_step(x, s);
  return x;
}

/// Empty when the sequence derives h from g; otherwise a description of the
/// first problem found.
inline std::optional<std::string> derivation_error(const Hypergraph& h, const Hypergraph& g, const DerivationSequence& seq) {
  Hypergraph x;
  try {
    x = replay(g, seq);
  } catch (const std::invalid_argument& e) {
    return std::string("replay failed: ") + e.what();
  }
  if (seq.vertex_map.size() != h.vertex_count()) return std::string("vertex_map does not cover H");
  std::map<VertexId, VertexId> back;
  for (const auto& [hv, xv] : seq.vertex_map) {
    if (!h.has_vertex(hv)) return "vertex_map names unknown H vertex '" + hv + "'";
    if (!x.has_vertex(xv)) return "vertex_map target '" + xv + "' is not in the derived hypergraph";
    if (!back.emplace(xv, hv).second) return "vertex_map is not injective at '" + xv + "'";
    if (h.label(hv) != x.label(xv)) return "label mismatch at '" + hv + "'";
  }
  std::vector<std::vector<VertexId>> derived;
  for (const auto& e : x.edges()) {
    std::vector<VertexId> m;
    for (const auto& v : e.members) {
      auto it = back.find(v);
      if (it == back.end()) return "vertex '" + v + "' outside the image is not isolated";
      m.push_back(it->second);
    }
    std::sort(m.begin(), m.end());
    derived.push_back(std::move(m));
  }
  std::vector<std::vector<VertexId>> wanted;
  for (const auto& e : h.edges()) wanted.push_back(e.members);
  std::sort(derived.begin(), derived.end());
  std::sort(wanted.begin(), wanted.end());
  if (derived != wanted) return std::string("derived edge multiset differs from H");
  return std::nullopt;
}

inline bool verify_derivation(const Hypergraph& h, const Hypergraph& g, const DerivationSequence& seq) {
  return !derivation_error(h, g, seq).has_value();
}

/// Turns an immersion into a derivation: each image is coalesced into one
/// edge, which is then dewetted at every vertex that is not an image end.
/// Throws std::invalid_argument if `a` is not an immersion, or if a singleton
/// H edge has an empty image (no edge can be derived for it).
inline DerivationSequence immersion_to_derivation(const Hypergraph& h, const Hypergraph& g, const ImmersionMap& a) {
  if (!verify_immersion(h, g, a)) throw std::invalid_argument("immersion_to_derivation: not a valid immersion");
  DerivationSequence seq;
  seq.vertex_map = a.vertex_map;
  // An empty image of a size-1 edge borrows any unused edge at its vertex.
  std::map<EdgeId, std::vector<EdgeId>> images = a.edge_map;
  std::set<EdgeId> used;
  for (const auto& [he, ids] : images) used.insert(ids.begin(), ids.end());
  for (auto& [he, ids] : images) {
    if (!ids.empty()) continue;
    const VertexId at = a.vertex_map.at(h.edge(he).members.front());
    for (const auto& ge : g.edges())
      if (!used.count(ge.id) && std::binary_search(ge.members.begin(), ge.members.end(), at)) {
        ids.push_back(ge.id);
        used.insert(ge.id);
        break;
      }
  }
  std::set<VertexId> vertices;
  std::set<EdgeId> edges;
  for (const auto& [hv, gv] : a.vertex_map) vertices.insert(gv);
  for (const auto& [he, ids] : images)
    for (const auto& id : ids) {
      edges.insert(id);
      for (const auto& m : g.edge(id).members) vertices.insert(m);
    }
  seq.initial_vertices.assign(vertices.begin(), vertices.end());
  seq.initial_edges.assign(edges.begin(), edges.end());

  Hypergraph x = initial_subgraph(g, seq);
  for (const auto& e : h.edges()) {
    auto ids = images.at(e.id);
    if (ids.empty()) throw std::invalid_argument("singleton edge '" + e.id + "' has an empty image and cannot be derived");
    while (ids.size() > 1) {
      bool merged = false;
      for (std::size_t i = 0; i < ids.size() && !merged; ++i) {
        for (std::size_t j = i + 1; j < ids.size() && !merged; ++j) {
          const auto& p = x.edge(ids[i]).members;
          const auto& q = x.edge(ids[j]).members;
          std::vector<VertexId> shared;
          std::set_intersection(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(shared));
          if (shared.empty()) continue;
          CoalesceStep step{ids[i], ids[j]};
          const EdgeId produced = coalesced_id(x, step);
          x = apply_step(x, step);
          seq.steps.emplace_back(step);
          ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(j));
          ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(i));
          ids.push_back(produced);
          merged = true;
        }
      }
      if (!merged) throw std::logic_error("image of '" + e.id + "' is not connected");
    }
    std::set<VertexId> ends;
    for (const auto& m : e.members) ends.insert(a.vertex_map.at(m));
    const auto members = x.edge(ids[0]).members;
    for (const auto& m : members) {
      if (ends.count(m)) continue;
      DewetStep step{ids[0], m};
      x = apply_step(x, step);
      seq.steps.emplace_back(step);
    }
  }
  return seq;
}

struct DerivationResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<DerivationSequence> derivation;
  SearchStats stats;
};

namespace detail {

inline Hypergraph without_isolated(const Hypergraph& x) {
  std::set<VertexId> used;
  for (const auto& e : x.edges()) used.insert(e.members.begin(), e.members.end());
  Hypergraph out;
  for (const auto& v : x.vertices())
    if (used.count(v.id)) out.add_vertex(v.id, v.label);
  for (const auto& e : x.edges()) out.add_edge(e.id, e.members);
  return out;
}

// Extends an isomorphism of the non-isolated parts with isolated H vertices
// sent to unused isolated vertices of x carrying the same label.
inline std::optional<std::map<VertexId, VertexId>> place_isolated(const Hypergraph& h, const Hypergraph& x,
                                                                  std::map<VertexId, VertexId> vertex_map) {
  std::set<VertexId> taken;
  for (const auto& [hv, xv] : vertex_map) taken.insert(xv);
  for (const auto& v : h.vertices()) {
    if (vertex_map.count(v.id)) continue;
    auto spare = std::find_if(x.vertices().begin(), x.vertices().end(), [&](const Vertex& w) {
      return !taken.count(w.id) && w.label == v.label && x.degree(w.id) == 0;
    });
    if (spare == x.vertices().end()) return std::nullopt;
    vertex_map.emplace(v.id, spare->id);
    taken.insert(spare->id);
  }
  return vertex_map;
}

// Keeps only the steps and initial edges that contribute to `final_edges`.
inline DerivationSequence trim_derivation(const Hypergraph& g, const std::vector<Step>& steps,
                                          const std::vector<EdgeId>& final_edges,
                                          const std::map<VertexId, VertexId>& vertex_map) {
  std::vector<EdgeId> produced(steps.size());
  {
    Hypergraph x = g;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (const auto* c = std::get_if<CoalesceStep>(&steps[i])) produced[i] = coalesced_id(x, *c);
      else produced[i] = std::get<DewetStep>(steps[i]).edge;
      x = apply_step(x, steps[i]);
    }
  }
  std::set<EdgeId> needed(final_edges.begin(), final_edges.end());
  std::vector<Step> kept;
  for (std::size_t i = steps.size(); i-- > 0;) {
    if (const auto* c = std::get_if<CoalesceStep>(&steps[i])) {
      if (!needed.erase(produced[i])) continue;
      needed.insert(c->first);
      needed.insert(c->second);
      kept.push_back(steps[i]);
    } else if (needed.count(std::get<DewetStep>(steps[i]).edge)) {
      kept.push_back(steps[i]);
    }
  }
  std::reverse(kept.begin(), kept.end());
  DerivationSequence seq;
  seq.steps = std::move(kept);
  seq.vertex_map = vertex_map;
  std::set<VertexId> vertices;
  for (const auto& [hv, gv] : vertex_map) vertices.insert(gv);
  for (const auto& id : needed)
    for (const auto& m : g.edge(id).members) vertices.insert(m);
  seq.initial_vertices.assign(vertices.begin(), vertices.end());
  seq.initial_edges.assign(needed.begin(), needed.end());
  return seq;
}

}  // namespace detail

/// Breadth-first search over coalesce/dewet sequences starting from all of
/// G (dewetting an edge away plays the role of choosing a subgraph), with
/// states deduplicated up to isomorphism. Each expanded state costs one node.
/// Only suitable for a handful of edges.
inline DerivationResult find_derivation(const Hypergraph& h, const Hypergraph& g,
                                        std::uint64_t budget = default_budget()) {
  const auto start = std::chrono::steady_clock::now();
  DerivationResult result;
  auto finish = [&]() -> DerivationResult& {
    result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  };
  if (h.vertex_count() > g.vertex_count()) {
    result.status = SearchStatus::absent;
    return finish();
  }

  const Hypergraph h_core = detail::without_isolated(h);
  const std::size_t h_edges = h.edge_count();
  const std::size_t h_incidence = h.total_incidence();

  struct Node {
    Hypergraph state;
    int parent;
    Step step;
  };
  std::vector<Node> nodes;
  std::set<std::vector<std::int64_t>> seen;
  nodes.push_back({g, -1, DewetStep{}});
  seen.insert(canonical_key(g));

  for (std::size_t q = 0; q < nodes.size(); ++q) {
    if (++result.stats.nodes > budget) {
      result.stats.nodes = budget;
      result.status = SearchStatus::budget_exhausted;
      return finish();
    }
    const Hypergraph cur = nodes[q].state;

    std::optional<std::map<VertexId, VertexId>> vertex_map;
    if (cur.edge_count() == h_edges && cur.total_incidence() == h_incidence)
      if (auto iso = find_isomorphism(h_core, detail::without_isolated(cur)))
        vertex_map = detail::place_isolated(h, cur, *iso);
    if (vertex_map) {
      std::vector<Step> steps;
      for (int i = static_cast<int>(q); nodes[static_cast<std::size_t>(i)].parent >= 0;
           i = nodes[static_cast<std::size_t>(i)].parent)
        steps.push_back(nodes[static_cast<std::size_t>(i)].step);
      std::reverse(steps.begin(), steps.end());

      std::vector<EdgeId> final_edges;
      for (const auto& e : cur.edges()) final_edges.push_back(e.id);
      DerivationSequence seq = detail::trim_derivation(g, steps, final_edges, *vertex_map);
      if (!verify_derivation(h, g, seq)) {
        // Trimming can shift primed ids; the untrimmed sequence is always valid.
        seq.steps = steps;
        seq.initial_edges.clear();
        seq.initial_vertices.clear();
        for (const auto& e : g.edges()) seq.initial_edges.push_back(e.id);
        for (const auto& v : g.vertices()) seq.initial_vertices.push_back(v.id);
      }
      result.status = SearchStatus::found;
      result.derivation = std::move(seq);
      return finish();
    }

    auto push = [&](const Step& step) {
      Hypergraph next = apply_step(cur, step);
      if (next.edge_count() < h_edges || next.total_incidence() < h_incidence) return;
      if (!seen.insert(canonical_key(next)).second) return;
      nodes.push_back({std::move(next), static_cast<int>(q), step});
    };
    const auto& es = cur.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        std::vector<VertexId> shared;
        std::set_intersection(es[i].members.begin(), es[i].members.end(), es[j].members.begin(), es[j].members.end(),
                              std::back_inserter(shared));
        if (!shared.empty()) push(CoalesceStep{es[i].id, es[j].id});
      }
    for (const auto& e : es)
      for (const auto& v : e.members) push(DewetStep{e.id, v});
  }
  result.status = SearchStatus::absent;
  return finish();
}

}  // namespace hyperimmerse
