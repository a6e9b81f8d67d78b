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
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hyperimmerse/hypergraph.hpp"

namespace hyperimmerse {

namespace detail {

// Per-vertex invariant: label, then the sorted sizes of incident edges.
inline std::vector<std::vector<int>> vertex_invariants(const IndexedHypergraph& g) {
  std::vector<std::vector<int>> inv(g.vertex_count);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    inv[v].push_back(g.cross[v]);
    for (int e : g.incident[v]) inv[v].push_back(static_cast<int>(g.members[static_cast<std::size_t>(e)].size()));
    std::sort(inv[v].begin() + 1, inv[v].end());
  }
  return inv;
}

// co[u][w] = number of edges containing both u and w (diagonal: degree).
inline std::vector<std::vector<int>> co_occurrence(const IndexedHypergraph& g) {
  std::vector<std::vector<int>> co(g.vertex_count, std::vector<int>(g.vertex_count, 0));
  for (const auto& m : g.members)
    for (int a : m)
      for (int b : m) ++co[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  return co;
}

inline std::vector<std::vector<int>> sorted_edge_list(const std::vector<std::vector<int>>& members,
                                                      const std::vector<int>& relabel) {
  std::vector<std::vector<int>> out;
  out.reserve(members.size());
  for (const auto& m : members) {
    std::vector<int> r;
    r.reserve(m.size());
    for (int v : m) r.push_back(relabel[static_cast<std::size_t>(v)]);
    std::sort(r.begin(), r.end());
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct IsomorphismSearch {
  const IndexedHypergraph& a;
  const IndexedHypergraph& b;
  std::vector<std::vector<int>> inv_a, inv_b, co_a, co_b;
  std::vector<std::vector<int>> target_edges;
  std::vector<int> order;
  std::vector<int> map_ab;
  std::vector<char> used_b;

  IsomorphismSearch(const IndexedHypergraph& x, const IndexedHypergraph& y)
      : a(x), b(y), inv_a(vertex_invariants(x)), inv_b(vertex_invariants(y)), co_a(co_occurrence(x)),
        co_b(co_occurrence(y)), map_ab(x.vertex_count, -1), used_b(y.vertex_count, 0) {
    std::vector<int> identity(y.vertex_count);
    std::iota(identity.begin(), identity.end(), 0);
    target_edges = sorted_edge_list(y.members, identity);
    order.resize(x.vertex_count);
    std::iota(order.begin(), order.end(), 0);
    // High-degree vertices first: their co-occurrence rows prune the most.
    std::stable_sort(order.begin(), order.end(), [&](int p, int q) {
      return inv_a[static_cast<std::size_t>(p)].size() > inv_a[static_cast<std::size_t>(q)].size();
    });
  }

  bool run(std::size_t k) {
    if (k == order.size()) return sorted_edge_list(a.members, map_ab) == target_edges;
    const int u = order[k];
    for (std::size_t w = 0; w < b.vertex_count; ++w) {
      if (used_b[w] || inv_a[static_cast<std::size_t>(u)] != inv_b[w]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const int up = order[j];
        const int wp = map_ab[static_cast<std::size_t>(up)];
        ok = co_a[static_cast<std::size_t>(u)][static_cast<std::size_t>(up)] ==
             co_b[w][static_cast<std::size_t>(wp)];
      }
      if (!ok) continue;
      map_ab[static_cast<std::size_t>(u)] = static_cast<int>(w);
      used_b[w] = 1;
      if (run(k + 1)) return true;
      used_b[w] = 0;
      map_ab[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  }
};

}  // namespace detail

/// Vertex bijection h1 -> h2 mapping the edge multiset of h1 onto that of h2
/// and preserving vertex labels, if one exists. Intended for desk-scale inputs.
inline std::optional<std::map<VertexId, VertexId>> find_isomorphism(const Hypergraph& h1, const Hypergraph& h2) {
  if (h1.vertex_count() != h2.vertex_count() || h1.edge_count() != h2.edge_count() ||
      h1.total_incidence() != h2.total_incidence()) {
    return std::nullopt;
  }
  IndexedHypergraph a(h1), b(h2);
  detail::IsomorphismSearch search(a, b);
  {
    auto ia = search.inv_a, ib = search.inv_b;
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    if (ia != ib) return std::nullopt;
  }
  if (!search.run(0)) return std::nullopt;
  std::map<VertexId, VertexId> out;
  for (std::size_t v = 0; v < a.vertex_count; ++v)
    out.emplace(h1.vertices()[v].id, h2.vertices()[static_cast<std::size_t>(search.map_ab[v])].id);
  return out;
}

inline bool is_isomorphic(const Hypergraph& h1, const Hypergraph& h2) { return find_isomorphism(h1, h2).has_value(); }

/// Isomorphism-invariant key: equal keys iff the hypergraphs are isomorphic.
/// Minimizes the relabelled edge list over all invariant-respecting vertex
/// orders, so only suitable for small vertex counts.
inline std::vector<std::int64_t> canonical_key(const Hypergraph& g) {
  IndexedHypergraph ig(g);
  const std::size_t n = ig.vertex_count;
  auto inv = detail::vertex_invariants(ig);
  std::vector<int> by_inv(n);
  std::iota(by_inv.begin(), by_inv.end(), 0);
  std::stable_sort(by_inv.begin(), by_inv.end(),
                   [&](int p, int q) { return inv[static_cast<std::size_t>(p)] < inv[static_cast<std::size_t>(q)]; });
  // Cells of equal invariant; permute within cells only.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::size_t budget = 1;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && inv[static_cast<std::size_t>(by_inv[j])] == inv[static_cast<std::size_t>(by_inv[i])]) ++j;
    cells.emplace_back(i, j);
    for (std::size_t f = 2; f <= j - i; ++f) budget *= f;
    if (budget > 5'000'000) throw std::invalid_argument("canonical_key: hypergraph too symmetric for exhaustive labelling");
    i = j;
  }
  std::vector<std::int64_t> header;
  header.push_back(static_cast<std::int64_t>(n));
  for (int v : by_inv) {
    header.push_back(-1);
    for (int x : inv[static_cast<std::size_t>(v)]) header.push_back(x);
  }
  std::vector<std::vector<int>> best;
  bool have_best = false;
  std::vector<int> slots = by_inv;  // position -> original vertex
  std::vector<int> relabel(n);
  for (auto& [lo, hi] : cells) std::sort(slots.begin() + static_cast<std::ptrdiff_t>(lo), slots.begin() + static_cast<std::ptrdiff_t>(hi));
  while (true) {
    for (std::size_t pos = 0; pos < n; ++pos) relabel[static_cast<std::size_t>(slots[pos])] = static_cast<int>(pos);
    auto edges = detail::sorted_edge_list(ig.members, relabel);
    if (!have_best || edges < best) {
      best = std::move(edges);
      have_best = true;
    }
    // Odometer over per-cell permutations.
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [lo, hi] = cells[c];
      if (std::next_permutation(slots.begin() + static_cast<std::ptrdiff_t>(lo), slots.begin() + static_cast<std::ptrdiff_t>(hi))) break;
    }
    if (c == cells.size()) break;
  }
  for (const auto& e : best) {
    header.push_back(-2);
    for (int v : e) header.push_back(v);
  }
  return header;
}

}  // namespace hyperimmerse
