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

// Finite patches of the lattices used as network topologies.
//
// Vertex id schemes:
//   honeycomb      x<Q>y<R>  where (Q,R) is the sum of the axial coordinates
//                            of the three hexagonal cells meeting at the corner
//   double cycle   v<i>      ring position, zero padded
//   cuboid         l<k>c<j>  layer k along the axis, corner j of the square
//   complete       a, b, c, ...

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperimmerse/hypergraph.hpp"
#include "hyperimmerse/multigraph.hpp"

namespace hyperimmerse {

namespace detail {

inline std::string padded(std::size_t value, std::size_t count) {
  std::string digits = std::to_string(value);
  const std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
  return std::string(width - std::min(width, digits.size()), '0') + digits;
}

struct Hex {
  int q;
  int r;
  auto operator<=>(const Hex&) const = default;
};

constexpr std::array<Hex, 6> kHexDirections{{{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

inline std::vector<Hex> hex_cells(int rings) {
  if (rings < 1) throw std::invalid_argument("rings must be at least 1");
  std::vector<Hex> cells;
  const int radius = rings - 1;
  for (int q = -radius; q <= radius; ++q)
    for (int r = -radius; r <= radius; ++r)
      if (std::max({std::abs(q), std::abs(r), std::abs(q + r)}) <= radius) cells.push_back({q, r});
  return cells;
}

inline VertexId hex_corner(const Hex& cell, std::size_t i) {
  const Hex& a = kHexDirections[i];
  const Hex& b = kHexDirections[(i + 1) % 6];
  return "x" + std::to_string(3 * cell.q + a.q + b.q) + "y" + std::to_string(3 * cell.r + a.r + b.r);
}

}  // namespace detail

/// Hexagonal patch of `rings` concentric layers of cells, simple edges.
inline MultiGraph honeycomb_patch(int rings) {
  std::set<VertexId> vertices;
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const auto& cell : detail::hex_cells(rings)) {
    for (std::size_t i = 0; i < 6; ++i) {
      auto a = detail::hex_corner(cell, i);
      auto b = detail::hex_corner(cell, (i + 1) % 6);
      vertices.insert(a);
      if (b < a) std::swap(a, b);
      pairs.emplace(a, b);
    }
  }
  MultiGraph g;
  for (const auto& v : vertices) g.add_vertex(v);
  std::size_t k = 0;
  for (const auto& [a, b] : pairs) g.add_edge("e" + detail::padded(k++, pairs.size()), a, b);
  return g;
}

/// Same corners as honeycomb_patch, one size-6 hyperedge per cell.
inline Hypergraph honeycomb_hyperlattice_patch(int rings) {
  const auto cells = detail::hex_cells(rings);
  Hypergraph g;
  std::set<VertexId> vertices;
  for (const auto& cell : cells)
    for (std::size_t i = 0; i < 6; ++i) vertices.insert(detail::hex_corner(cell, i));
  for (const auto& v : vertices) g.add_vertex(v);
  std::size_t k = 0;
  for (const auto& cell : cells) {
    std::vector<VertexId> corners;
    for (std::size_t i = 0; i < 6; ++i) corners.push_back(detail::hex_corner(cell, i));
    g.add_edge("h" + detail::padded(k++, cells.size()), corners);
  }
  return g;
}

/// Ring of n vertices with every adjacent pair joined by two parallel edges.
inline MultiGraph double_edge_cycle(int n) {
  if (n < 3) throw std::invalid_argument("double_edge_cycle needs n >= 3");
  const auto count = static_cast<std::size_t>(n);
  MultiGraph g;
  auto name = [&](std::size_t i) { return "v" + detail::padded(i, count); };
  for (std::size_t i = 0; i < count; ++i) g.add_vertex(name(i));
  for (std::size_t i = 0; i < count; ++i) {
    const auto tag = "e" + detail::padded(i, count);
    g.add_edge(tag + "a", name(i), name((i + 1) % count));
    g.add_edge(tag + "b", name(i), name((i + 1) % count));
  }
  return g;
}

enum class CuboidMode { full, alternating };

/// Square cross-section extruded `length` cells. Face j of cell k joins
/// corners j and j+1 (mod 4) of layers k and k+1. The full lattice fills all
/// four side faces of every cell. The alternating lattice keeps one face from
/// each opposite pair {0,2}, {1,3}: cell k uses faces k mod 4 and (k+3) mod 4,
/// so each face position is filled in two consecutive cells and then left
/// empty for two.
inline Hypergraph cuboid_lattice(int length, CuboidMode mode) {
  if (length < 1) throw std::invalid_argument("cuboid length must be at least 1");
  const auto cells = static_cast<std::size_t>(length);
  Hypergraph g;
  auto name = [&](std::size_t layer, std::size_t corner) {
    return "l" + detail::padded(layer, cells + 1) + "c" + std::to_string(corner % 4);
  };
  for (std::size_t k = 0; k <= cells; ++k)
    for (std::size_t j = 0; j < 4; ++j) g.add_vertex(name(k, j));
  for (std::size_t k = 0; k < cells; ++k) {
    std::vector<std::size_t> faces;
    if (mode == CuboidMode::full) faces = {0, 1, 2, 3};
    else faces = {k % 4, (k + 3) % 4};
    std::sort(faces.begin(), faces.end());
    for (std::size_t j : faces)
      g.add_edge("f" + detail::padded(k, cells) + "_" + std::to_string(j),
                 {name(k, j), name(k, j + 1), name(k + 1, j), name(k + 1, j + 1)});
  }
  return g;
}

/// Complete r-uniform hypergraph K_n^r. Edge ids are "e" followed by the
/// member ids, e.g. eabc.
inline Hypergraph complete_hypergraph(int n, int r) {
  if (n < 1 || r < 1 || r > n) throw std::invalid_argument("complete_hypergraph needs 1 <= r <= n");
  if (n > 16) throw std::invalid_argument("complete_hypergraph supports at most 16 vertices");
  const auto count = static_cast<std::size_t>(n);
  std::vector<VertexId> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  Hypergraph g;
  for (const auto& v : names) g.add_vertex(v);
  for (unsigned mask = 0; mask < (1u << count); ++mask) {
    if (std::popcount(mask) != r) continue;
    std::vector<VertexId> members;
    std::string id = "e";
    for (std::size_t i = 0; i < count; ++i)
      if (mask >> i & 1u) {
        members.push_back(names[i]);
        id += names[i];
      }
    g.add_edge(id, members);
  }
  return g;
}

}  // namespace hyperimmerse
