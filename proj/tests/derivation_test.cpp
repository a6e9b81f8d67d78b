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

#include <random>

#include <gtest/gtest.h>

#include "hyperimmerse/derivation.hpp"
#include "hyperimmerse/isomorphism.hpp"
#include "hyperimmerse/lattice.hpp"
#include "hyperimmerse/text_format.hpp"
#include "oracles.hpp"

using namespace hyperimmerse;

namespace {

// The replayed hypergraph, restricted to the image of vertex_map and
// renamed back to H's ids, must have H's edge multiset.
bool replays_to(const Hypergraph& h, const Hypergraph& g, const DerivationSequence& seq) {
  const Hypergraph x = replay(g, seq);
  std::map<VertexId, VertexId> back;
  for (const auto& [hv, xv] : seq.vertex_map) back[xv] = hv;
  Hypergraph y;
  for (const auto& v : h.vertices()) y.add_vertex(v.id, v.label);
  int k = 0;
  for (const auto& e : x.edges()) {
    std::vector<VertexId> m;
    for (const auto& v : e.members) {
      if (!back.count(v)) return false;
      m.push_back(back.at(v));
    }
    y.add_edge("d" + std::to_string(k++), m);
  }
  return oracle::isomorphic(h, y) && y.edge_count() == h.edge_count();
}

}  // namespace

TEST(Derivation, PathCoalesceAndDewet) {
  auto g = parse_hypergraph("v a\nv b\nv c\ne e1 a b\ne e2 b c\n");
  auto h = parse_hypergraph("v x\nv y\ne f x y\n");
  DerivationSequence seq{{"a", "b", "c"}, {"e1", "e2"}, {CoalesceStep{"e1", "e2"}, DewetStep{"e1+e2", "b"}}, {{"x", "a"}, {"y", "c"}}};
  EXPECT_TRUE(verify_derivation(h, g, seq));
  seq.vertex_map = {{"x", "a"}, {"y", "b"}};
  EXPECT_FALSE(verify_derivation(h, g, seq));
  seq.steps.pop_back();
  EXPECT_TRUE(derivation_error(h, g, seq).has_value());
  seq.steps = {DewetStep{"e9", "a"}};
  EXPECT_NE(derivation_error(h, g, seq)->find("replay failed"), std::string::npos);
}

TEST(Derivation, InitialSubgraphChecksIds) {
  auto g = parse_hypergraph("v a\nv b\ne e1 a b\n");
  EXPECT_THROW(initial_subgraph(g, DerivationSequence{{"a"}, {"e1"}, {}, {}}), std::invalid_argument);
  EXPECT_THROW(initial_subgraph(g, DerivationSequence{{"q"}, {}, {}, {}}), std::invalid_argument);
}

TEST(Derivation, FromImmersionReplays) {
  std::mt19937_64 rng(53);
  int found = 0;
  for (int t = 0; t < 300; ++t) {
    auto h = oracle::random_hypergraph(rng, 4, 4, 3, 2);
    auto g = oracle::random_hypergraph(rng, 6, 6, 4, 2);
    auto r = find_immersion_bruteforce(h, g);
    if (!r.witness) continue;
    ++found;
    auto seq = immersion_to_derivation(h, g, *r.witness);
    EXPECT_TRUE(verify_derivation(h, g, seq));
    EXPECT_TRUE(replays_to(h, g, seq)) << serialize(h) << "--\n" << serialize(g);
  }
  EXPECT_GT(found, 50);
}

TEST(Derivation, FromImmersionRejectsInvalidWitness) {
  auto h = complete_hypergraph(2, 2);
  auto g = parse_hypergraph("v p\nv q\nv r\ne f p q\n");
  EXPECT_THROW(immersion_to_derivation(h, g, ImmersionMap{{{"a", "p"}, {"b", "r"}}, {{"eab", {"f"}}}}), std::invalid_argument);
}

TEST(Derivation, ExistsIffImmersionExists) {
  std::mt19937_64 rng(59);
  int yes = 0, no = 0;
  for (int t = 0; t < 150; ++t) {
    auto h = oracle::random_hypergraph(rng, 4, 4, 3, 2);
    auto g = oracle::random_hypergraph(rng, 4, 4, 3);
    auto im = find_immersion_bruteforce(h, g);
    auto dv = find_derivation(h, g);
    ASSERT_NE(dv.status, SearchStatus::budget_exhausted);
    ASSERT_EQ(im.status, dv.status) << serialize(h) << "--\n" << serialize(g);
    if (dv.derivation) {
      ++yes;
      EXPECT_TRUE(verify_derivation(h, g, *dv.derivation));
    } else {
      ++no;
    }
  }
  EXPECT_GT(yes, 20);
  EXPECT_GT(no, 20);
}

// A size-1 edge of H immerses onto its image vertex with no edges at all, but
// no sequence of operations makes an edge out of nothing.
TEST(Derivation, SizeOneEdgesOverEdgelessHostHaveImmersionOnly) {
  const auto h = parse_hypergraph("v x\ne e0 x\ne e1 x\n");
  const auto g = parse_hypergraph("v a\nv b\n");
  EXPECT_EQ(find_immersion_bruteforce(h, g).status, SearchStatus::found);
  EXPECT_EQ(find_derivation(h, g).status, SearchStatus::absent);
}
