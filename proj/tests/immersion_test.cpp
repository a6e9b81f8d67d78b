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

#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "hyperimmerse/immersion.hpp"
#include "hyperimmerse/lattice.hpp"
#include "hyperimmerse/text_format.hpp"
#include "oracles.hpp"

using namespace hyperimmerse;

namespace {

std::size_t active_edges(const Hypergraph& g) {
  std::size_t k = 0;
  for (const auto& e : g.edges()) k += e.size() >= 2;
  return k;
}

}  // namespace

TEST(VerifyImmersion, AcceptsAndRejects) {
  auto h = parse_hypergraph("v a\nv b\nv c\ne x a b c\n");
  auto g = parse_hypergraph("v p\nv q\nv r\nv s x\ne f p q\ne g q r\ne k r s\n");
  ImmersionMap ok{{{"a", "p"}, {"b", "q"}, {"c", "r"}}, {{"x", {"f", "g"}}}};
  EXPECT_TRUE(verify_immersion(h, g, ok));
  auto bad = ok;
  bad.vertex_map["c"] = "q";
  EXPECT_FALSE(verify_immersion(h, g, bad));  // not injective
  bad = ok;
  bad.edge_map["x"] = {"f"};
  EXPECT_FALSE(verify_immersion(h, g, bad));  // misses r
  bad = ok;
  bad.edge_map["x"] = {"f", "k"};
  EXPECT_FALSE(verify_immersion(h, g, bad));  // disconnected
  auto cross = ok;
  cross.vertex_map["c"] = "s";
  cross.edge_map["x"] = {"f", "g", "k"};
  EXPECT_TRUE(verify_immersion(h, g, cross));
  EXPECT_FALSE(verify_immersion(h, g, cross, true));
  bad = ok;
  bad.vertex_map["z"] = "p";
  EXPECT_THROW(verify_immersion(h, g, bad), std::invalid_argument);
}

TEST(VerifyImmersion, SharedEdgeIsRejected) {
  auto h = parse_hypergraph("v a\nv b\ne x a b\ne y a b\n");
  auto g = parse_hypergraph("v p\nv q\ne f p q\n");
  EXPECT_FALSE(verify_immersion(h, g, ImmersionMap{{{"a", "p"}, {"b", "q"}}, {{"x", {"f"}}, {"y", {"f"}}}}));
}

TEST(BruteForce, SingleEdgeIntoEdge) {
  auto r = find_immersion_bruteforce(complete_hypergraph(2, 2), parse_hypergraph("v a\nv b\ne e a b\n"));
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_TRUE(verify_immersion(complete_hypergraph(2, 2), parse_hypergraph("v a\nv b\ne e a b\n"), *r.witness));
}

TEST(BruteForce, AgreesWithExhaustiveOracle) {
  std::mt19937_64 rng(31);
  int yes = 0, no = 0;
  for (int t = 0; t < 400; ++t) {
    auto h = oracle::random_hypergraph(rng, 4, 3, 3);
    auto g = oracle::random_hypergraph(rng, 5, 6, 4);
    const bool expect = oracle::immerses(h, g);
    auto r = find_immersion_bruteforce(h, g);
    ASSERT_NE(r.status, SearchStatus::budget_exhausted);
    ASSERT_EQ(r.status == SearchStatus::found, expect) << serialize(h) << "--\n" << serialize(g);
    if (expect) {
      ++yes;
      EXPECT_TRUE(verify_immersion(h, g, *r.witness));
      EXPECT_LE(h.vertex_count(), g.vertex_count());
      EXPECT_LE(active_edges(h), active_edges(g));
    } else {
      ++no;
    }
  }
  EXPECT_GT(yes, 50);
  EXPECT_GT(no, 50);
}

TEST(BruteForce, RestrictedAgreesWithExhaustiveOracle) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 200; ++t) {
    auto h = oracle::random_hypergraph(rng, 4, 3, 2, 2);
    auto g0 = oracle::random_hypergraph(rng, 5, 6, 2, 2);
    Hypergraph g;
    for (const auto& v : g0.vertices()) g.add_vertex(v.id, (rng() % 3 == 0) ? VertexLabel::cross : VertexLabel::normal);
    for (const auto& e : g0.edges()) g.add_edge(e.id, e.members);
    SearchOptions o;
    o.restricted = true;
    auto r = find_immersion_bruteforce(h, g, o);
    ASSERT_EQ(r.status == SearchStatus::found, oracle::immerses(h, g, true));
    if (r.witness) {
      EXPECT_TRUE(verify_immersion(h, g, *r.witness, true));
    }
  }
}

TEST(BruteForce, ParallelMatchesSerialWitness) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    auto h = oracle::random_hypergraph(rng, 4, 4, 3);
    auto g = oracle::random_hypergraph(rng, 6, 7, 4);
    SearchOptions serial, parallel;
    parallel.jobs = 4;
    auto a = find_immersion_bruteforce(h, g, serial);
    auto b = find_immersion_bruteforce(h, g, parallel);
    ASSERT_EQ(a.status, b.status);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(BruteForce, CompleteGraphsAreIncomparable) {
  const auto k42 = complete_hypergraph(4, 2), k43 = complete_hypergraph(4, 3);
  EXPECT_EQ(find_immersion_bruteforce(k42, k43).status, SearchStatus::absent);
  EXPECT_EQ(find_immersion_bruteforce(k43, k42).status, SearchStatus::absent);
}

TEST(BruteForce, BudgetExhaustionIsDistinct) {
  SearchOptions o;
  o.budget = 5;
  auto r = find_immersion_bruteforce(complete_hypergraph(4, 3), honeycomb_patch(2).as_hypergraph(), o);
  EXPECT_EQ(r.status, SearchStatus::budget_exhausted);
  EXPECT_FALSE(r.witness);
  EXPECT_STREQ(status_word(r.status), "unknown");
}

TEST(BruteForce, BudgetFromEnvironment) {
  ::setenv("HYPERIMMERSE_BUDGET", "1234", 1);
  EXPECT_EQ(default_budget(), 1234u);
  ::setenv("HYPERIMMERSE_BUDGET", "junk", 1);
  EXPECT_EQ(default_budget(), 10'000'000u);
  ::unsetenv("HYPERIMMERSE_BUDGET");
  EXPECT_EQ(default_budget(), 10'000'000u);
}

TEST(PartialOrder, Reflexive) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    auto g = oracle::random_hypergraph(rng, 5, 5, 3);
    auto r = find_immersion_bruteforce(g, g);
    ASSERT_EQ(r.status, SearchStatus::found);
    EXPECT_TRUE(verify_immersion(g, g, *r.witness));
  }
}

TEST(PartialOrder, Transitive) {
  std::mt19937_64 rng(47);
  int chains = 0;
  for (int t = 0; t < 400; ++t) {
    auto a = oracle::random_hypergraph(rng, 3, 2, 3);
    auto b = oracle::random_hypergraph(rng, 4, 4, 3);
    auto c = oracle::random_hypergraph(rng, 5, 6, 4);
    if (find_immersion_bruteforce(a, b).status != SearchStatus::found) continue;
    if (find_immersion_bruteforce(b, c).status != SearchStatus::found) continue;
    ++chains;
    EXPECT_EQ(find_immersion_bruteforce(a, c).status, SearchStatus::found);
  }
  EXPECT_GT(chains, 20);
}

TEST(RestrictedGraph, CrossVerticesOnlyRelay) {
  MultiGraph f;
  f.add_vertex("a");
  f.add_vertex("b");
  f.add_edge("ab", "a", "b");
  MultiGraph g;
  g.add_vertex("p");
  g.add_vertex("X", VertexLabel::cross);
  g.add_edge("pX", "p", "X");
  EXPECT_EQ(restricted_graph_immersion(f, g).status, SearchStatus::absent);
  EXPECT_EQ(find_immersion_bruteforce(f.as_hypergraph(), g.as_hypergraph()).status, SearchStatus::found);
}
