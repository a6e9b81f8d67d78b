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

// Acceptance run: one PASS/FAIL line per criterion, 1 through 9.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperimmerse/hyperimmerse.hpp"
#include "oracles.hpp"

using namespace hyperimmerse;

namespace {

constexpr double kQuantumTolerance = 1e-9;
constexpr std::uint64_t kDeepBudget = 1'000'000'000;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) note.str("");
    pass = false;
    note << why << "; ";
  }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Hypergraph k42() { return complete_hypergraph(4, 2); }
Hypergraph k43() { return complete_hypergraph(4, 3); }

std::string verdict_of(const ImmersionResult& r) { return status_word(r.status); }

// 1. K_4^2 and K_4^3 are incomparable under the brute decider.
void criterion1(Outcome& o) {
  for (auto [name, h, g] : {std::tuple{"K42 in K43", k42(), k43()}, std::tuple{"K43 in K42", k43(), k42()}}) {
    const auto t = Clock::now();
    auto r = find_immersion_bruteforce(h, g);
    const double s = since(t);
    o.note << name << ": " << verdict_of(r) << " " << std::setprecision(3) << s << "s; ";
    if (r.status != SearchStatus::absent) o.fail(std::string(name) + " is " + verdict_of(r));
    if (s >= 10.0) o.fail(std::string(name) + " took over 10 s");
  }
}

// 2. Honeycomb patches, rings 2 and 3.
void criterion2(Outcome& o) {
  for (int rings : {2, 3}) {
    const auto g = honeycomb_patch(rings).as_hypergraph();
    const auto t = Clock::now();
    auto yes = check_knr(g, 4, 2);
    auto no = check_knr(g, 4, 3);
    const double s = since(t);
    o.note << "rings " << rings << ": K42 " << verdict_of(yes) << ", K43 " << verdict_of(no) << " (" << std::setprecision(3)
           << s << "s); ";
    if (yes.status != SearchStatus::found || !verify_immersion(k42(), g, *yes.witness))
      o.fail("rings " + std::to_string(rings) + " K42 not a verified yes");
    if (no.status != SearchStatus::absent)
      o.fail("rings " + std::to_string(rings) + " K43 is " + verdict_of(no) +
             (no.witness && verify_immersion(k43(), g, *no.witness) ? " with a verified witness" : ""));
    if (s >= 30.0) o.fail("table1 path over 30 s at rings " + std::to_string(rings));
    if (rings == 2) {
      SearchOptions deep;
      deep.budget = kDeepBudget;
      const auto tb = Clock::now();
      auto b2 = find_immersion_bruteforce(k42(), g, deep);
      auto b3 = find_immersion_bruteforce(k43(), g, deep);
      const double sb = since(tb);
      o.note << "brute rings 2: K42 " << verdict_of(b2) << ", K43 " << verdict_of(b3) << " (" << sb << "s); ";
      if (b2.status != yes.status || b3.status != no.status) o.fail("brute disagrees with table1 at rings 2");
      if (sb >= 300.0) o.fail("brute cross-check over 5 min");
    }
  }
}

// Each H edge image is a simple arc of the doubled ring: connected, at most
// one copy per ring segment.
bool ring_arc_witness(const Hypergraph& g, const ImmersionMap& w) {
  for (const auto& [he, ids] : w.edge_map) {
    std::set<std::vector<VertexId>> segments;
    for (const auto& id : ids)
      if (!segments.insert(g.edge(id).members).second) return false;
  }
  return verify_immersion(k43(), g, w);
}

// 3. Double-edge cycles.
void criterion3(Outcome& o) {
  const auto t = Clock::now();
  for (int n = 4; n <= 7; ++n) {
    const auto g = double_edge_cycle(n).as_hypergraph();
    auto t3 = check_knr(g, 4, 3);
    auto b3 = find_immersion_bruteforce(k43(), g);
    auto t2 = check_knr(g, 4, 2);
    auto b2 = find_immersion_bruteforce(k42(), g);
    const std::string tag = "C" + std::to_string(n);
    if (t3.status != SearchStatus::found || !ring_arc_witness(g, *t3.witness)) o.fail(tag + " table1 K43 not an arc witness");
    if (b3.status != SearchStatus::found || !ring_arc_witness(g, *b3.witness)) o.fail(tag + " brute K43 not an arc witness");
    if (t2.status != SearchStatus::absent) o.fail(tag + " table1 K42 is " + verdict_of(t2));
    if (b2.status != SearchStatus::absent) o.fail(tag + " brute K42 is " + verdict_of(b2));
  }
  const double s = since(t);
  o.note << "n=4..7 in " << std::setprecision(3) << s << "s; ";
  if (s >= 60.0) o.fail("over 1 min");
}

// 4. Row deciders against brute force on random hosts.
void criterion4(Outcome& o) {
  std::mt19937_64 rng(20261018);
  const auto t = Clock::now();
  std::size_t rows = 0, yes = 0, bad = 0;
  for (int i = 0; i < 500; ++i) {
    const auto g = oracle::random_hypergraph(rng, 6, 6, 4);
    for (int n = 1; n <= 4; ++n)
      for (int r = 1; r <= n; ++r) {
        const auto k = complete_hypergraph(n, r);
        auto a = check_knr(g, n, r);
        auto b = find_immersion_bruteforce(k, g);
        ++rows;
        yes += a.status == SearchStatus::found;
        const bool agree = a.status == b.status && a.status != SearchStatus::budget_exhausted &&
                           (!a.witness || verify_immersion(k, g, *a.witness));
        if (!agree && bad++ < 3) o.fail("K" + std::to_string(n) + std::to_string(r) + " disagrees on\n" + serialize(g));
      }
  }
  const double s = since(t);
  o.note << "500 hosts, " << rows << " rows, " << yes << " yes, " << bad << " disagreements, " << std::setprecision(3) << s
         << "s; ";
  if (bad) o.fail(std::to_string(bad) + " disagreements");
  if (s >= 900.0) o.fail("over 15 min");
}

// 5. Derivations exist exactly when immersions do.
void criterion5(Outcome& o) {
  std::mt19937_64 rng(5150);
  const auto t = Clock::now();
  std::size_t yes = 0, bad = 0;
  for (int i = 0; i < 500; ++i) {
    const auto h = oracle::random_hypergraph(rng, 4, 4, 3);
    const auto g = oracle::random_hypergraph(rng, 4, 4, 3);
    auto im = find_immersion_bruteforce(h, g);
    auto dv = find_derivation(h, g);
    bool ok = im.status == dv.status && im.status != SearchStatus::budget_exhausted;
    std::string why = "status";
    try {
      if (ok && dv.derivation) ok = verify_derivation(h, g, *dv.derivation);
      if (ok && im.witness) {
        ++yes;
        const auto seq = immersion_to_derivation(h, g, *im.witness);
        const auto x = replay(g, seq);
        // Rename the replayed edges through vertex_map and compare with H.
        std::map<VertexId, VertexId> back;
        for (const auto& [hv, xv] : seq.vertex_map) back[xv] = hv;
        Hypergraph y;
        for (const auto& v : h.vertices()) y.add_vertex(v.id, v.label);
        int k = 0;
        for (const auto& e : x.edges()) {
          std::vector<VertexId> m;
          for (const auto& v : e.members) {
            if (!back.count(v)) {
              ok = false;
              break;
            }
            m.push_back(back.at(v));
          }
          if (!ok) break;
          y.add_edge("r" + std::to_string(k++), m);
        }
        ok = ok && oracle::isomorphic(h, y);
        if (!ok) why = "replay";
      }
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    if (!ok && bad++ < 3) o.fail(why + " mismatch on\n" + serialize(h) + "--\n" + serialize(g));
  }
  const double s = since(t);
  o.note << "500 pairs, " << yes << " immersible, " << bad << " failures, " << std::setprecision(3) << s << "s; ";
  if (bad) o.fail(std::to_string(bad) + " failures");
  if (s >= 900.0) o.fail("over 15 min");
}

// GHZ amplitudes written out directly.
bool ghz_by_hand(const PureState& s, std::size_t r) {
  if (s.n_qubits != r) return false;
  const Amplitude phase = s.amplitudes[0] / std::abs(s.amplitudes[0]);
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i)
    if (std::abs(s.amplitudes[i] - phase * oracle::ghz_amplitude(r, i)) > kQuantumTolerance) return false;
  return true;
}

// 6. Merge and disentangle on GHZ states.
void criterion6(Outcome& o) {
  const auto t = Clock::now();
  std::size_t merges = 0, dis = 0;
  for (std::size_t r1 = 2; r1 <= 5; ++r1)
    for (std::size_t r2 = 2; r2 <= 5; ++r2)
      for (std::size_t i = 0; i < r1; ++i)
        for (std::size_t j = 0; j < r2; ++j) {
          auto p = apply_merge_projector(tensor(ghz(r1), ghz(r2)), i, r1 + j);
          ++merges;
          if (!(p.weight > 0.0) || !ghz_by_hand(p.state, r1 + r2 - 1))
            o.fail("merge " + std::to_string(r1) + "x" + std::to_string(r2));
        }
  for (std::size_t r = 2; r <= 10; ++r)
    for (std::size_t q = 0; q < r; ++q) {
      ++dis;
      if (!ghz_by_hand(apply_disentangle(ghz(r), q), r - 1)) o.fail("disentangle r=" + std::to_string(r));
    }
  const double s = since(t);
  o.note << merges << " merges, " << dis << " disentangles, tol 1e-9, " << std::setprecision(3) << s << "s; ";
  if (s >= 30.0) o.fail("over 30 s");
}

// 7. Hyper-lattice and cuboid lattices.
void criterion7(Outcome& o) {
  const auto t = Clock::now();
  auto expect = [&](const std::string& tag, const Hypergraph& h, const Hypergraph& g, SearchStatus want) {
    auto r = decide_immersion(h, g, Method::automatic);
    o.note << tag << " " << verdict_of(r) << "; ";
    if (r.status != want) o.fail(tag + " is " + verdict_of(r) + ", expected " + status_word(want));
    if (r.witness && !verify_immersion(h, g, *r.witness)) o.fail(tag + " witness does not verify");
  };
  const auto hyper = honeycomb_hyperlattice_patch(2);
  expect("hyperhex2 K42", k42(), hyper, SearchStatus::found);
  expect("hyperhex2 K43", k43(), hyper, SearchStatus::found);
  expect("cuboid_full3 K42", k42(), cuboid_lattice(3, CuboidMode::full), SearchStatus::found);
  for (int len = 1; len <= 4; ++len)
    expect("cuboid_alt" + std::to_string(len) + " K42", k42(), cuboid_lattice(len, CuboidMode::alternating), SearchStatus::absent);
  expect("cuboid_alt4 K43", k43(), cuboid_lattice(4, CuboidMode::alternating), SearchStatus::found);
  const double s = since(t);
  o.note << std::setprecision(3) << s << "s; ";
  if (s >= 600.0) o.fail("over 10 min");
}

// 8. Factor-graph variants of K_4^3.
void criterion8(Outcome& o) {
  const auto t = Clock::now();
  const auto vs = variants_k43();
  std::set<std::vector<std::vector<int>>> forms;
  for (const auto& v : vs) forms.insert(oracle::canonical_form(v.as_hypergraph()));
  std::size_t immersible = 0;
  for (const auto& v : vs) immersible += find_immersion_bruteforce(k43(), v.as_hypergraph()).status == SearchStatus::found;
  const double s = since(t);
  o.note << vs.size() << " variants, " << forms.size() << " classes, " << immersible << " admit K43, " << std::setprecision(3)
         << s << "s; ";
  if (vs.size() != 18) o.fail("expected exactly 18 variants, got " + std::to_string(vs.size()));
  if (forms.size() != vs.size()) o.fail("variants not pairwise non-isomorphic");
  if (immersible != vs.size()) o.fail("some variant does not admit K43");
  if (s >= 10.0) o.fail("over 10 s");
}

// 9. test_k4 against brute force on three-edge-connected series-parallel
// multigraphs.
void criterion9(Outcome& o) {
  std::mt19937_64 rng(9009);
  const auto t = Clock::now();
  std::size_t count = 0, yes = 0, bad = 0;
  while (count < 200) {
    auto g = oracle::random_series_parallel(rng, 6, 4, 14);
    if (g.vertex_count() < 2 || oracle::min_edge_cut(g) < 3) continue;
    ++count;
    const bool fast = test_k4(g);
    auto b = find_immersion_bruteforce(k42(), g.as_hypergraph());
    yes += fast;
    if (b.status == SearchStatus::budget_exhausted || fast != (b.status == SearchStatus::found)) {
      if (bad++ < 3) o.fail("disagreement on\n" + serialize(g.as_hypergraph()));
    }
  }
  const double s = since(t);
  o.note << count << " graphs, " << yes << " yes, " << bad << " disagreements, " << std::setprecision(3) << s << "s; ";
  if (bad) o.fail(std::to_string(bad) + " disagreements");
  if (s >= 600.0) o.fail("over 10 min");
}

}  // namespace

int main() {
  const std::vector<std::function<void(Outcome&)>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                            criterion6, criterion7, criterion8, criterion9};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::string note = o.note.str();
    for (auto& c : note)
      if (c == '\n') c = ' ';
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << note << std::endl;
  }
  return failed;
}
