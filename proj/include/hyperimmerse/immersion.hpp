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

// Hypergraph immersion: the witness type, its checker, and an exhaustive
// backtracking decider.
//
// The decider assigns H vertices one at a time and routes every H edge as
// soon as all of its members are placed. A route is an inclusion-minimal
// Berge-connected set of unused G edges covering the images; minimal sets are
// enough because any valid route can be shrunk to one. Candidates are tried
// nearest first and routes smallest first.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "hyperimmerse/hypergraph.hpp"
#include "hyperimmerse/multigraph.hpp"

namespace hyperimmerse {

/// The function alpha: vertices of H to vertices of G, and each edge of H to a
/// set of G edge ids (sorted).
struct ImmersionMap {
  std::map<VertexId, VertexId> vertex_map;
  std::map<EdgeId, std::vector<EdgeId>> edge_map;

  friend bool operator==(const ImmersionMap&, const ImmersionMap&) = default;
};

/// Checks injectivity, connectivity of every edge image (over the vertices
/// of its G edges, which must include the images of the edge's members) and
/// pairwise edge-disjointness. In restricted mode a normal H vertex may not
/// land on a cross G vertex. An H edge with an empty image is valid only when
/// it has a single member. Throws std::invalid_argument on unknown ids.
inline bool verify_immersion(const Hypergraph& h, const Hypergraph& g, const ImmersionMap& a, bool restricted = false) {
  std::set<VertexId> targets;
  for (const auto& [hv, gv] : a.vertex_map) {
    if (!h.has_vertex(hv)) throw std::invalid_argument("unknown H vertex '" + hv + "'");
    if (!g.has_vertex(gv)) throw std::invalid_argument("unknown G vertex '" + gv + "'");
    if (!targets.insert(gv).second) return false;
    if (restricted && h.label(hv) == VertexLabel::normal && g.label(gv) == VertexLabel::cross) return false;
  }
  if (a.vertex_map.size() != h.vertex_count()) return false;

  std::set<EdgeId> used;
  for (const auto& [he, ids] : a.edge_map) {
    if (!h.has_edge(he)) throw std::invalid_argument("unknown H edge '" + he + "'");
    for (const auto& id : ids) {
      if (!g.has_edge(id)) throw std::invalid_argument("unknown G edge '" + id + "'");
      if (!used.insert(id).second) return false;
    }
  }

  IndexedHypergraph ig(g);
  for (const auto& e : h.edges()) {
    auto it = a.edge_map.find(e.id);
    if (it == a.edge_map.end()) return false;
    std::vector<int> ends;
    for (const auto& m : e.members) ends.push_back(static_cast<int>(g.vertex_index(a.vertex_map.at(m))));
    const auto& ids = it->second;
    if (ids.empty()) {
      if (e.size() != 1) return false;
      continue;
    }
    DisjointSets ds(ig.vertex_count);
    std::vector<char> touched(ig.vertex_count, 0);
    for (const auto& id : ids) {
      const auto& m = ig.members[g.edge_index(id)];
      for (int v : m) touched[static_cast<std::size_t>(v)] = 1;
      for (std::size_t i = 1; i < m.size(); ++i) ds.unite(m[0], m[i]);
    }
    for (int v : ends)
      if (!touched[static_cast<std::size_t>(v)]) return false;
    int root = -1;
    for (std::size_t v = 0; v < ig.vertex_count; ++v) {
      if (!touched[v]) continue;
      if (root < 0) root = ds.find(static_cast<int>(v));
      if (ds.find(static_cast<int>(v)) != root) return false;
    }
  }
  return true;
}

enum class SearchStatus { found, absent, budget_exhausted };

/// yes / no / unknown, as reported by the command line tool.
inline const char* status_word(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "yes";
    case SearchStatus::absent: return "no";
    case SearchStatus::budget_exhausted: return "unknown";
  }
  return "unknown";
}

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t members_examined = 0;
  double seconds = 0.0;
};

/// Node budget: HYPERIMMERSE_BUDGET if set to a positive integer, else 10^7.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("HYPERIMMERSE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
  }
  return 10'000'000;
}

struct SearchOptions {
  std::uint64_t budget = default_budget();
  bool restricted = false;
  unsigned jobs = 1;
};

struct ImmersionResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<ImmersionMap> witness;
  SearchStats stats;
};

namespace detail {

struct SearchPlan {
  IndexedHypergraph h;
  IndexedHypergraph g;
  bool restricted = false;
  std::vector<char> h_active;  // edges of size >= 2 need a route
  std::vector<char> g_active;  // a singleton G edge never helps a route
  std::vector<int> order;
  std::vector<std::vector<int>> completes;  // per position
  std::vector<int> twin_prev;               // per position
  std::vector<int> demand;                  // per H vertex
  std::size_t active_h_edges = 0;

  SearchPlan(const Hypergraph& hh, const Hypergraph& gg, bool restrict_labels)
      : h(hh), g(gg), restricted(restrict_labels) {
    const std::size_t nh = h.vertex_count;
    for (const auto& m : h.members) h_active.push_back(m.size() >= 2 ? 1 : 0);
    for (const auto& m : g.members) g_active.push_back(m.size() >= 2 ? 1 : 0);
    demand.assign(nh, 0);
    for (std::size_t e = 0; e < h.members.size(); ++e) {
      if (!h_active[e]) continue;
      ++active_h_edges;
      for (int v : h.members[e]) ++demand[static_cast<std::size_t>(v)];
    }

    std::vector<char> placed(nh, 0);
    for (std::size_t step = 0; step < nh; ++step) {
      int best = -1;
      std::tuple<int, int, int> best_score{-1, -1, -1};
      for (std::size_t u = 0; u < nh; ++u) {
        if (placed[u]) continue;
        int closes = 0, shared = 0;
        for (int e : h.incident[u]) {
          int placed_members = 0;
          for (int w : h.members[static_cast<std::size_t>(e)]) placed_members += placed[static_cast<std::size_t>(w)];
          if (placed_members > 0) ++shared;
          if (h_active[static_cast<std::size_t>(e)] &&
              placed_members + 1 == static_cast<int>(h.members[static_cast<std::size_t>(e)].size()))
            ++closes;
        }
        std::tuple<int, int, int> score{closes, shared, static_cast<int>(h.incident[u].size())};
        if (score > best_score) {
          best_score = score;
          best = static_cast<int>(u);
        }
      }
      placed[static_cast<std::size_t>(best)] = 1;
      order.push_back(best);
    }

    std::vector<int> position(nh);
    for (std::size_t k = 0; k < nh; ++k) position[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    completes.assign(nh, {});
    for (std::size_t e = 0; e < h.members.size(); ++e) {
      if (!h_active[e]) continue;
      int last = 0;
      for (int v : h.members[e]) last = std::max(last, position[static_cast<std::size_t>(v)]);
      completes[static_cast<std::size_t>(last)].push_back(static_cast<int>(e));
    }

    // Images of twins (vertices whose transposition is an automorphism of H)
    // are forced to increase along the assignment order.
    twin_prev.assign(nh, -1);
    for (std::size_t k = 0; k < nh; ++k)
      for (std::size_t p = 0; p < k; ++p)
        if (twins(order[p], order[k])) twin_prev[k] = static_cast<int>(p);
  }

  bool twins(int u, int v) const {
    if (h.cross[static_cast<std::size_t>(u)] != h.cross[static_cast<std::size_t>(v)]) return false;
    std::vector<int> swap(h.vertex_count);
    for (std::size_t i = 0; i < h.vertex_count; ++i) swap[i] = static_cast<int>(i);
    swap[static_cast<std::size_t>(u)] = v;
    swap[static_cast<std::size_t>(v)] = u;
    auto before = h.members;
    for (auto& m : before) std::sort(m.begin(), m.end());
    std::sort(before.begin(), before.end());
    auto after = h.members;
    for (auto& m : after) {
      for (int& x : m) x = swap[static_cast<std::size_t>(x)];
      std::sort(m.begin(), m.end());
    }
    std::sort(after.begin(), after.end());
    return before == after;
  }
};

struct SearchControl {
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t budget = 0;
  std::atomic<bool> exhausted{false};
  std::atomic<std::size_t> best_branch{std::numeric_limits<std::size_t>::max()};
};

class ImmersionSearch {
 public:
  ImmersionSearch(const SearchPlan& plan, SearchControl& control, std::size_t branch)
      : p_(plan), c_(control), branch_(branch), alpha_(plan.h.vertex_count, -1), used_(plan.g.vertex_count, 0),
        owner_(plan.g.members.size(), -1), routes_(plan.h.members.size()), remaining_(plan.demand),
        unrouted_(plan.active_h_edges) {}

  /// Runs the search; `first` pins the image of the first vertex in order.
  bool run(int first = -1) {
    first_ = first;
    return assign(0);
  }

  bool aborted() const { return aborted_; }
  const std::vector<int>& alpha() const { return alpha_; }
  const std::vector<std::vector<int>>& routes() const { return routes_; }

 private:
  bool tick() {
    const std::uint64_t n = c_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > c_.budget) {
      c_.exhausted.store(true);
      aborted_ = true;
      return false;
    }
    if (c_.best_branch.load(std::memory_order_relaxed) < branch_) {
      aborted_ = true;
      return false;
    }
    return true;
  }

  bool available(std::size_t e) const { return p_.g_active[e] && owner_[e] < 0; }

  int free_degree(int gv) const {
    int d = 0;
    for (int e : p_.g.incident[static_cast<std::size_t>(gv)]) d += available(static_cast<std::size_t>(e)) ? 1 : 0;
    return d;
  }

  bool feasible() const {
    std::size_t free_edges = 0;
    DisjointSets ds(p_.g.vertex_count);
    for (std::size_t e = 0; e < p_.g.members.size(); ++e) {
      if (!available(e)) continue;
      ++free_edges;
      const auto& m = p_.g.members[e];
      for (std::size_t i = 1; i < m.size(); ++i) ds.unite(m[0], m[i]);
    }
    if (free_edges < unrouted_) return false;
    for (std::size_t e = 0; e < p_.h.members.size(); ++e) {
      if (!p_.h_active[e] || !routes_[e].empty()) continue;
      int root = -1;
      for (int v : p_.h.members[e]) {
        const int gv = alpha_[static_cast<std::size_t>(v)];
        if (gv < 0) continue;
        const int r = ds.find(gv);
        if (root < 0) root = r;
        else if (r != root) return false;
      }
    }
    for (std::size_t u = 0; u < p_.h.vertex_count; ++u)
      if (alpha_[u] >= 0 && remaining_[u] > free_degree(alpha_[u])) return false;
    return true;
  }

  // Edge distance from gv to every vertex through available edges; -1 when
  // unreachable.
  std::vector<int> distances(int gv) const {
    std::vector<int> dist(p_.g.vertex_count, -1);
    std::vector<char> edge_seen(p_.g.members.size(), 0);
    std::vector<int> frontier{gv};
    dist[static_cast<std::size_t>(gv)] = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const int x = frontier[head];
      for (int e : p_.g.incident[static_cast<std::size_t>(x)]) {
        const auto ee = static_cast<std::size_t>(e);
        if (edge_seen[ee] || !available(ee)) continue;
        edge_seen[ee] = 1;
        for (int w : p_.g.members[ee]) {
          if (dist[static_cast<std::size_t>(w)] >= 0) continue;
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(x)] + 1;
          frontier.push_back(w);
        }
      }
    }
    return dist;
  }

  // Candidates for u: admissible G vertices ordered by total distance to the
  // images of u's placed neighbours, then by index.
  std::vector<int> candidates(std::size_t k) const {
    const int u = p_.order[k];
    const auto uu = static_cast<std::size_t>(u);
    int lo = 0;
    if (p_.twin_prev[k] >= 0) lo = alpha_[static_cast<std::size_t>(p_.order[static_cast<std::size_t>(p_.twin_prev[k])])] + 1;
    std::vector<int> anchors;
    for (int e : p_.h.incident[uu]) {
      if (!p_.h_active[static_cast<std::size_t>(e)]) continue;
      for (int w : p_.h.members[static_cast<std::size_t>(e)])
        if (w != u && alpha_[static_cast<std::size_t>(w)] >= 0) anchors.push_back(alpha_[static_cast<std::size_t>(w)]);
    }
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    std::vector<std::vector<int>> dist;
    for (int a : anchors) dist.push_back(distances(a));

    std::vector<std::pair<long, int>> scored;
    for (int cand = lo; cand < static_cast<int>(p_.g.vertex_count); ++cand) {
      const auto cc = static_cast<std::size_t>(cand);
      if (k == 0 && first_ >= 0 && cand != first_) continue;
      if (used_[cc]) continue;
      if (p_.restricted && !p_.h.cross[uu] && p_.g.cross[cc]) continue;
      if (remaining_[uu] > free_degree(cand)) continue;
      long score = 0;
      bool reachable = true;
      for (const auto& d : dist) {
        if (d[cc] < 0) reachable = false;
        score += d[cc];
      }
      if (reachable) scored.emplace_back(score, cand);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<int> out;
    for (const auto& [score, cand] : scored) out.push_back(cand);
    return out;
  }

  bool assign(std::size_t k) {
    if (k == p_.order.size()) return true;
    const auto uu = static_cast<std::size_t>(p_.order[k]);
    for (int cand : candidates(k)) {
      const auto cc = static_cast<std::size_t>(cand);
      if (!tick()) return false;
      alpha_[uu] = cand;
      used_[cc] = 1;
      if (feasible() && route(k, 0)) return true;
      alpha_[uu] = -1;
      used_[cc] = 0;
      if (aborted_) return false;
    }
    return false;
  }

  bool route(std::size_t k, std::size_t i) {
    const auto& todo = p_.completes[k];
    if (i == todo.size()) return assign(k + 1);
    const int he = todo[i];
    const auto& members = p_.h.members[static_cast<std::size_t>(he)];
    std::vector<int> terminals;
    for (int v : members) terminals.push_back(alpha_[static_cast<std::size_t>(v)]);

    return steiner(terminals, [&](const std::vector<int>& edges) {
      for (int e : edges) owner_[static_cast<std::size_t>(e)] = he;
      routes_[static_cast<std::size_t>(he)] = edges;
      for (int v : members) --remaining_[static_cast<std::size_t>(v)];
      --unrouted_;
      if (feasible() && route(k, i + 1)) return true;
      ++unrouted_;
      for (int v : members) ++remaining_[static_cast<std::size_t>(v)];
      routes_[static_cast<std::size_t>(he)].clear();
      for (int e : edges) owner_[static_cast<std::size_t>(e)] = -1;
      return false;
    });
  }

  struct SteinerState {
    std::vector<char> covered;
    std::vector<char> excluded;
    std::vector<int> chosen;
    std::size_t limit;
    bool capped;
  };

  // Enumerates inclusion-minimal connected sets of available edges covering
  // `terminals`, smallest sets first; stops as soon as `yield` returns true.
  template <class Yield>
  bool steiner(const std::vector<int>& terminals, Yield&& yield) {
    std::size_t free_edges = 0;
    for (std::size_t e = 0; e < p_.g.members.size(); ++e) free_edges += available(e) ? 1 : 0;
    for (std::size_t limit = 1; limit <= free_edges; ++limit) {
      SteinerState st{std::vector<char>(p_.g.vertex_count, 0), std::vector<char>(p_.g.members.size(), 0), {}, limit, false};
      st.covered[static_cast<std::size_t>(terminals[0])] = 1;
      if (grow(st, terminals, yield)) return true;
      if (aborted_ || !st.capped) return false;
    }
    return false;
  }

  bool minimal(const std::vector<int>& chosen, const std::vector<int>& terminals) const {
    for (std::size_t skip = 0; skip < chosen.size(); ++skip) {
      DisjointSets ds(p_.g.vertex_count);
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        if (j == skip) continue;
        const auto& m = p_.g.members[static_cast<std::size_t>(chosen[j])];
        for (std::size_t i = 1; i < m.size(); ++i) ds.unite(m[0], m[i]);
      }
      const int root = ds.find(terminals[0]);
      bool joined = true;
      for (int t : terminals) joined = joined && ds.find(t) == root;
      if (joined) return false;
    }
    return true;
  }

  // Include/exclude branching on the smallest edge that leaves the covered
  // set. Only sets of exactly st.limit edges are reported.
  template <class Yield>
  bool grow(SteinerState& st, const std::vector<int>& terminals, Yield& yield) {
    if (!tick()) return false;
    bool done = true;
    for (int t : terminals) done = done && st.covered[static_cast<std::size_t>(t)];
    if (done) {
      if (st.chosen.size() != st.limit || !minimal(st.chosen, terminals)) return false;
      auto sorted = st.chosen;
      std::sort(sorted.begin(), sorted.end());
      return yield(sorted);
    }

    const std::size_t ne = p_.g.members.size();
    // Distances from the covered set through edges not yet excluded bound
    // the number of edges still needed.
    {
      std::vector<int> dist(p_.g.vertex_count, -1);
      std::vector<int> frontier;
      for (std::size_t v = 0; v < dist.size(); ++v)
        if (st.covered[v]) {
          dist[v] = 0;
          frontier.push_back(static_cast<int>(v));
        }
      std::vector<char> edge_seen(ne, 0);
      for (std::size_t head = 0; head < frontier.size(); ++head) {
        const int x = frontier[head];
        for (int e : p_.g.incident[static_cast<std::size_t>(x)]) {
          const auto ee = static_cast<std::size_t>(e);
          if (edge_seen[ee] || !available(ee) || st.excluded[ee]) continue;
          edge_seen[ee] = 1;
          for (int w : p_.g.members[ee]) {
            if (dist[static_cast<std::size_t>(w)] >= 0) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(x)] + 1;
            frontier.push_back(w);
          }
        }
      }
      int need = 0;
      for (int t : terminals) {
        const int d = dist[static_cast<std::size_t>(t)];
        if (d < 0) return false;
        need = std::max(need, d);
      }
      if (st.chosen.size() + static_cast<std::size_t>(need) > st.limit) {
        st.capped = true;
        return false;
      }
    }

    int pick = -1;
    for (std::size_t e = 0; e < ne && pick < 0; ++e) {
      if (!available(e) || st.excluded[e]) continue;
      bool touches = false, extends = false;
      for (int w : p_.g.members[e]) {
        if (st.covered[static_cast<std::size_t>(w)]) touches = true;
        else extends = true;
      }
      if (touches && extends) pick = static_cast<int>(e);
    }
    if (pick < 0) return false;
    const auto pe = static_cast<std::size_t>(pick);

    std::vector<int> added;
    for (int w : p_.g.members[pe])
      if (!st.covered[static_cast<std::size_t>(w)]) {
        st.covered[static_cast<std::size_t>(w)] = 1;
        added.push_back(w);
      }
    st.chosen.push_back(pick);
    const bool stop = grow(st, terminals, yield);
    st.chosen.pop_back();
    for (int w : added) st.covered[static_cast<std::size_t>(w)] = 0;
    if (stop || aborted_) return stop;

    st.excluded[pe] = 1;
    const bool stop2 = grow(st, terminals, yield);
    st.excluded[pe] = 0;
    return stop2;
  }

  const SearchPlan& p_;
  SearchControl& c_;
  std::size_t branch_;
  int first_ = -1;
  bool aborted_ = false;
  std::vector<int> alpha_;
  std::vector<char> used_;
  std::vector<int> owner_;
  std::vector<std::vector<int>> routes_;
  std::vector<int> remaining_;
  std::size_t unrouted_;
};

inline ImmersionMap make_witness(const Hypergraph& h, const Hypergraph& g, const std::vector<int>& alpha,
                                 const std::vector<std::vector<int>>& routes) {
  ImmersionMap out;
  for (std::size_t v = 0; v < alpha.size(); ++v)
    out.vertex_map.emplace(h.vertices()[v].id, g.vertices()[static_cast<std::size_t>(alpha[v])].id);
  for (std::size_t e = 0; e < routes.size(); ++e) {
    auto r = routes[e];
    std::sort(r.begin(), r.end());
    std::vector<EdgeId> ids;
    for (int x : r) ids.push_back(g.edges()[static_cast<std::size_t>(x)].id);
    out.edge_map.emplace(h.edges()[e].id, std::move(ids));
  }
  return out;
}

}  // namespace detail

/// Exhaustive immersion search. Returns the first witness in search order,
/// proven absence, or budget exhaustion. With jobs > 1 the branches for the
/// first placed vertex run concurrently and the lowest-indexed successful
/// branch wins, which is the witness a serial run returns.
inline ImmersionResult find_immersion_bruteforce(const Hypergraph& h, const Hypergraph& g, const SearchOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  ImmersionResult result;
  auto finish = [&](ImmersionResult& r) -> ImmersionResult& {
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  auto active_count = [](const Hypergraph& x) {
    return static_cast<std::size_t>(
        std::count_if(x.edges().begin(), x.edges().end(), [](const HyperEdge& e) { return e.size() >= 2; }));
  };
  if (h.vertex_count() > g.vertex_count() || active_count(h) > active_count(g)) {
    result.status = SearchStatus::absent;
    return finish(result);
  }

  detail::SearchPlan plan(h, g, options.restricted);
  detail::SearchControl control;
  control.budget = options.budget;

  if (plan.h.vertex_count == 0) {
    result.status = SearchStatus::found;
    result.witness = detail::make_witness(h, g, {}, std::vector<std::vector<int>>(h.edge_count()));
    return finish(result);
  }

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    detail::ImmersionSearch search(plan, control, 0);
    if (search.run()) {
      result.status = SearchStatus::found;
      result.witness = detail::make_witness(h, g, search.alpha(), search.routes());
    } else {
      result.status = control.exhausted.load() ? SearchStatus::budget_exhausted : SearchStatus::absent;
    }
  } else {
    const std::size_t branches = plan.g.vertex_count;
    std::vector<std::optional<ImmersionMap>> found(branches);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        const std::size_t b = next.fetch_add(1);
        if (b >= branches) return;
        if (control.best_branch.load() < b) continue;
        detail::ImmersionSearch search(plan, control, b);
        if (search.run(static_cast<int>(b))) {
          found[b] = detail::make_witness(h, g, search.alpha(), search.routes());
          std::size_t cur = control.best_branch.load();
          while (b < cur && !control.best_branch.compare_exchange_weak(cur, b)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    const std::size_t best = control.best_branch.load();
    if (best < branches) {
      result.status = SearchStatus::found;
      result.witness = std::move(found[best]);
    } else {
      result.status = control.exhausted.load() ? SearchStatus::budget_exhausted : SearchStatus::absent;
    }
  }
  result.stats.nodes = std::min<std::uint64_t>(control.nodes.load(), options.budget);
  return finish(result);
}

/// Ordinary-graph immersion of f into gdw where normal vertices of f avoid
/// cross vertices of gdw.
inline ImmersionResult restricted_graph_immersion(const MultiGraph& f, const MultiGraph& gdw, SearchOptions options = {}) {
  options.restricted = true;
  return find_immersion_bruteforce(f.as_hypergraph(), gdw.as_hypergraph(), options);
}

}  // namespace hyperimmerse
