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

// Method dispatch for immersion queries.
//
//   brute    backtracking search
//   table1   row decider; H must be isomorphic to some K_n^r with n <= 4
//   auto     brute with a tenth of the budget, then the row decider when H
//            is a K_n^r, then brute with the full budget

#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hyperimmerse/immersion.hpp"
#include "hyperimmerse/table1.hpp"

namespace hyperimmerse {

enum class Method { brute, table1, automatic };

inline Method parse_method(const std::string& s) {
  if (s == "brute") return Method::brute;
  if (s == "table1") return Method::table1;
  if (s == "auto") return Method::automatic;
  throw std::invalid_argument("unknown method '" + s + "'");
}

namespace detail {

inline void add_stats(SearchStats& total, const SearchStats& s) {
  total.nodes += s.nodes;
  total.members_examined += s.members_examined;
  total.seconds += s.seconds;
}

inline ImmersionResult by_table(const Hypergraph& h, const Hypergraph& g, const KnrMatch& m, const SearchOptions& options) {
  ImmersionResult r = check_knr(g, m.n, m.r, options);
  if (r.witness) r.witness = witness_for(h, m, *r.witness);
  return r;
}

}  // namespace detail

/// Throws std::invalid_argument for table1 when H is not a supported K_n^r.
inline ImmersionResult decide_immersion(const Hypergraph& h, const Hypergraph& g, Method method,
                                        const SearchOptions& options = {}) {
  if (method == Method::brute) return find_immersion_bruteforce(h, g, options);
  const auto match = recognize_knr(h);
  if (method == Method::table1) {
    if (!match) throw std::invalid_argument("table1 needs H isomorphic to K_n^r with 1 <= r <= n <= 4");
    return detail::by_table(h, g, *match, options);
  }
  SearchOptions probe = options;
  probe.budget = std::max<std::uint64_t>(1, options.budget / 10);
  ImmersionResult r = find_immersion_bruteforce(h, g, probe);
  if (r.status != SearchStatus::budget_exhausted) return r;
  SearchStats total = r.stats;
  if (match) {
    r = detail::by_table(h, g, *match, options);
    detail::add_stats(total, r.stats);
    r.stats = total;
    if (r.status != SearchStatus::budget_exhausted) return r;
  }
  r = find_immersion_bruteforce(h, g, options);
  detail::add_stats(total, r.stats);
  r.stats = total;
  return r;
}

}  // namespace hyperimmerse
