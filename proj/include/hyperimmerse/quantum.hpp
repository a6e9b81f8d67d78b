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

// State-vector oracle for routing on GHZ resources.
//
// Qubit 0 is the most significant bit of an amplitude index. A hypergraph
// state puts one GHZ state on every hyperedge, with qubits ordered by
// (edge id, vertex id). Merging two qubits keeps the position of the first;
// removed qubits close the gap.
//
//   M  = |0><00| + |1><11|      (merge)
//   M' = |0><0|  + |0><1|       (disentangle, then drop the qubit)
//
// Both are applied unnormalized and followed by renormalization.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperimmerse/derivation.hpp"
#include "hyperimmerse/hypergraph.hpp"

namespace hyperimmerse {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 14;

struct PureState {
  std::size_t n_qubits = 0;
  std::vector<Amplitude> amplitudes{Amplitude(1.0)};

  double norm_squared() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return s;
  }
};

/// A projected state and the squared norm before renormalization.
struct Projection {
  PureState state;
  double weight = 0.0;
};

namespace detail {

inline std::size_t shift_of(std::size_t n, std::size_t q) { return n - 1 - q; }

inline void check_qubit(const PureState& s, std::size_t q) {
  if (q >= s.n_qubits) throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
}

// Index with bit `pos` (counted from the least significant end) removed.
inline std::size_t drop_bit(std::size_t index, std::size_t pos) {
  const std::size_t low = index & ((std::size_t{1} << pos) - 1);
  return ((index >> (pos + 1)) << pos) | low;
}

inline Projection renormalized(PureState s) {
  const double w = s.norm_squared();
  if (w <= 0.0) throw std::domain_error("projection has zero norm");
  const double k = 1.0 / std::sqrt(w);
  for (auto& a : s.amplitudes) a *= k;
  return {std::move(s), w};
}

}  // namespace detail

/// (|0...0> + |1...1>)/sqrt(2) on r qubits, 1 <= r <= 14.
inline PureState ghz(std::size_t r) {
  if (r < 1 || r > kMaxQubits) throw std::invalid_argument("ghz needs 1..14 qubits");
  PureState s;
  s.n_qubits = r;
  s.amplitudes.assign(std::size_t{1} << r, Amplitude(0.0));
  const double h = 1.0 / std::sqrt(2.0);
  s.amplitudes.front() = h;
  s.amplitudes.back() = h;
  return s;
}

/// a on the leading qubits, b after them.
inline PureState tensor(const PureState& a, const PureState& b) {
  if (a.n_qubits + b.n_qubits > kMaxQubits) throw std::length_error("tensor product exceeds 14 qubits");
  PureState s;
  s.n_qubits = a.n_qubits + b.n_qubits;
  s.amplitudes.assign(a.amplitudes.size() * b.amplitudes.size(), Amplitude(0.0));
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    for (std::size_t j = 0; j < b.amplitudes.size(); ++j)
      s.amplitudes[i * b.amplitudes.size() + j] = a.amplitudes[i] * b.amplitudes[j];
  return s;
}

/// Applies M to (q1, q2); the result lives on n-1 qubits with q2 removed.
/// Throws std::domain_error when nothing survives the projection.
inline Projection apply_merge_projector(const PureState& s, std::size_t q1, std::size_t q2) {
  detail::check_qubit(s, q1);
  detail::check_qubit(s, q2);
  if (q1 == q2) throw std::invalid_argument("merge needs two distinct qubits");
  const std::size_t p1 = detail::shift_of(s.n_qubits, q1);
  const std::size_t p2 = detail::shift_of(s.n_qubits, q2);
  PureState out;
  out.n_qubits = s.n_qubits - 1;
  out.amplitudes.assign(std::size_t{1} << out.n_qubits, Amplitude(0.0));
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
    if (((i >> p1) & 1U) != ((i >> p2) & 1U)) continue;
    out.amplitudes[detail::drop_bit(i, p2)] += s.amplitudes[i];
  }
  return detail::renormalized(std::move(out));
}

/// Applies M' to q and drops it, with the pre-normalization weight.
inline Projection disentangle_with_weight(const PureState& s, std::size_t q) {
  detail::check_qubit(s, q);
  const std::size_t p = detail::shift_of(s.n_qubits, q);
  PureState out;
  out.n_qubits = s.n_qubits - 1;
  out.amplitudes.assign(std::size_t{1} << out.n_qubits, Amplitude(0.0));
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i) out.amplitudes[detail::drop_bit(i, p)] += s.amplitudes[i];
  return detail::renormalized(std::move(out));
}

inline PureState apply_disentangle(const PureState& s, std::size_t q) { return disentangle_with_weight(s, q).state; }

/// Row-major 2x2 operator on one qubit. Hook for local rotations.
using SingleQubitGate = std::array<Amplitude, 4>;

inline PureState apply_single_qubit(const PureState& s, std::size_t q, const SingleQubitGate& u) {
  detail::check_qubit(s, q);
  const std::size_t bit = std::size_t{1} << detail::shift_of(s.n_qubits, q);
  PureState out = s;
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
    if (i & bit) continue;
    const Amplitude a0 = s.amplitudes[i];
    const Amplitude a1 = s.amplitudes[i | bit];
    out.amplitudes[i] = u[0] * a0 + u[1] * a1;
    out.amplitudes[i | bit] = u[2] * a0 + u[3] * a1;
  }
  return out;
}

/// True iff a and b agree up to one global phase, amplitude-wise within tol.
inline bool equal_up_to_phase(const PureState& a, const PureState& b, double tol = 1e-9) {
  if (a.n_qubits != b.n_qubits) return false;
  Amplitude overlap(0.0);
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) overlap += std::conj(b.amplitudes[i]) * a.amplitudes[i];
  if (std::abs(overlap) < 1e-300) return false;
  const Amplitude phase = overlap / std::abs(overlap);
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    if (std::abs(a.amplitudes[i] - phase * b.amplitudes[i]) > tol) return false;
  return true;
}

inline bool is_ghz_equivalent(const PureState& s, std::size_t r) {
  if (s.n_qubits != r || r < 1 || r > kMaxQubits) return false;
  return equal_up_to_phase(s, ghz(r));
}

/// (edge id, vertex id) -> qubit index.
using QubitAssignment = std::map<std::pair<EdgeId, VertexId>, std::size_t>;

/// Product of GHZ states, one per edge in sorted order.
inline std::pair<PureState, QubitAssignment> hypergraph_state(const Hypergraph& g) {
  std::size_t total = 0;
  for (const auto& e : g.edges()) total += e.size();
  if (total > kMaxQubits) throw std::length_error("hypergraph needs " + std::to_string(total) + " qubits, limit is 14");
  PureState s;
  QubitAssignment qa;
  for (const auto& e : g.edges()) {
    for (const auto& v : e.members) {
      const std::size_t q = qa.size();
      qa.emplace(std::make_pair(e.id, v), q);
    }
    s = tensor(s, ghz(e.size()));
  }
  return {std::move(s), std::move(qa)};
}

/// The state one GHZ per edge of g would give under the assignment qa.
inline PureState expected_state(const Hypergraph& g, const QubitAssignment& qa, std::size_t n_qubits) {
  PureState s;
  s.n_qubits = n_qubits;
  s.amplitudes.assign(std::size_t{1} << n_qubits, Amplitude(0.0));
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& e : g.edges()) {
    std::vector<std::size_t> bits;
    for (const auto& v : e.members) bits.push_back(detail::shift_of(n_qubits, qa.at({e.id, v})));
    groups.push_back(std::move(bits));
  }
  const double value = std::pow(0.5, 0.5 * static_cast<double>(groups.size()));
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
    bool ok = true;
    for (const auto& grp : groups) {
      const auto first = (i >> grp.front()) & 1U;
      for (auto b : grp)
        if (((i >> b) & 1U) != first) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) s.amplitudes[i] = value;
  }
  return s;
}

struct StepReport {
  std::string description;
  double weight = 1.0;   // product of success weights of the projectors used
  bool factorizes = false;
  std::size_t qubits = 0;
};

struct SimulationReport {
  bool ok = true;
  std::vector<StepReport> steps;  // entry 0 is the initial state
  PureState final_state;
  QubitAssignment final_assignment;
  Hypergraph final_hypergraph;
};

namespace detail {

inline void remove_qubit(QubitAssignment& qa, std::size_t q) {
  for (auto it = qa.begin(); it != qa.end();) {
    if (it->second == q) {
      it = qa.erase(it);
      continue;
    }
    if (it->second > q) --it->second;
    ++it;
  }
}

}  // namespace detail

/// Replays seq on GHZ resources over its initial subgraph. Coalesce merges
/// the two qubits at every shared vertex; dewet disentangles one qubit.
/// Throws std::invalid_argument when a step does not apply and
/// std::length_error when the initial subgraph needs more than 14 qubits.
inline SimulationReport simulate_derivation(const Hypergraph& g, const DerivationSequence& seq) {
  SimulationReport rep;
  Hypergraph x = initial_subgraph(g, seq);
  auto [state, qa] = hypergraph_state(x);
  auto record = [&](std::string what, double weight) {
    StepReport r;
    r.description = std::move(what);
    r.weight = weight;
    r.qubits = state.n_qubits;
    r.factorizes = equal_up_to_phase(state, expected_state(x, qa, state.n_qubits));
    if (!r.factorizes || !(weight > 0.0)) rep.ok = false;
    rep.steps.push_back(std::move(r));
  };
  record("initial", 1.0);

  for (const auto& step : seq.steps) {
    if (const auto* c = std::get_if<CoalesceStep>(&step)) {
      const Hypergraph next = apply_step(x, step);
      const EdgeId merged = coalesced_id(x, *c);
      const auto& a = x.edge(c->first);
      const auto& b = x.edge(c->second);
      double weight = 1.0;
      for (const auto& v : b.members) {
        if (!a.contains(v)) continue;
        const std::size_t q1 = qa.at({a.id, v});
        const std::size_t q2 = qa.at({b.id, v});
        Projection p = apply_merge_projector(state, q1, q2);
        weight *= p.weight;
        state = std::move(p.state);
        qa.erase({b.id, v});
        detail::remove_qubit(qa, q2);
      }
      QubitAssignment relabelled;
      for (const auto& [key, q] : qa) {
        if (key.first == a.id || key.first == b.id)
          relabelled.emplace(std::make_pair(merged, key.second), q);
        else
          relabelled.emplace(key, q);
      }
      qa = std::move(relabelled);
      x = next;
      record("coalesce " + c->first + " " + c->second, weight);
    } else {
      const auto& d = std::get<DewetStep>(step);
      const Hypergraph next = apply_step(x, step);
      const std::size_t q = qa.at({d.edge, d.vertex});
      Projection p = disentangle_with_weight(state, q);
      state = std::move(p.state);
      detail::remove_qubit(qa, q);
      x = next;
      record("dewet " + d.edge + " " + d.vertex, p.weight);
    }
  }
  rep.final_state = std::move(state);
  rep.final_assignment = std::move(qa);
  rep.final_hypergraph = std::move(x);
  return rep;
}

}  // namespace hyperimmerse
