// Copyright 2026 The Quill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "quill/ir.hpp"
#include "quill/sim.hpp"

namespace quill::testing {

/// Direct DFT-matrix oracle: entries omega^{jk} / sqrt(N), omega = e^{2 pi i/N}.
inline Unitary dft_matrix(std::size_t n) {
  std::size_t N = std::size_t{1} << n;
  Unitary u;
  u.rows = u.cols = N;
  u.entries.resize(N * N);
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t k = 0; k < N; ++k)
      u.at(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(N)),
                              2.0 * std::numbers::pi *
                                  static_cast<double>(j * k % N) /
                                  static_cast<double>(N));
  return u;
}

inline Unitary identity_matrix(std::size_t dim) {
  Unitary u;
  u.rows = u.cols = dim;
  u.entries.assign(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) u.at(i, i) = 1.0;
  return u;
}

/// Random valid circuits for round-trip and cross-simulator tests. When
/// `clifford_only` is set, gates are drawn from {H, S, X, Y, Z, CNOT, CZ}
/// plus Measure; otherwise any gate kind can appear, including comments and
/// a boxed subroutine call.
inline Circuit random_circuit(std::mt19937& gen, std::size_t max_qubits,
                              std::size_t max_gates, bool clifford_only) {
  auto pick = [&](std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(0, hi - 1)(gen);
  };
  Circuit c;
  std::vector<std::pair<WireId, WireKind>> live;
  WireId next = 0;
  std::size_t n0 = 1 + pick(max_qubits);
  for (std::size_t i = 0; i < n0; ++i) {
    bool classical = !clifford_only && pick(6) == 0;
    c.inputs.emplace_back(next,
                          classical ? WireKind::Classical : WireKind::Quantum);
    live.push_back(c.inputs.back());
    ++next;
  }
  std::size_t target_gates = 1 + pick(max_gates);
  auto quantum_at = [&](std::size_t from) -> int {
    for (std::size_t i = from; i < live.size(); ++i)
      if (live[i].second == WireKind::Quantum) return static_cast<int>(i);
    return -1;
  };
  for (std::size_t g = 0; g < target_gates; ++g) {
    std::size_t kind = pick(clifford_only ? 8 : 12);
    int qi = live.empty() ? -1 : quantum_at(pick(live.size()));
    if (qi < 0) qi = quantum_at(0);
    switch (kind) {
      case 0: case 1: case 2: case 3: {  // 1-qubit gate
        if (qi < 0) break;
        NamedGate names_cl[] = {NamedGate::H, NamedGate::S, NamedGate::X,
                                NamedGate::Y, NamedGate::Z};
        NamedGate names_all[] = {NamedGate::H, NamedGate::S, NamedGate::X,
                                 NamedGate::Y, NamedGate::Z, NamedGate::T};
        NamedGate nm = clifford_only ? names_cl[pick(5)] : names_all[pick(6)];
        c.gates.push_back(
            make_gate(Named{nm}, {live[static_cast<std::size_t>(qi)].first}));
        break;
      }
      case 4: case 5: {  // CNOT / CZ
        int a = quantum_at(pick(live.size()));
        if (a < 0) break;
        int b = -1;
        for (std::size_t i = 0; i < live.size(); ++i)
          if (static_cast<int>(i) != a && live[i].second == WireKind::Quantum)
            b = static_cast<int>(i);
        if (b < 0) break;
        NamedGate nm = pick(2) == 0 ? NamedGate::X : NamedGate::Z;
        c.gates.push_back(
            make_gate(Named{nm}, {live[static_cast<std::size_t>(a)].first},
                      {{live[static_cast<std::size_t>(b)].first, true}}));
        break;
      }
      case 6: {  // measure
        if (qi < 0) break;
        auto& w = live[static_cast<std::size_t>(qi)];
        c.gates.push_back(make_gate(Meas{}, {w.first}));
        w.second = WireKind::Classical;
        break;
      }
      case 7: {  // fresh qubit
        if (live.size() >= max_qubits) break;
        c.gates.push_back(make_gate(QInit{pick(2) == 1}, {next}));
        live.emplace_back(next, WireKind::Quantum);
        ++next;
        break;
      }
      case 8: {  // rotation (non-Clifford pool)
        if (qi < 0) break;
        c.gates.push_back(
            make_gate(Rot{static_cast<std::uint32_t>(1 + pick(4))},
                      {live[static_cast<std::size_t>(qi)].first}, {},
                      pick(2) == 1));
        break;
      }
      case 9: {  // comment with a label
        CommentGate com;
        com.text = "step " + std::to_string(g);
        if (!live.empty()) com.labels.emplace_back(live[pick(live.size())].first, "w");
        c.gates.push_back(make_gate(std::move(com)));
        break;
      }
      case 10: {  // classical init + discard pair
        c.gates.push_back(make_gate(CInit{pick(2) == 1}, {next}));
        c.gates.push_back(make_gate(CDiscard{}, {next}));
        ++next;
        break;
      }
      case 11: {  // negatively controlled X
        int a = quantum_at(pick(live.size()));
        if (a < 0) break;
        int b = -1;
        for (std::size_t i = 0; i < live.size(); ++i)
          if (static_cast<int>(i) != a) b = static_cast<int>(i);
        if (b < 0) break;
        c.gates.push_back(
            make_gate(Named{NamedGate::X},
                      {live[static_cast<std::size_t>(a)].first},
                      {{live[static_cast<std::size_t>(b)].first, false}}));
        break;
      }
      default: break;
    }
  }
  c.outputs = live;
  return c;
}

}  // namespace quill::testing
