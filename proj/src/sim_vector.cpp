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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "quill/resources.hpp"
#include "quill/sim.hpp"

namespace quill {

std::size_t StateVector::bit_of(WireId w) const {
  auto it = std::find(wires.begin(), wires.end(), w);
  if (it == wires.end()) throw Error("wire not in state vector");
  return static_cast<std::size_t>(it - wires.begin());
}

namespace {

constexpr double kTermTolerance = 1e-9;

struct Mat2 {
  Amplitude a, b, c, d;  // [[a, b], [c, d]]
};

Mat2 dagger(const Mat2& m) {
  return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

Mat2 gate_matrix(const Gate& g) {
  using std::numbers::pi;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Mat2 m{};
  if (const auto* n = g.as<Named>()) {
    switch (n->name) {
      case NamedGate::H: m = {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2}; break;
      case NamedGate::X: m = {0, 1, 1, 0}; break;
      case NamedGate::Y: m = {0, Amplitude(0, -1), Amplitude(0, 1), 0}; break;
      case NamedGate::Z: m = {1, 0, 0, -1}; break;
      case NamedGate::S: m = {1, 0, 0, Amplitude(0, 1)}; break;
      case NamedGate::T:
        m = {1, 0, 0, std::polar(1.0, pi / 4.0)};
        break;
    }
  } else if (const auto* r = g.as<Rot>()) {
    double theta = 2.0 * pi / std::pow(2.0, static_cast<double>(r->power));
    m = {1, 0, 0, std::polar(1.0, theta)};
  } else {
    throw Error("no matrix for this gate kind");
  }
  return g.inverted ? dagger(m) : m;
}

/// Applies gates to a dense state, tracking classical wire values and the
/// wire -> tensor-factor mapping. rng == nullptr forbids measurement.
class VectorEngine {
 public:
  VectorEngine(int max_qubits, Rng* rng) : max_(max_qubits), rng_(rng) {
    state_.amps = {1.0};
  }

  StateVector& state() { return state_; }
  std::unordered_map<WireId, bool>& classical() { return classical_; }

  void add_qubit(WireId w, bool value) {
    if (state_.wires.size() >= static_cast<std::size_t>(max_))
      throw TooManyQubits("more than " + std::to_string(max_) +
                          " live qubits");
    std::size_t n = state_.amps.size();
    std::vector<Amplitude> next(2 * n, 0.0);
    // New wire occupies the top bit.
    std::size_t offset = value ? n : 0;
    for (std::size_t i = 0; i < n; ++i) next[i + offset] = state_.amps[i];
    state_.amps = std::move(next);
    state_.wires.push_back(w);
  }

  /// Seeds the engine with a prepared state over the given wires.
  void seed(StateVector initial) { state_ = std::move(initial); }

  void step(const Gate& g, std::size_t idx) {
    if (g.is<CommentGate>()) return;
    if (const auto* x = g.as<QInit>()) {
      add_qubit(g.operands[0], x->value);
    } else if (const auto* x = g.as<CInit>()) {
      classical_[g.operands[0]] = x->value;
    } else if (g.is<CDiscard>()) {
      classical_.erase(g.operands[0]);
    } else if (const auto* x = g.as<QTerm>()) {
      project_out(g.operands[0], x->assertion, /*tolerant=*/false, idx);
    } else if (g.is<Meas>()) {
      if (!rng_) throw Error("measurement in a measurement-free simulation");
      classical_[g.operands[0]] = measure(g.operands[0]);
    } else {
      apply_unitary(g);
    }
  }

  bool measure(WireId w) {
    std::size_t bit = state_.bit_of(w);
    std::size_t mask = std::size_t{1} << bit;
    double p1 = 0.0;
    for (std::size_t i = 0; i < state_.amps.size(); ++i)
      if (i & mask) p1 += std::norm(state_.amps[i]);
    bool outcome = rng_->uniform() < p1;
    collapse(bit, outcome, outcome ? p1 : 1.0 - p1);
    state_.wires.erase(state_.wires.begin() + static_cast<long>(bit));
    return outcome;
  }

 private:
  void collapse(std::size_t bit, bool value, double mass) {
    std::size_t mask = std::size_t{1} << bit;
    std::size_t n = state_.amps.size();
    std::vector<Amplitude> next(n / 2);
    double renorm = 1.0 / std::sqrt(mass);
    for (std::size_t i = 0; i < n; ++i) {
      if (((i & mask) != 0) != value) continue;
      std::size_t low = i & (mask - 1);
      std::size_t high = (i >> (bit + 1)) << bit;
      next[high | low] = state_.amps[i] * renorm;
    }
    state_.amps = std::move(next);
  }

  void project_out(WireId w, bool value, bool tolerant, std::size_t idx) {
    (void)tolerant;
    std::size_t bit = state_.bit_of(w);
    std::size_t mask = std::size_t{1} << bit;
    double wrong = 0.0;
    for (std::size_t i = 0; i < state_.amps.size(); ++i)
      if (((i & mask) != 0) != value) wrong += std::norm(state_.amps[i]);
    if (wrong > kTermTolerance)
      throw AssertionFailed("QTerm assertion violated at gate " +
                            std::to_string(idx) + " (discarded mass " +
                            std::to_string(wrong) + ")");
    collapse(bit, value, 1.0 - wrong);
    state_.wires.erase(state_.wires.begin() + static_cast<long>(bit));
  }

  void apply_unitary(const Gate& g) {
    Mat2 m = gate_matrix(g);
    std::size_t bit = state_.bit_of(g.operands[0]);
    std::size_t mask = std::size_t{1} << bit;
    std::size_t cmask = 0, cvalue = 0;
    for (const Control& ct : g.controls) {
      auto cl = classical_.find(ct.wire);
      if (cl != classical_.end()) {
        if (cl->second != ct.positive) return;  // classical veto
        continue;
      }
      std::size_t cbit = std::size_t{1} << state_.bit_of(ct.wire);
      cmask |= cbit;
      if (ct.positive) cvalue |= cbit;
    }
    for (std::size_t i = 0; i < state_.amps.size(); ++i) {
      if (i & mask) continue;
      if ((i & cmask) != cvalue) {
        // the partner index must also fail the controls, by construction
        continue;
      }
      std::size_t j = i | mask;
      Amplitude a0 = state_.amps[i];
      Amplitude a1 = state_.amps[j];
      state_.amps[i] = m.a * a0 + m.b * a1;
      state_.amps[j] = m.c * a0 + m.d * a1;
    }
  }

  int max_;
  Rng* rng_;
  StateVector state_;
  std::unordered_map<WireId, bool> classical_;
};

Circuit flat(const Circuit& c) {
  return c.subroutines.empty() ? c : flatten(c);
}

VectorEngine run(const Circuit& c, const std::vector<bool>& inputs, Rng* rng,
                 int max_qubits) {
  if (inputs.size() != c.inputs.size())
    throw Error("input bit count differs from circuit inputs");
  VectorEngine eng(max_qubits, rng);
  for (std::size_t i = 0; i < c.inputs.size(); ++i) {
    if (c.inputs[i].second == WireKind::Quantum)
      eng.add_qubit(c.inputs[i].first, inputs[i]);
    else
      eng.classical()[c.inputs[i].first] = inputs[i];
  }
  for (std::size_t i = 0; i < c.gates.size(); ++i) eng.step(c.gates[i], i);
  return eng;
}

}  // namespace

std::vector<bool> sim_vector(const Circuit& circuit,
                             const std::vector<bool>& inputs, Rng& rng,
                             int max_qubits) {
  const Circuit c = flat(circuit);
  VectorEngine eng = run(c, inputs, &rng, max_qubits);
  std::vector<bool> out;
  for (const auto& [w, k] : c.outputs) {
    if (k == WireKind::Classical)
      out.push_back(eng.classical().at(w));
    else
      out.push_back(eng.measure(w));
  }
  return out;
}

StateVector sim_vector_state(const Circuit& circuit,
                             const std::vector<bool>& inputs, int max_qubits) {
  const Circuit c = flat(circuit);
  VectorEngine eng = run(c, inputs, nullptr, max_qubits);
  return std::move(eng.state());
}

StateVector sim_vector_from(const Circuit& circuit, const StateVector& initial,
                            Rng& rng, int max_qubits) {
  const Circuit c = flat(circuit);
  VectorEngine eng(max_qubits, &rng);
  StateVector seeded = initial;
  // The caller's state is given over c.inputs in declaration order; the
  // engine's convention of "wire order = tensor bit order" must agree.
  eng.seed(std::move(seeded));
  for (std::size_t i = 0; i < c.gates.size(); ++i) eng.step(c.gates[i], i);
  return std::move(eng.state());
}

Unitary circuit_unitary(const Circuit& circuit, int max_qubits) {
  const Circuit c = flat(circuit);
  std::size_t n = c.inputs.size();
  std::size_t m = c.outputs.size();
  if (m < n) throw Error("circuit_unitary: fewer outputs than inputs");
  for (const auto& [w, k] : c.inputs)
    if (k != WireKind::Quantum) throw Error("circuit_unitary: classical input");
  for (const auto& [w, k] : c.outputs)
    if (k != WireKind::Quantum)
      throw Error("circuit_unitary: classical output");
  if (m > static_cast<std::size_t>(max_qubits))
    throw TooManyQubits("unitary limited to " + std::to_string(max_qubits) +
                        " qubits");
  Unitary u;
  u.rows = std::size_t{1} << m;
  u.cols = std::size_t{1} << n;
  u.entries.assign(u.rows * u.cols, 0.0);
  for (std::size_t col = 0; col < u.cols; ++col) {
    // Big-endian: input wire 0 is the most significant bit of `col`.
    std::vector<bool> bits(n);
    for (std::size_t j = 0; j < n; ++j) bits[j] = (col >> (n - 1 - j)) & 1;
    VectorEngine eng = run(c, bits, nullptr, max_qubits);
    const StateVector& st = eng.state();
    if (st.amps.size() != u.rows)
      throw Error("circuit_unitary: live width differs from output arity");
    for (std::size_t idx = 0; idx < u.rows; ++idx) {
      // Translate the engine's internal index into the big-endian row.
      std::size_t row = 0;
      for (std::size_t j = 0; j < m; ++j) {
        std::size_t bit = st.bit_of(c.outputs[j].first);
        if ((idx >> bit) & 1) row |= std::size_t{1} << (m - 1 - j);
      }
      u.at(row, col) += st.amps[idx];
    }
  }
  return u;
}

double unitary_distance(const Unitary& a, const Unitary& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw Error("dimension mismatch");
  // Align global phase on the largest entry of a.
  std::size_t best = 0;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (std::abs(a.entries[i]) > std::abs(a.entries[best])) best = i;
  Amplitude phase(1.0, 0.0);
  if (std::abs(b.entries[best]) > 1e-12 && std::abs(a.entries[best]) > 1e-12)
    phase = (a.entries[best] / std::abs(a.entries[best])) /
            (b.entries[best] / std::abs(b.entries[best]));
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    worst = std::max(worst, std::abs(a.entries[i] - phase * b.entries[i]));
  return worst;
}

}  // namespace quill
