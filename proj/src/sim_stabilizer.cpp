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

#include <optional>
#include <unordered_map>

#include "quill/resources.hpp"
#include "quill/sim.hpp"

namespace quill {

namespace {

// Aaronson-Gottesman CHP tableau: rows 0..n-1 destabilizers, n..2n-1
// stabilizers, one scratch row for deterministic measurement. Columns are
// added as wires are initialized; terminated columns simply go idle (no
// later gate may touch a dead wire).
class Tableau {
 public:
  std::size_t add_qubit(bool value) {
    std::size_t a = n_;
    for (Row& r : rows_) {
      r.x.push_back(0);
      r.z.push_back(0);
    }
    Row destab, stab;
    destab.x.assign(n_ + 1, 0);
    destab.z.assign(n_ + 1, 0);
    stab = destab;
    destab.x[a] = 1;                              // X_a
    stab.z[a] = 1;                                // +/- Z_a
    stab.sign = value ? 2 : 0;
    rows_.insert(rows_.begin() + static_cast<long>(n_), std::move(destab));
    rows_.push_back(std::move(stab));
    ++n_;
    return a;
  }

  void apply_h(std::size_t a) {
    for (Row& r : rows_) {
      if (r.x[a] && r.z[a]) r.sign = (r.sign + 2) & 3;
      std::swap(r.x[a], r.z[a]);
    }
  }

  void apply_s(std::size_t a) {
    for (Row& r : rows_) {
      if (r.x[a] && r.z[a]) r.sign = (r.sign + 2) & 3;
      r.z[a] ^= r.x[a];
    }
  }

  void apply_x(std::size_t a) {
    for (Row& r : rows_)
      if (r.z[a]) r.sign = (r.sign + 2) & 3;
  }

  void apply_y(std::size_t a) {
    for (Row& r : rows_)
      if (r.z[a] != r.x[a]) r.sign = (r.sign + 2) & 3;
  }

  void apply_z(std::size_t a) {
    for (Row& r : rows_)
      if (r.x[a]) r.sign = (r.sign + 2) & 3;
  }

  void apply_cnot(std::size_t c, std::size_t t) {
    for (Row& r : rows_) {
      if (r.x[c] && r.z[t] && (r.x[t] ^ r.z[c] ^ 1)) r.sign = (r.sign + 2) & 3;
      r.x[t] ^= r.x[c];
      r.z[c] ^= r.z[t];
    }
  }

  void apply_cz(std::size_t c, std::size_t t) {
    apply_h(t);
    apply_cnot(c, t);
    apply_h(t);
  }

  /// nullopt when the outcome is random (probability 1/2 each way).
  std::optional<bool> deterministic_value(std::size_t a) const {
    for (std::size_t p = n_; p < 2 * n_; ++p)
      if (rows_[p].x[a]) return std::nullopt;
    Row scratch;
    scratch.x.assign(n_, 0);
    scratch.z.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      if (rows_[i].x[a]) row_mult(scratch, rows_[i + n_]);
    return scratch.sign == 2;
  }

  bool measure(std::size_t a, Rng& rng) {
    std::size_t p = 2 * n_;
    for (std::size_t i = n_; i < 2 * n_; ++i)
      if (rows_[i].x[a]) {
        p = i;
        break;
      }
    if (p == 2 * n_) {
      auto v = deterministic_value(a);
      return *v;
    }
    // Random outcome: every other row anticommuting with Z_a absorbs row p.
    for (std::size_t i = 0; i < 2 * n_; ++i)
      if (i != p && rows_[i].x[a]) row_mult(rows_[i], rows_[p]);
    rows_[p - n_] = rows_[p];
    bool outcome = (rng.next() & 1) != 0;
    Row& stab = rows_[p];
    stab.x.assign(n_, 0);
    stab.z.assign(n_, 0);
    stab.z[a] = 1;
    stab.sign = outcome ? 2 : 0;
    return outcome;
  }

 private:
  struct Row {
    std::vector<std::uint8_t> x, z;
    std::uint8_t sign = 0;  // phase exponent of i, mod 4 (0 or 2 for rows)
  };

  // left *= right, with the i-exponent bookkeeping of the CHP rowsum.
  static void row_mult(Row& left, const Row& right) {
    int phase = left.sign + right.sign;
    for (std::size_t j = 0; j < right.x.size(); ++j) {
      phase += pauli_phase(right.x[j], right.z[j], left.x[j], left.z[j]);
      left.x[j] ^= right.x[j];
      left.z[j] ^= right.z[j];
    }
    left.sign = static_cast<std::uint8_t>(((phase % 4) + 4) % 4);
  }

  // i-exponent contributed by multiplying Pauli (x1,z1) * (x2,z2).
  static int pauli_phase(int x1, int z1, int x2, int z2) {
    if (!x1 && !z1) return 0;
    if (x1 && z1) return z2 - x2;            // Y * P
    if (x1) return z2 * (2 * x2 - 1);        // X * P
    return x2 * (1 - 2 * z2);                // Z * P
  }

  std::size_t n_ = 0;
  std::vector<Row> rows_;
};

}  // namespace

std::vector<bool> sim_stabilizer(const Circuit& circuit,
                                 const std::vector<bool>& inputs, Rng& rng) {
  const Circuit c = circuit.subroutines.empty() ? circuit : flatten(circuit);
  if (inputs.size() != c.inputs.size())
    throw Error("input bit count differs from circuit inputs");

  Tableau tab;
  std::unordered_map<WireId, std::size_t> col;     // quantum wire -> column
  std::unordered_map<WireId, bool> classical;      // classical wire -> value
  for (std::size_t i = 0; i < c.inputs.size(); ++i) {
    if (c.inputs[i].second == WireKind::Quantum)
      col[c.inputs[i].first] = tab.add_qubit(inputs[i]);
    else
      classical[c.inputs[i].first] = inputs[i];
  }

  auto fire = [&](const Gate& g, std::size_t idx,
                  std::vector<std::size_t>& qctrls) -> bool {
    qctrls.clear();
    bool go = true;
    for (const Control& ct : g.controls) {
      auto cl = classical.find(ct.wire);
      if (cl != classical.end()) {
        if (cl->second != ct.positive) go = false;
      } else {
        if (!ct.positive) {
          // conjugate a negative quantum control to a positive one
          tab.apply_x(col.at(ct.wire));
        }
        qctrls.push_back(col.at(ct.wire));
      }
    }
    (void)idx;
    return go;
  };
  auto unfire = [&](const Gate& g) {
    for (const Control& ct : g.controls)
      if (!classical.count(ct.wire) && !ct.positive)
        tab.apply_x(col.at(ct.wire));
  };

  std::vector<std::size_t> qctrls;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.is<CommentGate>()) continue;
    if (const auto* x = g.as<QInit>()) {
      col[g.operands[0]] = tab.add_qubit(x->value);
      continue;
    }
    if (const auto* x = g.as<CInit>()) {
      classical[g.operands[0]] = x->value;
      continue;
    }
    if (g.is<CDiscard>()) {
      classical.erase(g.operands[0]);
      continue;
    }
    if (const auto* x = g.as<QTerm>()) {
      auto v = tab.deterministic_value(col.at(g.operands[0]));
      if (!v)
        throw AssertionFailed("QTerm at gate " + std::to_string(i) +
                              ": outcome not stabilizer-determined");
      if (*v != x->assertion)
        throw AssertionFailed("QTerm assertion violated at gate " +
                              std::to_string(i));
      col.erase(g.operands[0]);
      continue;
    }
    if (g.is<Meas>()) {
      std::size_t a = col.at(g.operands[0]);
      bool m = tab.measure(a, rng);
      col.erase(g.operands[0]);
      classical[g.operands[0]] = m;
      continue;
    }

    bool go = fire(g, i, qctrls);
    std::size_t t = col.at(g.operands[0]);
    if (go) {
      if (const auto* n = g.as<Named>()) {
        switch (n->name) {
          case NamedGate::H:
            if (!qctrls.empty()) throw NotClifford("controlled H");
            tab.apply_h(t);
            break;
          case NamedGate::X:
            if (qctrls.size() > 1) throw NotClifford("multiply controlled X");
            if (qctrls.size() == 1)
              tab.apply_cnot(qctrls[0], t);
            else
              tab.apply_x(t);
            break;
          case NamedGate::Y:
            if (!qctrls.empty()) throw NotClifford("controlled Y");
            tab.apply_y(t);
            break;
          case NamedGate::Z:
            if (qctrls.size() > 1) throw NotClifford("multiply controlled Z");
            if (qctrls.size() == 1)
              tab.apply_cz(qctrls[0], t);
            else
              tab.apply_z(t);
            break;
          case NamedGate::S:
            if (!qctrls.empty()) throw NotClifford("controlled S");
            if (g.inverted) {  // S^dag = S^3
              tab.apply_s(t);
              tab.apply_s(t);
            }
            tab.apply_s(t);
            break;
          case NamedGate::T:
            throw NotClifford("T gate");
        }
      } else if (const auto* r = g.as<Rot>()) {
        if (!qctrls.empty()) throw NotClifford("controlled rotation");
        if (r->power == 1) {
          tab.apply_z(t);
        } else if (r->power == 2) {
          if (g.inverted) {
            tab.apply_s(t);
            tab.apply_s(t);
          }
          tab.apply_s(t);
        } else {
          throw NotClifford("rotation of power > 2");
        }
      } else {
        throw NotClifford("gate " + std::to_string(i));
      }
    }
    unfire(g);
  }

  std::vector<bool> out;
  for (const auto& [w, k] : c.outputs) {
    if (k == WireKind::Classical)
      out.push_back(classical.at(w));
    else
      out.push_back(tab.measure(col.at(w), rng));
  }
  return out;
}

}  // namespace quill
