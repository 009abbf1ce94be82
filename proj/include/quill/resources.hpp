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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>

#include "quill/ir.hpp"

namespace quill {

using BigInt = boost::multiprecision::cpp_int;

/// Gate, qubit and ancilla counts. Counts are arbitrary precision: boxed
/// subcircuit calls multiply by their repetition factor without flattening,
/// so totals can dwarf anything that fits a machine word.
struct ResourceReport {
  /// Per gate class, e.g. "X, 2 controls", "R(3), 1 control", "init",
  /// "term", "measure", "discard". Comments count as nothing.
  std::map<std::string, BigInt> gate_counts;
  BigInt total = 0;
  /// Peak number of simultaneously live wires.
  std::uint64_t max_width = 0;
  /// Total quantum allocations (QInit count).
  BigInt ancillas = 0;
  BigInt measurements = 0;
};

/// Reporting class of a single gate (empty for comments).
std::string gate_class(const Gate& g);

/// Hierarchical resource count: each distinct subroutine body is counted
/// once and memoized; a call contributes repetitions x the callee's report.
/// Runs in time proportional to the flat size of the distinct bodies, not
/// the flattened circuit.
ResourceReport count(const Circuit& c);

struct SizeBound : Error {
  using Error::Error;
};

/// Inlines subroutine calls into a flat circuit, renaming callee wires into
/// the caller's id space and repeating bodies per their repetition count.
/// `depth` limits how many call levels are expanded (UINT32_MAX = all).
/// Throws SizeBound once the flat gate count exceeds max_gates.
Circuit flatten(const Circuit& c, std::uint32_t depth = UINT32_MAX,
                std::uint64_t max_gates = 10'000'000);

/// Accumulates a report from a raw gate stream (no subroutine calls); used
/// for counting streamed extractions without materializing the circuit.
class StreamCounter {
 public:
  explicit StreamCounter(std::uint64_t initial_live = 0)
      : live_(initial_live), report_{} {
    report_.max_width = initial_live;
  }

  void feed(const Gate& g);
  const ResourceReport& report() const { return report_; }

 private:
  std::uint64_t live_;
  ResourceReport report_;
};

}  // namespace quill
