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

#include <string>

#include "quill/ir.hpp"

namespace quill {

struct ParseError : Error {
  std::size_t line;
  ParseError(std::size_t line_no, const std::string& msg);
};

/// Canonical text form of a circuit. parse(serialize(c)) == c, and
/// serialize(parse(serialize(c))) is byte-identical to serialize(c).
///
///   Subroutine: "QFT"
///   Inputs: 0:Qbit, 1:Qbit
///   QGate["H"](0)
///   QRot[2](1) with controls=[+0] with inverse
///   Outputs: 1:Qbit, 0:Qbit
///   Inputs: 0:Qbit, 1:Qbit
///   Call["QFT",1](0, 1) -> (1, 0)
///   Outputs: 1:Qbit, 0:Qbit
///
/// `--` starts a comment running to end of line.
std::string serialize(const Circuit& c);

/// Inverse of serialize. Throws ParseError with a line number; the parsed
/// circuit is not validated (run validate separately).
Circuit parse(const std::string& text);

}  // namespace quill
