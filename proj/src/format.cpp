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

#include "quill/format.hpp"

#include <cctype>
#include <sstream>

namespace quill {

ParseError::ParseError(std::size_t line_no, const std::string& msg)
    : Error("parse error at line " + std::to_string(line_no) + ": " + msg),
      line(line_no) {}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

void write_wirelist(std::ostream& os,
                    const std::vector<std::pair<WireId, WireKind>>& ws) {
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) os << ", ";
    os << ws[i].first << ':'
       << (ws[i].second == WireKind::Quantum ? "Qbit" : "Cbit");
  }
}

void write_intlist(std::ostream& os, const std::vector<WireId>& ws) {
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) os << ", ";
    os << ws[i];
  }
}

void write_gate(std::ostream& os, const Gate& g) {
  if (const auto* x = g.as<QInit>()) {
    os << "QInit" << (x->value ? 1 : 0) << '(' << g.operands[0] << ')';
  } else if (const auto* x = g.as<QTerm>()) {
    os << "QTerm" << (x->assertion ? 1 : 0) << '(' << g.operands[0] << ')';
  } else if (const auto* x = g.as<CInit>()) {
    os << "CInit" << (x->value ? 1 : 0) << '(' << g.operands[0] << ')';
  } else if (g.is<CDiscard>()) {
    os << "CDiscard(" << g.operands[0] << ')';
  } else if (const auto* x = g.as<Named>()) {
    os << "QGate[" << quoted(named_gate_name(x->name)) << "](" << g.operands[0]
       << ')';
  } else if (const auto* x = g.as<Rot>()) {
    os << "QRot[" << x->power << "](" << g.operands[0] << ')';
  } else if (g.is<Meas>()) {
    os << "QMeas(" << g.operands[0] << ')';
  } else if (const auto* x = g.as<CommentGate>()) {
    os << "Comment[" << quoted(x->text) << "](";
    for (std::size_t i = 0; i < x->labels.size(); ++i) {
      if (i) os << ", ";
      os << x->labels[i].first << ':' << quoted(x->labels[i].second);
    }
    os << ')';
  } else if (const auto* x = g.as<SubCall>()) {
    os << "Call[" << quoted(x->name) << ',' << x->repetitions << "](";
    write_intlist(os, x->ins);
    os << ") -> (";
    write_intlist(os, x->outs);
    os << ')';
  }
  if (!g.controls.empty()) {
    os << " with controls=[";
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
      if (i) os << ',';
      os << (g.controls[i].positive ? '+' : '-') << g.controls[i].wire;
    }
    os << ']';
  }
  if (g.inverted) os << " with inverse";
}

void write_main(std::ostream& os, const Circuit& c) {
  os << "Inputs: ";
  write_wirelist(os, c.inputs);
  os << '\n';
  for (const Gate& g : c.gates) {
    write_gate(os, g);
    os << '\n';
  }
  os << "Outputs: ";
  write_wirelist(os, c.outputs);
  os << '\n';
}

// -- parsing ----------------------------------------------------------------

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  std::size_t line;

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(line, "expected " + expected);
  }

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  bool lit(const std::string& tok) {
    skip_ws();
    if (s.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& tok) {
    if (!lit(tok)) fail("'" + tok + "'");
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  std::uint64_t integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("integer");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + static_cast<std::uint64_t>(s[pos++] - '0');
    return v;
  }

  std::string quoted() {
    skip_ws();
    if (pos >= s.size() || s[pos] != '"') fail("quoted string");
    ++pos;
    std::string out;
    while (pos < s.size() && s[pos] != '"') {
      if (s[pos] == '\\' && pos + 1 < s.size()) ++pos;
      out += s[pos++];
    }
    if (pos >= s.size()) fail("closing quote");
    ++pos;
    return out;
  }
};

std::vector<WireId> parse_intlist(Cursor& cur, char terminator) {
  std::vector<WireId> ws;
  cur.skip_ws();
  if (cur.pos < cur.s.size() && cur.s[cur.pos] == terminator) return ws;
  for (;;) {
    ws.push_back(static_cast<WireId>(cur.integer()));
    if (!cur.lit(",")) break;
  }
  return ws;
}

std::vector<std::pair<WireId, WireKind>> parse_wirelist(Cursor& cur) {
  std::vector<std::pair<WireId, WireKind>> ws;
  if (cur.at_end()) return ws;
  for (;;) {
    WireId w = static_cast<WireId>(cur.integer());
    cur.expect(":");
    WireKind k;
    if (cur.lit("Qbit"))
      k = WireKind::Quantum;
    else if (cur.lit("Cbit"))
      k = WireKind::Classical;
    else
      cur.fail("'Qbit' or 'Cbit'");
    ws.emplace_back(w, k);
    if (!cur.lit(",")) break;
  }
  return ws;
}

Gate parse_gate(Cursor& cur) {
  Gate g;
  auto one_operand = [&] {
    cur.expect("(");
    g.operands.push_back(static_cast<WireId>(cur.integer()));
    cur.expect(")");
  };
  if (cur.lit("QInit0")) {
    g.kind = QInit{false};
    one_operand();
  } else if (cur.lit("QInit1")) {
    g.kind = QInit{true};
    one_operand();
  } else if (cur.lit("QTerm0")) {
    g.kind = QTerm{false};
    one_operand();
  } else if (cur.lit("QTerm1")) {
    g.kind = QTerm{true};
    one_operand();
  } else if (cur.lit("CInit0")) {
    g.kind = CInit{false};
    one_operand();
  } else if (cur.lit("CInit1")) {
    g.kind = CInit{true};
    one_operand();
  } else if (cur.lit("CDiscard")) {
    g.kind = CDiscard{};
    one_operand();
  } else if (cur.lit("QGate[")) {
    std::string name = cur.quoted();
    auto ng = named_gate_from(name);
    if (!ng) cur.fail("gate name in {H,X,Y,Z,S,T}");
    g.kind = Named{*ng};
    cur.expect("]");
    one_operand();
  } else if (cur.lit("QRot[")) {
    std::uint64_t m = cur.integer();
    if (m < 1) cur.fail("rotation power >= 1");
    g.kind = Rot{static_cast<std::uint32_t>(m)};
    cur.expect("]");
    one_operand();
  } else if (cur.lit("QMeas")) {
    g.kind = Meas{};
    one_operand();
  } else if (cur.lit("Comment[")) {
    CommentGate com;
    com.text = cur.quoted();
    cur.expect("]");
    cur.expect("(");
    cur.skip_ws();
    if (!cur.lit(")")) {
      for (;;) {
        WireId w = static_cast<WireId>(cur.integer());
        cur.expect(":");
        com.labels.emplace_back(w, cur.quoted());
        if (!cur.lit(",")) break;
      }
      cur.expect(")");
    }
    g.kind = std::move(com);
  } else if (cur.lit("Call[")) {
    SubCall call;
    call.name = cur.quoted();
    cur.expect(",");
    call.repetitions = cur.integer();
    cur.expect("]");
    cur.expect("(");
    call.ins = parse_intlist(cur, ')');
    cur.expect(")");
    cur.expect("->");
    cur.expect("(");
    call.outs = parse_intlist(cur, ')');
    cur.expect(")");
    g.kind = std::move(call);
  } else {
    cur.fail("a gate");
  }
  if (cur.lit("with controls=[")) {
    for (;;) {
      bool pos;
      if (cur.lit("+"))
        pos = true;
      else if (cur.lit("-"))
        pos = false;
      else
        cur.fail("'+' or '-'");
      g.controls.push_back({static_cast<WireId>(cur.integer()), pos});
      if (!cur.lit(",")) break;
    }
    cur.expect("]");
  }
  if (cur.lit("with inverse")) g.inverted = true;
  if (!cur.at_end()) cur.fail("end of line");
  return g;
}

// Strips a trailing `--` comment, respecting quoted strings.
std::string strip_comment(const std::string& line) {
  bool in_quote = false;
  for (std::size_t i = 0; i + 1 < line.size(); ++i) {
    if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) in_quote = !in_quote;
    if (!in_quote && line[i] == '-' && line[i + 1] == '-')
      return line.substr(0, i);
  }
  return line;
}

struct LineReader {
  std::vector<std::pair<std::size_t, std::string>> lines;  // line no, text
  std::size_t idx = 0;

  explicit LineReader(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    std::size_t n = 0;
    while (std::getline(is, raw)) {
      ++n;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::string stripped = strip_comment(raw);
      bool blank = stripped.find_first_not_of(" \t") == std::string::npos;
      if (!blank) lines.emplace_back(n, stripped);
    }
  }

  bool done() const { return idx >= lines.size(); }
  std::size_t line_no() const {
    return done() ? (lines.empty() ? 1 : lines.back().first + 1)
                  : lines[idx].first;
  }
  const std::string& peek() const { return lines[idx].second; }
  std::string next() { return lines[idx++].second; }
};

// Parses one "Inputs: ... Outputs: ..." block.
Circuit parse_main(LineReader& rd) {
  Circuit c;
  if (rd.done()) throw ParseError(rd.line_no(), "expected 'Inputs:'");
  {
    Cursor cur{rd.peek(), 0, rd.line_no()};
    if (!cur.lit("Inputs:")) cur.fail("'Inputs:'");
    c.inputs = parse_wirelist(cur);
    if (!cur.at_end()) cur.fail("end of line");
    rd.next();
  }
  for (;;) {
    if (rd.done()) throw ParseError(rd.line_no(), "expected 'Outputs:'");
    Cursor cur{rd.peek(), 0, rd.line_no()};
    if (cur.lit("Outputs:")) {
      c.outputs = parse_wirelist(cur);
      if (!cur.at_end()) cur.fail("end of line");
      rd.next();
      return c;
    }
    c.gates.push_back(parse_gate(cur));
    rd.next();
  }
}

}  // namespace

std::string serialize(const Circuit& c) {
  std::ostringstream os;
  for (const auto& [name, body] : c.subroutines) {
    os << "Subroutine: " << quoted(name) << '\n';
    write_main(os, body);
  }
  write_main(os, c);
  return os.str();
}

Circuit parse(const std::string& text) {
  LineReader rd(text);
  Circuit c;
  while (!rd.done()) {
    Cursor cur{rd.peek(), 0, rd.line_no()};
    if (!cur.lit("Subroutine:")) break;
    std::string name = cur.quoted();
    if (!cur.at_end()) cur.fail("end of line");
    rd.next();
    Circuit body = parse_main(rd);
    if (!c.subroutines.emplace(name, std::move(body)).second)
      throw ParseError(rd.line_no(), "duplicate subroutine name " + name);
  }
  Circuit main = parse_main(rd);
  if (!rd.done()) throw ParseError(rd.line_no(), "trailing content");
  main.subroutines = std::move(c.subroutines);
  return main;
}

}  // namespace quill
