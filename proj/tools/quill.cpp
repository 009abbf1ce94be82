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

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "quill/examples.hpp"
#include "quill/format.hpp"
#include "quill/resources.hpp"
#include "quill/sim.hpp"
#include "quill/transform.hpp"

namespace {

using namespace quill;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& name) {
  if (name == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(name);
  if (!f) throw UsageError("cannot open file: " + name);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Resolves an example name (with --n / --shapeparameters) or a file path;
/// `-` reads a circuit document from stdin.
Circuit load_circuit(const std::string& name, std::size_t n,
                     const std::string& shape_text) {
  using namespace quill::examples;
  if (name == "plus_minus") return plus_minus_circuit(false);
  if (name == "share") return share_circuit();
  if (name == "bell00") return bell00_circuit();
  if (name == "alice") return alice_circuit();
  if (name == "bob") return bob_circuit();
  if (name == "teleport") return teleport_circuit();
  if (name == "teleport_generic")
    return teleport_generic_circuit(parse_shape(shape_text));
  if (name == "qft") return qft_circuit(n);
  if (name == "qft_inverse") return qft_inverse_circuit(n);
  if (name == "qft_add") return qft_add_circuit(n);
  if (name == "qft_add_boxed") return qft_add_boxed_circuit(n);
  if (name == "adder_circ") return adder_circ();
  if (name == "adder_reversible") return adder_reversible_circuit();
  if (name == "adder_binary") return adder_binary_circuit();
  if (name == "-" || name.find('.') != std::string::npos ||
      name.find('/') != std::string::npos)
    return parse(read_source(name));
  throw UsageError("unknown example: " + name);
}

nlohmann::json gate_to_json(const Gate& g) {
  nlohmann::json j;
  if (const auto* x = g.as<QInit>()) {
    j["kind"] = "QInit";
    j["value"] = x->value;
  } else if (const auto* x = g.as<QTerm>()) {
    j["kind"] = "QTerm";
    j["value"] = x->assertion;
  } else if (const auto* x = g.as<CInit>()) {
    j["kind"] = "CInit";
    j["value"] = x->value;
  } else if (g.is<CDiscard>()) {
    j["kind"] = "CDiscard";
  } else if (const auto* x = g.as<Named>()) {
    j["kind"] = "QGate";
    j["name"] = named_gate_name(x->name);
  } else if (const auto* x = g.as<Rot>()) {
    j["kind"] = "QRot";
    j["power"] = x->power;
  } else if (g.is<Meas>()) {
    j["kind"] = "Measure";
  } else if (const auto* x = g.as<CommentGate>()) {
    j["kind"] = "Comment";
    j["text"] = x->text;
    auto labels = nlohmann::json::array();
    for (const auto& [w, l] : x->labels) labels.push_back({w, l});
    j["labels"] = labels;
  } else if (const auto* x = g.as<SubCall>()) {
    j["kind"] = "Call";
    j["name"] = x->name;
    j["ins"] = x->ins;
    j["outs"] = x->outs;
    j["repetitions"] = static_cast<std::uint64_t>(x->repetitions);
  }
  j["operands"] = g.operands;
  if (!g.controls.empty()) {
    auto cs = nlohmann::json::array();
    for (const auto& c : g.controls) cs.push_back({c.wire, c.positive});
    j["controls"] = cs;
  }
  if (g.inverted) j["inverted"] = true;
  return j;
}

nlohmann::json circuit_to_json(const Circuit& c) {
  auto wires = [](const std::vector<std::pair<WireId, WireKind>>& ws) {
    auto a = nlohmann::json::array();
    for (const auto& [w, k] : ws)
      a.push_back({w, k == WireKind::Quantum ? "Qbit" : "Cbit"});
    return a;
  };
  nlohmann::json j;
  j["inputs"] = wires(c.inputs);
  j["outputs"] = wires(c.outputs);
  auto gs = nlohmann::json::array();
  for (const Gate& g : c.gates) gs.push_back(gate_to_json(g));
  j["gates"] = gs;
  auto subs = nlohmann::json::object();
  for (const auto& [name, body] : c.subroutines) subs[name] = circuit_to_json(body);
  j["subroutines"] = subs;
  return j;
}

int cmd_print(const Circuit& c, const std::string& format) {
  if (format == "json")
    std::cout << circuit_to_json(c).dump(2) << "\n";
  else
    std::cout << serialize(c);
  return 0;
}

std::vector<bool> parse_bits(const std::string& s, std::size_t want) {
  std::vector<bool> bits;
  for (char ch : s) {
    if (ch == '0')
      bits.push_back(false);
    else if (ch == '1')
      bits.push_back(true);
    else
      throw UsageError("inputs must be a string of 0s and 1s");
  }
  if (bits.size() != want)
    throw UsageError("circuit expects " + std::to_string(want) +
                     " input bits, got " + std::to_string(bits.size()));
  return bits;
}

int cmd_simulate(const Circuit& c, const std::string& sim,
                 const std::string& inputs, std::uint64_t seed,
                 std::uint64_t runs) {
  std::vector<bool> in = parse_bits(inputs, c.inputs.size());
  std::map<std::string, std::uint64_t> freq;
  Rng rng(seed);
  for (std::uint64_t r = 0; r < runs; ++r) {
    std::vector<bool> out;
    if (sim == "classical")
      out = sim_classical(c, in);
    else if (sim == "stabilizer")
      out = sim_stabilizer(c, in, rng);
    else if (sim == "vector")
      out = sim_vector(c, in, rng);
    else
      throw UsageError("unknown simulator: " + sim);
    std::string line;
    for (bool b : out) line += b ? '1' : '0';
    std::cout << line << "\n";
    ++freq[line];
  }
  if (runs > 1) {
    std::cout << "# frequencies over " << runs << " runs\n";
    for (const auto& [line, n] : freq)
      std::cout << "# " << line << " " << n << " "
                << static_cast<double>(n) / static_cast<double>(runs) << "\n";
  }
  return 0;
}

int cmd_count(const Circuit& c, bool do_flatten, bool json) {
  ResourceReport r = count(do_flatten ? flatten(c) : c);
  if (json) {
    nlohmann::json j;
    auto classes = nlohmann::json::object();
    for (const auto& [cls, n] : r.gate_counts) classes[cls] = n.str();
    j["gate_counts"] = classes;
    j["total"] = r.total.str();
    j["max_width"] = r.max_width;
    j["ancillas"] = r.ancillas.str();
    j["measurements"] = r.measurements.str();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::size_t width = 10;
  for (const auto& [cls, n] : r.gate_counts) width = std::max(width, cls.size());
  for (const auto& [cls, n] : r.gate_counts)
    std::cout << cls << std::string(width - cls.size() + 2, ' ') << n.str()
              << "\n";
  std::cout << std::string(width + 2, '-') << "\n";
  std::cout << "total" << std::string(width - 3, ' ') << r.total.str() << "\n";
  std::cout << "max width" << std::string(width - 7, ' ') << r.max_width
            << "\n";
  std::cout << "ancillas" << std::string(width - 6, ' ') << r.ancillas.str()
            << "\n";
  std::cout << "measurements" << std::string(width - 10, ' ')
            << r.measurements.str() << "\n";
  return 0;
}

int cmd_decompose(const Circuit& c, const std::string& gateset) {
  if (gateset == "binary")
    std::cout << serialize(decompose_binary(c));
  else if (gateset == "toffoli")
    std::cout << serialize(decompose_toffoli(c));
  else
    throw UsageError("unknown gate set: " + gateset);
  return 0;
}

/// Compiles a boolean-function description to a circuit. The file holds one
/// expression per line (outputs in order) over variables x0, x1, ...;
/// blank lines and lines starting with '#' are skipped. An optional
/// `inputs: N` first line pads the arity beyond the highest variable used.
int cmd_compile(const std::string& file) {
  std::istringstream in(read_source(file));
  ClassicalFunction f;
  std::string line;
  std::uint32_t declared = 0;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.compare(first, 7, "inputs:") == 0) {
      declared = static_cast<std::uint32_t>(
          std::stoul(line.substr(first + 7)));
      continue;
    }
    f.outputs.push_back(parse_boolexpr(line));
  }
  if (f.outputs.empty()) throw UsageError("no expressions in " + file);
  for (const auto& e : f.outputs) f.arity_in = std::max(f.arity_in, e.arity());
  f.arity_in = std::max(f.arity_in, declared);
  Shape in_shape =
      Shape::tuple(std::vector<Shape>(f.arity_in, Shape::leaf()));
  std::cout << serialize(extract(in_shape, compile_classical(f)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quill: circuit construction, simulation and analysis"};
  app.require_subcommand(1);

  std::string source, format = "text", sim = "vector", inputs, gateset,
              shape_text = "q", boolfile;
  std::size_t n = 3;
  std::uint64_t runs = 1;
  std::uint64_t seed = 0;
  if (const char* env = std::getenv("QUILL_SEED")) seed = std::strtoull(env, nullptr, 10);

  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("source", source, "example name, file path, or - for stdin")
        ->required();
    cmd->add_option("--n", n, "register size for qft/qft_add examples");
    cmd->add_option("--shape", shape_text,
                    "shape for teleport_generic, e.g. (q,q) or [q;3]");
  };

  auto* p = app.add_subcommand("print", "write a circuit document to stdout");
  add_source(p);
  p->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* s = app.add_subcommand("simulate", "run a circuit on basis inputs");
  add_source(s);
  s->add_option("--sim", sim)
      ->check(CLI::IsMember({"classical", "stabilizer", "vector"}));
  s->add_option("--inputs", inputs, "input bits, e.g. 0110");
  s->add_option("--seed", seed, "rng seed (default: QUILL_SEED or 0)");
  s->add_option("--runs", runs);

  auto* k = app.add_subcommand("count", "hierarchical resource counts");
  add_source(k);
  bool do_flatten = false, json_out = false;
  k->add_flag("--flatten", do_flatten, "inline all subroutine calls first");
  k->add_flag("--json", json_out);

  auto* d = app.add_subcommand("decompose", "rewrite into a smaller gate set");
  add_source(d);
  d->add_option("--gateset", gateset)
      ->required()
      ->check(CLI::IsMember({"binary", "toffoli"}));

  auto* cp = app.add_subcommand(
      "compile", "compile a boolean-expression file to a circuit");
  cp->add_option("file", boolfile, "expressions over x0,x1,... (- for stdin)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cp->parsed()) return cmd_compile(boolfile);
    Circuit c = load_circuit(source, n, shape_text);
    if (p->parsed()) return cmd_print(c, format);
    if (s->parsed()) return cmd_simulate(c, sim, inputs, seed, runs);
    if (k->parsed()) return cmd_count(c, do_flatten, json_out);
    if (d->parsed()) return cmd_decompose(c, gateset);
  } catch (const AssertionFailed& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
