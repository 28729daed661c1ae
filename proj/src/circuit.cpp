// Copyright 2026 The qect authors
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

#include "qect/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

namespace qect {

namespace {

struct Token {
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      i++;
      continue;
    }
    size_t b = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      i++;
    out.push_back({line.substr(b, i - b), static_cast<int>(b) + 1});
  }
  return out;
}

std::optional<std::complex<double>> parse_complex(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto parse_part = [](std::string p, bool imag) -> std::optional<double> {
    if (imag) {
      if (p.empty() || p.back() != 'i') return std::nullopt;
      p.pop_back();
      if (p.empty() || p == "+") return 1.0;
      if (p == "-") return -1.0;
    }
    try {
      size_t used = 0;
      double v = std::stod(p, &used);
      if (used != p.size()) return std::nullopt;
      return v;
    } catch (...) {
      return std::nullopt;
    }
  };
  // split at the last +/- that is not leading
  size_t split = std::string::npos;
  for (size_t i = s.size(); i-- > 1;)
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  if (split != std::string::npos && s.back() == 'i') {
    auto re = parse_part(s.substr(0, split), false);
    auto im = parse_part(s.substr(split), true);
    if (re && im) return std::complex<double>{*re, *im};
  }
  if (s.back() == 'i') {
    auto im = parse_part(s, true);
    if (im) return std::complex<double>{0, *im};
    return std::nullopt;
  }
  auto re = parse_part(s, false);
  if (re) return std::complex<double>{*re, 0};
  return std::nullopt;
}

bool valid_pauli_label(const std::string& s) {
  std::string body = s;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) body.erase(0, 1);
  if (body.empty()) return false;
  return std::all_of(body.begin(), body.end(), [](char c) {
    return c == 'I' || c == 'X' || c == 'Y' || c == 'Z';
  });
}

const std::set<std::string> kPrepStates = {"zero", "one",   "plus",
                                           "minus", "plusi", "minusi"};
const std::map<std::string, uint32_t> kGateArity = {
    {"id", 1}, {"h", 1}, {"s", 1}, {"sdg", 1}, {"x", 1},
    {"y", 1},  {"z", 1}, {"t", 1}, {"cx", 2}};
const std::map<std::string, uint32_t> kCfnArity = {
    {"xor", 2}, {"and", 2}, {"or", 2}, {"not", 1}, {"mux", 3}};

[[noreturn]] void fail(const char* cat, int line, int col, const std::string& m) {
  throw CircuitError(cat, line, col, m);
}

}  // namespace

CircuitIR parse_circuit(const std::string& text) {
  CircuitIR ir;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool past_inputs = false;
  int auto_noise = 0;

  // wire environment for signature checking
  std::map<std::string, Wire> live;
  std::set<std::string> used_names;
  std::map<std::string, bool> noise_traced;

  auto need_new = [&](const Token& t, int line) {
    if (used_names.count(t.text))
      fail("signature", line, t.col, "wire name '" + t.text + "' already used");
    used_names.insert(t.text);
  };
  auto need_live = [&](const Token& t, int line, WireKind kind) -> Wire {
    auto it = live.find(t.text);
    if (it == live.end())
      fail("signature", line, t.col, "wire '" + t.text + "' is not live here");
    if (it->second.kind != kind)
      fail("signature", line, t.col,
           std::string("wire '") + t.text + "' has the wrong kind (expected " +
               (kind == WireKind::Quantum ? "quantum" : "classical") + ")");
    return it->second;
  };

  while (std::getline(in, raw)) {
    lineno++;
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;
    Statement st;
    st.line = lineno;

    auto expect_min = [&](size_t k, const char* what) {
      if (toks.size() < k)
        fail("syntax", lineno, toks.back().col, std::string("expected ") + what);
    };
    auto arrow_at = [&]() -> size_t {
      for (size_t i = 1; i < toks.size(); i++)
        if (toks[i].text == "->") return i;
      return 0;
    };

    if (head == "input") {
      if (past_inputs)
        fail("syntax", lineno, toks[0].col, "inputs must precede operations");
      expect_min(2, "a wire name");
      st.op = Statement::Op::Input;
      need_new(toks[1], lineno);
      st.args.push_back(toks[1].text);
      if (toks.size() == 2 || toks[2].text == "qubit") {
        st.kind = "qubit";
        live[toks[1].text] = quantum_wire();
      } else if (toks[2].text == "cbit") {
        st.kind = "cbit";
        st.arity = 2;
        if (toks.size() > 3) {
          st.arity = static_cast<uint32_t>(std::atoi(toks[3].text.c_str()));
          if (st.arity < 2)
            fail("syntax", lineno, toks[3].col, "cbit arity must be >= 2");
        }
        live[toks[1].text] = classical_wire(st.arity);
      } else {
        fail("syntax", lineno, toks[2].col, "expected 'qubit' or 'cbit'");
      }
      ir.statements.push_back(std::move(st));
      continue;
    }
    past_inputs = true;

    if (head == "prep") {
      expect_min(3, "a state and wire names");
      const std::string& state = toks[1].text;
      if (state == "stab") {
        st.op = Statement::Op::PrepStab;
        size_t arr = arrow_at();
        if (!arr) fail("syntax", lineno, toks[1].col, "prep stab needs '->'");
        for (size_t i = 2; i < arr; i++) {
          if (!valid_pauli_label(toks[i].text))
            fail("lexical", lineno, toks[i].col,
                 "invalid Pauli label '" + toks[i].text + "'");
          st.paulis.push_back(SignedPauli::from_label(toks[i].text));
        }
        for (size_t i = arr + 1; i < toks.size(); i++) {
          need_new(toks[i], lineno);
          st.outs.push_back(toks[i].text);
          live[toks[i].text] = quantum_wire();
        }
        if (st.paulis.empty() || st.paulis.size() != st.outs.size())
          fail("signature", lineno, toks[1].col,
               "prep stab needs one generator per new wire");
        for (const auto& g : st.paulis)
          if (g.num_qubits() != st.outs.size())
            fail("signature", lineno, toks[1].col,
                 "generator length does not match wire count");
      } else if (state == "bell") {
        st.op = Statement::Op::Prep;
        st.kind = "bell";
        if (toks.size() != 4)
          fail("syntax", lineno, toks[1].col, "prep bell takes two wires");
        for (size_t i = 2; i < 4; i++) {
          need_new(toks[i], lineno);
          st.outs.push_back(toks[i].text);
          live[toks[i].text] = quantum_wire();
        }
      } else if (kPrepStates.count(state)) {
        st.op = Statement::Op::Prep;
        st.kind = state;
        if (toks.size() != 3)
          fail("syntax", lineno, toks[1].col, "prep takes one wire");
        need_new(toks[2], lineno);
        st.outs.push_back(toks[2].text);
        live[toks[2].text] = quantum_wire();
      } else {
        fail("syntax", lineno, toks[1].col, "unknown state '" + state + "'");
      }
      ir.statements.push_back(std::move(st));
      continue;
    }

    if (head == "gate") {
      expect_min(3, "a gate name and wires");
      const std::string& g = toks[1].text;
      if (g == "u") {
        st.op = Statement::Op::GateU;
        if (toks.size() != 7)
          fail("syntax", lineno, toks[1].col,
               "gate u takes one wire and four matrix entries");
        need_live(toks[2], lineno, WireKind::Quantum);
        st.args.push_back(toks[2].text);
        for (size_t i = 3; i < 7; i++) {
          auto c = parse_complex(toks[i].text);
          if (!c)
            fail("lexical", lineno, toks[i].col,
                 "invalid complex literal '" + toks[i].text + "'");
          st.matrix.push_back(*c);
        }
      } else {
        auto it = kGateArity.find(g);
        if (it == kGateArity.end())
          fail("syntax", lineno, toks[1].col, "unknown gate '" + g + "'");
        st.op = Statement::Op::Gate;
        st.kind = g;
        if (toks.size() != 2 + it->second)
          fail("signature", lineno, toks[1].col,
               "gate " + g + " takes " + std::to_string(it->second) + " wire(s)");
        for (size_t i = 2; i < toks.size(); i++) {
          need_live(toks[i], lineno, WireKind::Quantum);
          if (std::find(st.args.begin(), st.args.end(), toks[i].text) !=
              st.args.end())
            fail("signature", lineno, toks[i].col, "repeated wire");
          st.args.push_back(toks[i].text);
        }
      }
      ir.statements.push_back(std::move(st));
      continue;
    }

    if (head == "measure") {
      expect_min(5, "measure <x|y|z> <q> -> <bit>");
      st.op = Statement::Op::Measure;
      st.kind = toks[1].text;
      if (st.kind != "x" && st.kind != "y" && st.kind != "z")
        fail("syntax", lineno, toks[1].col, "measurement basis must be x, y or z");
      need_live(toks[2], lineno, WireKind::Quantum);
      st.args.push_back(toks[2].text);
      if (toks[3].text != "->")
        fail("syntax", lineno, toks[3].col, "expected '->'");
      need_new(toks[4], lineno);
      st.outs.push_back(toks[4].text);
      live.erase(toks[2].text);
      live[toks[4].text] = classical_wire(2);
      ir.statements.push_back(std::move(st));
      continue;
    }

    if (head == "mproj") {
      expect_min(5, "mproj <+-P> <q...> -> <bit>");
      if (!valid_pauli_label(toks[1].text))
        fail("lexical", lineno, toks[1].col, "invalid Pauli label");
      st.op = Statement::Op::MProj;
      st.paulis.push_back(SignedPauli::from_label(toks[1].text));
      size_t arr = arrow_at();
      if (!arr) fail("syntax", lineno, toks[1].col, "mproj needs '->'");
      for (size_t i = 2; i < arr; i++) {
        need_live(toks[i], lineno, WireKind::Quantum);
        st.args.push_back(toks[i].text);
      }
      if (st.args.size() != st.paulis[0].num_qubits())
        fail("signature", lineno, toks[1].col,
             "operator length does not match wire count");
      if (arr + 1 >= toks.size())
        fail("syntax", lineno, toks[arr].col, "expected a readout wire");
      need_new(toks[arr + 1], lineno);
      st.outs.push_back(toks[arr + 1].text);
      live[toks[arr + 1].text] = classical_wire(2);
      ir.statements.push_back(std::move(st));
      continue;
    }

    if (head == "cfn") {
      expect_min(5, "cfn <name> <bits...> -> <bit>");
      auto it = kCfnArity.find(toks[1].text);
      if (it == kCfnArity.end())
        fail("syntax", lineno, toks[1].col, "unknown function '" + toks[1].text + "'");
      st.op = Statement::Op::Cfn;
      st.kind = toks[1].text;
      size_t arr = arrow_at();
      if (!arr) fail("syntax", lineno, toks[1].col, "cfn needs '->'");
      for (size_t i = 2; i < arr; i++) {
        Wire w = need_live(toks[i], lineno, WireKind::Classical);
        if (w.arity != 2)
          fail("signature", lineno, toks[i].col, "cfn needs arity-2 wires");
        st.args.push_back(toks[i].text);
        live.erase(toks[i].text);
      }
      if (st.args.size() != it->second)
        fail("signature", lineno, toks[1].col,
             "cfn " + st.kind + " takes " + std::to_string(it->second) + " inputs");
      if (arr + 1 >= toks.size())
        fail("syntax", lineno, toks[arr].col, "expected an output wire");
      need_new(toks[arr + 1], lineno);
      st.outs.push_back(toks[arr + 1].text);
      live[toks[arr + 1].text] = classical_wire(2);
      ir.statements.push_back(std::move(st));
      continue;
    }

    if (head == "cpauli") {
      expect_min(4, "cpauli <P> <bit> <q...>");
      if (!valid_pauli_label(toks[1].text) || toks[1].text[0] == '-')
        fail("lexical", lineno, toks[1].col, "invalid Pauli label");
      st.op = Statement::Op::CPauli;
      st.paulis.push_back(SignedPauli::from_label(toks[1].text));
      Wire bw = need_live(toks[2], lineno, WireKind::Classical);
      if (bw.arity != 2)
        fail("signature", lineno, toks[2].col, "control bit must have arity 2");
      st.args.push_back(toks[2].text);
      live.erase(toks[2].text);
      size_t i = 3;
      for (; i < toks.size(); i++) {
        if (toks[i].text == "noise") break;
        need_live(toks[i], lineno, WireKind::Quantum);
        st.args.push_back(toks[i].text);
      }
      if (st.args.size() - 1 != st.paulis[0].num_qubits())
        fail("signature", lineno, toks[1].col,
             "operator length does not match wire count");
      if (i < toks.size()) {  // noise <var> as <name>
        if (i + 3 >= toks.size() || toks[i + 2].text != "as")
          fail("syntax", lineno, toks[i].col, "cpauli noise needs '<var> as <name>'");
        st.var = toks[i + 1].text;
        need_new(toks[i + 3], lineno);
        st.noise_name = toks[i + 3].text;
        noise_traced[st.noise_name] = false;
      }
      ir.statements.push_back(std::move(st));
      continue;
    }

    if (head == "noise") {
      expect_min(3, "a noise flavor");
      const std::string& flavor = toks[1].text;
      if (flavor == "select") {
        st.op = Statement::Op::Select;
        // noise select <q> gates <g...> weights <w...> [as <name>]
        need_live(toks[2], lineno, WireKind::Quantum);
        st.args.push_back(toks[2].text);
        size_t i = 3;
        if (i >= toks.size() || toks[i].text != "gates")
          fail("syntax", lineno, toks[std::min(i, toks.size() - 1)].col,
               "expected 'gates'");
        for (i++; i < toks.size() && toks[i].text != "weights"; i++) {
          if (!kGateArity.count(toks[i].text) || kGateArity.at(toks[i].text) != 1)
            fail("syntax", lineno, toks[i].col,
                 "unknown 1-qubit gate '" + toks[i].text + "'");
          st.sel_gates.push_back(toks[i].text);
        }
        if (i >= toks.size())
          fail("syntax", lineno, toks.back().col, "expected 'weights'");
        for (i++; i < toks.size() && toks[i].text != "as"; i++)
          st.sel_weights.push_back(toks[i].text);
        if (st.sel_gates.size() < 2 || st.sel_gates.size() != st.sel_weights.size())
          fail("signature", lineno, toks[1].col,
               "selector needs >= 2 gates and matching weights");
        if (i < toks.size()) {
          if (i + 1 >= toks.size())
            fail("syntax", lineno, toks[i].col, "expected a name after 'as'");
          st.noise_name = toks[i + 1].text;
        } else {
          st.noise_name = "n" + std::to_string(auto_noise++);
        }
        need_new({st.noise_name, toks[0].col}, lineno);
        noise_traced[st.noise_name] = false;
        ir.statements.push_back(std::move(st));
        continue;
      }
      if (flavor != "pauli" && flavor != "pauli-prob" && flavor != "flip" &&
          flavor != "flip-prob")
        fail("syntax", lineno, toks[1].col, "unknown noise flavor '" + flavor + "'");
      st.op = Statement::Op::Noise;
      st.kind = flavor;
      expect_min(4, "a variable and wires");
      st.var = toks[2].text;
      size_t i = 3;
      for (; i < toks.size() && toks[i].text != "as"; i++) {
        if (flavor == "flip" || flavor == "flip-prob") {
          Wire w = need_live(toks[i], lineno, WireKind::Classical);
          if (w.arity != 2)
            fail("signature", lineno, toks[i].col, "flip noise needs an arity-2 wire");
        } else {
          need_live(toks[i], lineno, WireKind::Quantum);
        }
        st.args.push_back(toks[i].text);
      }
      if (st.args.empty())
        fail("signature", lineno, toks[2].col, "noise needs target wires");
      if ((flavor == "flip" || flavor == "flip-prob") && st.args.size() != 1)
        fail("signature", lineno, toks[2].col, "flip noise takes one wire");
      if ((flavor == "pauli" || flavor == "pauli-prob") && st.args.size() > 3)
        fail("signature", lineno, toks[2].col, "joint Pauli noise caps at 3 wires");
      if (i < toks.size()) {
        if (i + 1 >= toks.size())
          fail("syntax", lineno, toks[i].col, "expected a name after 'as'");
        st.noise_name = toks[i + 1].text;
      } else {
        st.noise_name = "n" + std::to_string(auto_noise++);
      }
      need_new({st.noise_name, toks[0].col}, lineno);
      noise_traced[st.noise_name] = false;
      ir.statements.push_back(std::move(st));
      continue;
    }

    if (head == "trace") {
      expect_min(2, "a noise wire name");
      st.op = Statement::Op::Trace;
      auto it = noise_traced.find(toks[1].text);
      if (it == noise_traced.end())
        fail("signature", lineno, toks[1].col,
             "'" + toks[1].text + "' is not a noise wire");
      if (it->second)
        fail("signature", lineno, toks[1].col,
             "noise wire '" + toks[1].text + "' traced twice");
      it->second = true;
      st.args.push_back(toks[1].text);
      ir.statements.push_back(std::move(st));
      continue;
    }

    fail("syntax", lineno, toks[0].col, "unknown statement '" + head + "'");
  }

  for (const auto& [name, traced] : noise_traced)
    if (!traced)
      fail("signature", lineno, 1, "noise wire '" + name + "' is never traced");
  return ir;
}

std::string pretty_print(const CircuitIR& ir) {
  std::ostringstream os;
  auto fmt_complex = [](std::complex<double> c) {
    std::ostringstream s;
    if (c.imag() == 0) {
      s << c.real();
    } else if (c.real() == 0) {
      s << c.imag() << "i";
    } else {
      s << c.real() << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
    }
    return s.str();
  };
  for (const auto& st : ir.statements) {
    switch (st.op) {
      case Statement::Op::Input:
        os << "input " << st.args[0];
        if (st.kind == "cbit") os << " cbit " << st.arity;
        break;
      case Statement::Op::Prep:
        os << "prep " << st.kind;
        for (const auto& w : st.outs) os << " " << w;
        break;
      case Statement::Op::PrepStab:
        os << "prep stab";
        for (const auto& p : st.paulis) os << " " << p.str();
        os << " ->";
        for (const auto& w : st.outs) os << " " << w;
        break;
      case Statement::Op::Gate:
        os << "gate " << st.kind;
        for (const auto& w : st.args) os << " " << w;
        break;
      case Statement::Op::GateU:
        os << "gate u " << st.args[0];
        for (auto c : st.matrix) os << " " << fmt_complex(c);
        break;
      case Statement::Op::Measure:
        os << "measure " << st.kind << " " << st.args[0] << " -> " << st.outs[0];
        break;
      case Statement::Op::MProj:
        os << "mproj " << st.paulis[0].str();
        for (const auto& w : st.args) os << " " << w;
        os << " -> " << st.outs[0];
        break;
      case Statement::Op::Cfn:
        os << "cfn " << st.kind;
        for (const auto& w : st.args) os << " " << w;
        os << " -> " << st.outs[0];
        break;
      case Statement::Op::CPauli: {
        os << "cpauli " << st.paulis[0].pauli.str();
        for (const auto& w : st.args) os << " " << w;
        if (!st.var.empty())
          os << " noise " << st.var << " as " << st.noise_name;
        break;
      }
      case Statement::Op::Noise:
        os << "noise " << st.kind << " " << st.var;
        for (const auto& w : st.args) os << " " << w;
        os << " as " << st.noise_name;
        break;
      case Statement::Op::Select:
        os << "noise select " << st.args[0] << " gates";
        for (const auto& g : st.sel_gates) os << " " << g;
        os << " weights";
        for (const auto& w : st.sel_weights) os << " " << w;
        os << " as " << st.noise_name;
        break;
      case Statement::Op::Trace:
        os << "trace " << st.args[0];
        break;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

// Elaboration state: the running tensor's input is (noise wires..., circuit
// inputs) and its output tracks the live wires in order.
struct Elab {
  VarTableRef table;
  std::vector<std::pair<std::string, Wire>> live;
  CircuitTensor t;
  std::vector<std::string> noise_order;  // front of t.in_sig first
  std::map<std::string, NoiseWeights> weights;

  size_t position_of(const std::string& name, int line) const {
    for (size_t i = 0; i < live.size(); i++)
      if (live[i].first == name) return i;
    throw CircuitError("signature", line, 1, "wire '" + name + "' is not live");
  }
};

template <typename F>
void for_each_label_of(const std::vector<Wire>& wires, F&& f) {
  Label l(wires.size(), 0);
  while (true) {
    f(l);
    size_t i = wires.size();
    while (i > 0) {
      i--;
      if (++l[i] < wires[i].arity) break;
      l[i] = 0;
      if (i == 0) return;
    }
    if (wires.empty()) return;
  }
}

// Applies a statement tensor on the named live wires. `g`'s input may start
// with noise wires (named in noise_names); its remaining inputs match
// `in_names` in order, and `out_names` names its outputs.
void apply_tensor(Elab& e, const CircuitTensor& g,
                  const std::vector<std::string>& in_names,
                  const std::vector<std::string>& out_names,
                  const std::vector<std::string>& noise_names, int line) {
  size_t nn = noise_names.size();
  if (g.in_sig().size() != nn + in_names.size() ||
      g.out_sig().size() != out_names.size())
    throw CircuitError("signature", line, 1, "internal arity mismatch");

  std::vector<size_t> sel;
  for (const auto& name : in_names) sel.push_back(e.position_of(name, line));
  std::vector<bool> selected(e.live.size(), false);
  for (size_t p : sel) selected[p] = true;

  std::vector<size_t> untouched;
  for (size_t i = 0; i < e.live.size(); i++)
    if (!selected[i]) untouched.push_back(i);

  std::vector<Wire> untouched_wires;
  uint64_t space = 1;
  for (size_t i : untouched) {
    untouched_wires.push_back(e.live[i].second);
    space *= e.live[i].second.arity;
  }
  if (space * g.num_entries() > (uint64_t{1} << 24))
    throw CircuitError("signature", line, 1, "circuit too large to elaborate");

  // step tensor over (noise prefix ++ live) -> (untouched ++ g.out)
  std::vector<Wire> step_in;
  for (size_t i = 0; i < nn; i++) step_in.push_back(g.in_sig()[i]);
  for (const auto& [name, w] : e.live) step_in.push_back(w);
  std::vector<Wire> step_out = untouched_wires;
  for (size_t i = 0; i < g.out_sig().size(); i++)
    step_out.push_back(g.out_sig()[i]);

  CircuitTensor step(WireSignature(step_in), WireSignature(step_out), g.ring(),
                     g.table());
  for_each_label_of(untouched_wires, [&](const Label& u) {
    for (const auto& [k, p] : g.entries()) {
      Label in(e.live.size() + nn, 0);
      for (size_t i = 0; i < nn; i++) in[i] = k.first[i];
      for (size_t i = 0; i < untouched.size(); i++) in[nn + untouched[i]] = u[i];
      for (size_t i = 0; i < sel.size(); i++) in[nn + sel[i]] = k.first[nn + i];
      Label out(u);
      out.insert(out.end(), k.second.begin(), k.second.end());
      step.add(in, out, p);
    }
  });

  CircuitTensor lifted = e.t;
  if (nn) {
    std::vector<Wire> nw(g.in_sig().wires().begin(),
                         g.in_sig().wires().begin() + nn);
    lifted = kron(identity_tensor(WireSignature(nw), e.table), e.t);
  }
  e.t = compose(lifted, step);
  for (size_t i = nn; i-- > 0;)
    e.noise_order.insert(e.noise_order.begin(), noise_names[i]);

  std::vector<std::pair<std::string, Wire>> next;
  for (size_t i : untouched) next.push_back(e.live[i]);
  for (size_t i = 0; i < out_names.size(); i++)
    next.push_back({out_names[i], g.out_sig()[i]});
  e.live = std::move(next);
}

CircuitTensor gate_tensor(const std::string& g) {
  if (g == "id") return identity_tensor(WireSignature::qubits(1));
  if (g == "h") return tensor_from_clifford(clifford_h());
  if (g == "s") return tensor_from_clifford(clifford_s());
  if (g == "sdg") return tensor_from_clifford(clifford_sdg());
  if (g == "x" || g == "y" || g == "z")
    return tensor_from_clifford(clifford_pauli(std::toupper(g[0])));
  if (g == "cx") return tensor_from_clifford(clifford_cx());
  if (g == "t") {
    Mat u(2, 2);
    u.at(0, 0) = 1;
    u.at(1, 1) = std::exp(std::complex<double>{0, std::numbers::pi / 4});
    return tensor_from_unitary(u);
  }
  throw CircuitError("syntax", 0, 0, "unknown gate " + g);
}

std::vector<SignedPauli> prep_generators(const std::string& state) {
  if (state == "zero") return {SignedPauli::from_label("+Z")};
  if (state == "one") return {SignedPauli::from_label("-Z")};
  if (state == "plus") return {SignedPauli::from_label("+X")};
  if (state == "minus") return {SignedPauli::from_label("-X")};
  if (state == "plusi") return {SignedPauli::from_label("+Y")};
  if (state == "minusi") return {SignedPauli::from_label("-Y")};
  if (state == "bell")
    return {SignedPauli::from_label("+XX"), SignedPauli::from_label("+ZZ")};
  throw CircuitError("syntax", 0, 0, "unknown state " + state);
}

// Mode ordering for joint Pauli noise on k qubits: bit 2q selects X and bit
// 2q+1 selects Z on the q-th listed wire.
PauliString pauli_of_mode(uint32_t mode, uint32_t k) {
  PauliString p(k);
  for (uint32_t q = 0; q < k; q++) {
    p.set_x(q, (mode >> (2 * q)) & 1);
    p.set_z(q, (mode >> (2 * q + 1)) & 1);
  }
  return p;
}

NoiseWeights pauli_noise_weights(const VarTableRef& table, const std::string& var,
                                 uint32_t M, bool prob) {
  Polynomial one = Polynomial::constant(table, Coeff::exact(1));
  Polynomial v = Polynomial::variable(table, var);
  NoiseWeights w;
  if (!prob) {
    w.push_back(one);
    for (uint32_t m = 1; m < M; m++) w.push_back(v);
    return w;
  }
  // Normalized form: the traced diagonal becomes 1 - v(M-2)/(M-1) on every
  // non-identity error, and exactly 1 on the identity.
  long m_long = static_cast<long>(M);
  Polynomial w0 = one - v.scaled(Coeff::exact_ratio(m_long - 2, m_long));
  Polynomial we = v.scaled(Coeff::exact_ratio(m_long - 2, m_long * (m_long - 1)));
  w.push_back(w0);
  for (uint32_t m = 1; m < M; m++) w.push_back(we);
  return w;
}

NoiseWeights flip_noise_weights(const VarTableRef& table, const std::string& var,
                                bool prob) {
  Polynomial one = Polynomial::constant(table, Coeff::exact(1));
  Polynomial v = Polynomial::variable(table, var);
  if (prob) return {one - v, v};
  return {one, v};
}

}  // namespace

RunResult run(const CircuitIR& ir, bool apply_traces) {
  // Variable table from every noise statement, in source order.
  std::vector<std::string> vars;
  auto push_var = [&](const std::string& v) {
    if (!v.empty() && v != "1" &&
        std::find(vars.begin(), vars.end(), v) == vars.end())
      vars.push_back(v);
  };
  for (const auto& st : ir.statements) {
    push_var(st.var);
    for (const auto& w : st.sel_weights) push_var(w);
  }

  Elab e;
  e.table = make_table(vars);

  std::vector<Wire> inputs;
  for (const auto& st : ir.statements)
    if (st.op == Statement::Op::Input) {
      Wire w = st.kind == "cbit" ? classical_wire(st.arity) : quantum_wire();
      e.live.push_back({st.args[0], w});
      inputs.push_back(w);
    }
  e.t = identity_tensor(WireSignature(inputs), e.table);

  for (const auto& st : ir.statements) {
    switch (st.op) {
      case Statement::Op::Input:
        break;
      case Statement::Op::Prep: {
        auto gens = prep_generators(st.kind);
        apply_tensor(e, tensor_state_prep(gens), {}, st.outs, {}, st.line);
        break;
      }
      case Statement::Op::PrepStab:
        apply_tensor(e, tensor_state_prep(st.paulis), {}, st.outs, {}, st.line);
        break;
      case Statement::Op::Gate:
        apply_tensor(e, gate_tensor(st.kind), st.args, st.args, {}, st.line);
        break;
      case Statement::Op::GateU: {
        Mat u(2, 2);
        u.at(0, 0) = st.matrix[0];
        u.at(0, 1) = st.matrix[1];
        u.at(1, 0) = st.matrix[2];
        u.at(1, 1) = st.matrix[3];
        CircuitTensor g = tensor_from_unitary(u);
        apply_tensor(e, g, st.args, st.args, {}, st.line);
        break;
      }
      case Statement::Op::Measure: {
        char basis = std::toupper(st.kind[0]);
        apply_tensor(e, tensor_destructive_meas(basis), st.args, st.outs, {},
                     st.line);
        break;
      }
      case Statement::Op::MProj: {
        CircuitTensor g = tensor_projective_meas(st.paulis[0]);
        std::vector<std::string> outs = st.outs;  // readout bit first
        for (const auto& q : st.args) outs.push_back(q);
        apply_tensor(e, g, st.args, outs, {}, st.line);
        break;
      }
      case Statement::Op::Cfn: {
        CircuitTensor g = st.kind == "xor"   ? tensor_classical_xor()
                          : st.kind == "and" ? tensor_classical_and()
                          : st.kind == "or"  ? tensor_classical_or()
                          : st.kind == "not" ? tensor_classical_not()
                                             : tensor_classical_mux();
        apply_tensor(e, g, st.args, st.outs, {}, st.line);
        break;
      }
      case Statement::Op::CPauli: {
        std::vector<std::string> qubits(st.args.begin() + 1, st.args.end());
        if (st.var.empty()) {
          CircuitTensor g = tensor_controlled_pauli(st.paulis[0].pauli);
          apply_tensor(e, g, st.args, qubits, {}, st.line);
          break;
        }
        // Noisy correction: when the control bit fires, the Pauli is
        // followed by a joint error selected by a fresh noise wire.
        uint32_t k = st.paulis[0].num_qubits();
        uint32_t M = 1u << (2 * k);
        WireSignature qs = WireSignature::qubits(k);
        CircuitTensor idq = identity_tensor(qs);
        std::vector<CircuitTensor> modes;
        for (uint32_t m = 0; m < M; m++) {
          CircuitTensor active =
              compose(tensor_from_pauli(st.paulis[0].pauli),
                      tensor_from_pauli(pauli_of_mode(m, k)));
          modes.push_back(tensor_selector(classical_wire(2), {idq, active}));
        }
        CircuitTensor block = tensor_selector(noise_pauli_wire(k), modes);
        apply_tensor(e, block, st.args, qubits, {st.noise_name}, st.line);
        e.weights[st.noise_name] =
            pauli_noise_weights(e.table, st.var, M, /*prob=*/true);
        break;
      }
      case Statement::Op::Noise: {
        if (st.kind == "flip" || st.kind == "flip-prob") {
          std::vector<CircuitTensor> modes{
              identity_tensor(WireSignature(std::vector<Wire>{classical_wire(2)})),
              tensor_classical_not()};
          CircuitTensor g = tensor_selector(noise_cyclic_wire(2), modes);
          apply_tensor(e, g, st.args, st.args, {st.noise_name}, st.line);
          e.weights[st.noise_name] =
              flip_noise_weights(e.table, st.var, st.kind == "flip-prob");
        } else {
          uint32_t k = static_cast<uint32_t>(st.args.size());
          uint32_t M = 1u << (2 * k);
          std::vector<CircuitTensor> modes;
          for (uint32_t m = 0; m < M; m++)
            modes.push_back(tensor_from_pauli(pauli_of_mode(m, k)));
          CircuitTensor g = tensor_selector(noise_pauli_wire(k), modes);
          apply_tensor(e, g, st.args, st.args, {st.noise_name}, st.line);
          e.weights[st.noise_name] = pauli_noise_weights(
              e.table, st.var, M, st.kind == "pauli-prob");
        }
        break;
      }
      case Statement::Op::Select: {
        std::vector<CircuitTensor> modes;
        for (const auto& g : st.sel_gates) modes.push_back(gate_tensor(g));
        CircuitTensor g = tensor_selector(
            noise_cyclic_wire(static_cast<uint32_t>(modes.size())), modes);
        apply_tensor(e, g, st.args, st.args, {st.noise_name}, st.line);
        NoiseWeights w;
        for (const auto& name : st.sel_weights)
          w.push_back(name == "1"
                          ? Polynomial::constant(e.table, Coeff::exact(1))
                          : Polynomial::variable(e.table, name));
        e.weights[st.noise_name] = std::move(w);
        break;
      }
      case Statement::Op::Trace:
        break;  // handled after composition
    }
  }

  RunResult out{e.t, e.noise_order};
  if (apply_traces && !e.noise_order.empty()) {
    std::vector<NoiseWeights> ws;
    for (const auto& name : e.noise_order) ws.push_back(e.weights.at(name));
    out.tensor = trace_weights(e.t, ws);
    out.open_noise.clear();
  }
  return out;
}

}  // namespace qect
