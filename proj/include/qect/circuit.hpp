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

#ifndef QECT_CIRCUIT_HPP
#define QECT_CIRCUIT_HPP

#include <complex>
#include <string>
#include <vector>

#include "qect/tensor.hpp"

namespace qect {

/// Parse or elaboration failure with source coordinates. `category` is one
/// of "lexical", "syntax", "signature".
struct CircuitError : std::runtime_error {
  CircuitError(std::string category, int line, int col, const std::string& msg)
      : std::runtime_error(category + " error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        category(std::move(category)), line(line), col(col) {}
  std::string category;
  int line, col;
};

struct Statement {
  enum class Op {
    Input,    // input <w> [qubit|cbit <M>]
    Prep,     // prep <state> <q...>          (zero/one/plus/minus/plusi/minusi/bell)
    PrepStab, // prep stab <+-P...> -> <q...>
    Gate,     // gate <name> <q...>
    GateU,    // gate u <q> <4 complex entries>
    Measure,  // measure <x|y|z> <q> -> <b>
    MProj,    // mproj <+-P> <q...> -> <b>
    Cfn,      // cfn <name> <b...> -> <b>
    CPauli,   // cpauli <P> <bit> <q...> [noise <var>]
    Noise,    // noise <flavor> <var> <wires...> [as <name>]
    Select,   // noise select <q> gates <g...> weights <w...> [as <name>]
    Trace,    // trace <noise name>
  };
  Op op;
  int line = 0;
  std::string kind;                // state / gate / basis / cfn / flavor
  std::vector<std::string> args;   // consumed wire names
  std::vector<std::string> outs;   // created wire names
  std::string var;                 // noise variable (or cpauli noise var)
  std::string noise_name;          // selector wire name
  std::vector<SignedPauli> paulis;
  std::vector<std::complex<double>> matrix;
  std::vector<std::string> sel_gates, sel_weights;
  uint32_t arity = 0;  // cbit arity for Input

  /// Source positions are not part of the statement's meaning.
  bool operator==(const Statement& o) const {
    return op == o.op && kind == o.kind && args == o.args && outs == o.outs &&
           var == o.var && noise_name == o.noise_name && paulis == o.paulis &&
           matrix == o.matrix && sel_gates == o.sel_gates &&
           sel_weights == o.sel_weights && arity == o.arity;
  }
};

struct CircuitIR {
  std::vector<Statement> statements;
  bool operator==(const CircuitIR&) const = default;
};

/// Parses and validates a circuit description. Wire bookkeeping runs here,
/// so unknown wires, kind mismatches, and untraced noise wires are caught
/// with their source positions before any tensor work happens.
CircuitIR parse_circuit(const std::string& text);

std::string pretty_print(const CircuitIR& ir);

struct RunResult {
  CircuitTensor tensor;
  /// noise wire names in tensor input order (empty after tracing)
  std::vector<std::string> open_noise;
};

/// Composes the circuit. With apply_traces the noise wires are folded by
/// their registered weights and the result is the circuit enumerator.
RunResult run(const CircuitIR& ir, bool apply_traces);

}  // namespace qect

#endif
