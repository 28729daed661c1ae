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

#include <string>

#include "doctest.h"
#include "qect/circuit.hpp"

using namespace qect;

namespace {

const char* kTeleportation = R"(
# teleportation: bell pair, entangle, measure, correct
input q0
prep bell q1 q2
gate cx q0 q1
measure x q0 -> b0
measure z q1 -> b1
cpauli X b1 q2
cpauli Z b0 q2
)";

const char* kNoisyTeleportation = R"(
input q0
prep bell q1 q2
noise pauli-prob m q1 q2 as nm
gate cx q0 q1
noise pauli-prob c2 q0 q1 as nc
measure x q0 -> b0
measure z q1 -> b1
noise flip-prob r b0 as nr0
noise flip-prob r b1 as nr1
cpauli X b1 q2 noise c1 as n1
cpauli Z b0 q2 noise c1 as n2
trace nm
trace nc
trace nr0
trace nr1
trace n1
trace n2
)";

}  // namespace

TEST_CASE("teleportation elaborates to the identity") {
  auto ir = parse_circuit(kTeleportation);
  auto r = run(ir, false);
  CHECK(r.open_noise.empty());
  CHECK(r.tensor == identity_tensor(WireSignature::qubits(1), r.tensor.table()));
}

TEST_CASE("pretty print round trip") {
  for (const char* src : {kTeleportation, kNoisyTeleportation}) {
    auto ir = parse_circuit(src);
    auto again = parse_circuit(pretty_print(ir));
    CHECK(ir == again);
  }
}

TEST_CASE("diagnostics") {
  // unknown gate names the token
  try {
    parse_circuit("input q0\ngate frobnicate q0\n");
    FAIL("expected an error");
  } catch (const CircuitError& e) {
    CHECK(e.category == "syntax");
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("frobnicate") != std::string::npos);
  }

  // classical wire into a quantum gate
  try {
    parse_circuit("input b cbit\ngate h b\n");
    FAIL("expected an error");
  } catch (const CircuitError& e) {
    CHECK(e.category == "signature");
    CHECK(e.line == 2);
  }

  // noise wires must be traced
  CHECK_THROWS_AS(parse_circuit("input q0\nnoise pauli z q0 as nz\n"),
                  CircuitError);
  // wire reuse
  CHECK_THROWS_AS(parse_circuit("input q0\nprep zero q0\n"), CircuitError);
  // dead wire
  CHECK_THROWS_AS(
      parse_circuit("input q0\nmeasure z q0 -> b\ngate h q0\n"), CircuitError);
}

TEST_CASE("single qubit uniform noise traces to the enumerator form") {
  auto ir = parse_circuit(
      "input q0\n"
      "noise pauli z q0 as nz\n"
      "trace nz\n");
  auto r = run(ir, true);
  auto table = r.tensor.table();
  auto one = Polynomial::constant(table, Coeff::exact(1));
  auto z = Polynomial::variable(table, "z");
  CHECK(*r.tensor.entry({kLabelI}, {kLabelI}) == one + z.scaled(Coeff::exact(3)));
  for (uint8_t e : {kLabelX, kLabelY, kLabelZ})
    CHECK(*r.tensor.entry({e}, {e}) == one - z);
}

TEST_CASE("selector statement reproduces the coherent error mix") {
  auto ir = parse_circuit(
      "input q0\n"
      "noise select q0 gates id s z sdg weights w z z z as ns\n"
      "trace ns\n");
  auto r = run(ir, true);
  REQUIRE(r.tensor.ring() == Ring::Float);
  auto table = r.tensor.table();
  auto w = Polynomial::variable(table, "w", Ring::Float);
  auto z = Polynomial::variable(table, "z", Ring::Float);
  auto w3z = w + z.scaled(Coeff::floating(3.0));
  auto wmz = w - z;
  CHECK(Polynomial::approx_equal(*r.tensor.entry({kLabelI}, {kLabelI}), w3z));
  CHECK(Polynomial::approx_equal(*r.tensor.entry({kLabelZ}, {kLabelZ}), w3z));
  CHECK(Polynomial::approx_equal(*r.tensor.entry({kLabelX}, {kLabelX}), wmz));
  CHECK(Polynomial::approx_equal(*r.tensor.entry({kLabelY}, {kLabelY}), wmz));
  CHECK(r.tensor.entry({kLabelX}, {kLabelY}) == nullptr);
}

TEST_CASE("noisy teleportation enumerator") {
  auto ir = parse_circuit(kNoisyTeleportation);
  auto r = run(ir, true);
  REQUIRE(r.tensor.ring() == Ring::Exact);

  auto table = r.tensor.table();
  auto one = Polynomial::constant(table, Coeff::exact(1));
  auto m = Polynomial::variable(table, "m");
  auto c2 = Polynomial::variable(table, "c2");
  auto rr = Polynomial::variable(table, "r");
  auto c1 = Polynomial::variable(table, "c1");

  auto f_c1 = one - c1.scaled(Coeff::exact_ratio(1, 3));
  auto f_c2 = one - c2.scaled(Coeff::exact_ratio(14, 15));
  auto f_m = one - m.scaled(Coeff::exact_ratio(14, 15));
  auto f_r = one - rr.scaled(Coeff::exact(2));

  auto u_x = f_c1 * f_c1 * f_c2 * f_r * f_m;
  auto u_y = f_c1 * f_c1 * f_c2 * f_r * f_r * f_m;

  CHECK(*r.tensor.entry({kLabelI}, {kLabelI}) == one);
  CHECK(*r.tensor.entry({kLabelX}, {kLabelX}) == u_x);
  CHECK(*r.tensor.entry({kLabelZ}, {kLabelZ}) == u_x);
  CHECK(*r.tensor.entry({kLabelY}, {kLabelY}) == u_y);
  CHECK(r.tensor.num_entries() == 4);

  // error-model probabilities from the omega-Fourier inverse
  auto probs = diagonal_to_pauli_probs(r.tensor);
  auto quarter = Coeff::exact_ratio(1, 4);
  CHECK(probs.at("I") == (one + u_x + u_x + u_y).scaled(quarter));
  CHECK(probs.at("X") == (one - u_y).scaled(quarter));
  CHECK(probs.at("Z") == probs.at("X"));
  CHECK(probs.at("Y") == (one - u_x - u_x + u_y).scaled(quarter));
}

TEST_CASE("prep stab statement") {
  auto ir = parse_circuit("prep stab +XX +ZZ -> a b\n");
  auto r = run(ir, false);
  CHECK(r.tensor.num_entries() == 4);
  CHECK(r.tensor.entry_coeff({}, {kLabelY, kLabelY}) == Coeff::exact(-1));
}

TEST_CASE("unitary literal gate") {
  auto ir = parse_circuit(
      "input q0\n"
      "gate u q0 0.7071067811865476 0.7071067811865476 "
      "0.7071067811865476 -0.7071067811865476\n");
  auto r = run(ir, false);
  CHECK(CircuitTensor::approx_equal(
      r.tensor, tensor_from_clifford(clifford_h()).as_float(), 1e-9));
  CHECK_THROWS_AS(run(parse_circuit("input q0\ngate u q0 1 1 1 1\n"), false),
                  TensorError);
}

TEST_CASE("classical function statements compose") {
  auto ir = parse_circuit(
      "input a cbit\n"
      "input b cbit\n"
      "cfn xor a b -> c\n"
      "cfn not c -> d\n");
  auto r = run(ir, false);
  CHECK(r.tensor.entry_coeff({0, 0}, {0}) == Coeff::exact(1));
  CHECK(r.tensor.entry_coeff({1, 1}, {1}) == Coeff::exact(-1));
  CHECK(r.tensor.num_entries() == 2);
}
