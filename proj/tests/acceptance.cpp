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

// Acceptance suite: one line per criterion, nonzero exit on any failure.
// The distance-5 surface code run is opt-in via --d5.

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>

#include "qect/circuit.hpp"
#include "qect/codes.hpp"
#include "qect/enumerator.hpp"
#include "qect/oracle.hpp"
#include "test_support.hpp"

using namespace qect;
using namespace qect::testing;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void report(int idx, const std::string& name, bool pass, double ms,
            double limit_ms) {
  bool in_time = ms <= limit_ms;
  bool ok = pass && in_time;
  if (!ok) g_failures++;
  std::printf("%s  [%2d] %-46s %9.1f ms (limit %.0f ms)%s\n",
              ok ? "PASS" : "FAIL", idx, name.c_str(), ms, limit_ms,
              pass ? "" : " [value mismatch]");
}

bool expect(bool cond, const char* what) {
  if (!cond) std::printf("       mismatch: %s\n", what);
  return cond;
}

using Entry = std::tuple<std::string, std::string, long, long>;

CircuitTensor golden(const WireSignature& in, const WireSignature& out,
                     const std::vector<Entry>& entries) {
  CircuitTensor t(in, out, Ring::Exact);
  for (const auto& [i, o, num, den] : entries)
    t.add(parse_label(in, i), parse_label(out, o),
          Coeff::exact(mpq_class(num, den)));
  return t;
}

// polynomial from (exponent-vector, numerator, denominator) rows
Polynomial poly_of(const VarTableRef& t,
                   const std::vector<std::tuple<Exponents, long, long>>& rows,
                   std::optional<uint32_t> cap = std::nullopt) {
  Polynomial p(t, Ring::Exact, cap);
  for (const auto& [e, num, den] : rows)
    p.add_term(e, Coeff::exact(mpq_class(num, den)));
  return p;
}

const WireSignature kQ1 = WireSignature::qubits(1);
const WireSignature kQ2 = WireSignature::qubits(2);
const WireSignature kC2{std::vector<Wire>{classical_wire(2)}};
const WireSignature kCC{std::vector<Wire>{classical_wire(2), classical_wire(2)}};
const WireSignature kCCC{std::vector<Wire>{classical_wire(2), classical_wire(2),
                                           classical_wire(2)}};
const WireSignature kBitQ{std::vector<Wire>{classical_wire(2), quantum_wire()}};
const WireSignature kNone;

// ---------------------------------------------------------------- criterion 1
bool gate_golden_suite() {
  bool ok = true;
  auto H = tensor_from_clifford(clifford_h());
  auto S = tensor_from_clifford(clifford_s());
  auto Sdg = tensor_from_clifford(clifford_sdg());
  ok &= expect(H == golden(kQ1, kQ1, {{"I", "I", 1, 1}, {"X", "Z", 1, 1},
                                      {"Z", "X", 1, 1}, {"Y", "Y", -1, 1}}),
               "H tensor");
  ok &= expect(S == golden(kQ1, kQ1, {{"I", "I", 1, 1}, {"X", "Y", 1, 1},
                                      {"Z", "Z", 1, 1}, {"Y", "X", -1, 1}}),
               "S tensor");
  ok &= expect(Sdg == golden(kQ1, kQ1, {{"I", "I", 1, 1}, {"X", "Y", -1, 1},
                                        {"Z", "Z", 1, 1}, {"Y", "X", 1, 1}}),
               "Sdg tensor");
  ok &= expect(compose(H, S) == golden(kQ1, kQ1,
                                       {{"I", "I", 1, 1}, {"X", "Z", 1, 1},
                                        {"Z", "Y", 1, 1}, {"Y", "X", 1, 1}}),
               "S.H tensor");
  ok &= expect(compose(Sdg, H) == golden(kQ1, kQ1,
                                         {{"I", "I", 1, 1}, {"X", "Y", 1, 1},
                                          {"Z", "X", 1, 1}, {"Y", "Z", 1, 1}}),
               "H.Sdg tensor");
  ok &= expect(tensor_from_pauli(PauliString::from_label("X")) ==
                   golden(kQ1, kQ1, {{"I", "I", 1, 1}, {"X", "X", 1, 1},
                                     {"Y", "Y", -1, 1}, {"Z", "Z", -1, 1}}),
               "X tensor");
  ok &= expect(tensor_from_pauli(PauliString::from_label("Y")) ==
                   golden(kQ1, kQ1, {{"I", "I", 1, 1}, {"X", "X", -1, 1},
                                     {"Y", "Y", 1, 1}, {"Z", "Z", -1, 1}}),
               "Y tensor");
  ok &= expect(tensor_from_pauli(PauliString::from_label("Z")) ==
                   golden(kQ1, kQ1, {{"I", "I", 1, 1}, {"X", "X", -1, 1},
                                     {"Y", "Y", -1, 1}, {"Z", "Z", 1, 1}}),
               "Z tensor");

  Mat tmat(2, 2);
  tmat.at(0, 0) = 1;
  tmat.at(1, 1) = std::exp(std::complex<double>{0, std::numbers::pi / 4});
  CircuitTensor texpect(kQ1, kQ1, Ring::Float);
  double s = 1.0 / std::sqrt(2.0);
  texpect.add({kLabelI}, {kLabelI}, Coeff::floating(1.0));
  texpect.add({kLabelZ}, {kLabelZ}, Coeff::floating(1.0));
  texpect.add({kLabelX}, {kLabelX}, Coeff::floating(s));
  texpect.add({kLabelX}, {kLabelY}, Coeff::floating(s));
  texpect.add({kLabelY}, {kLabelX}, Coeff::floating(-s));
  texpect.add({kLabelY}, {kLabelY}, Coeff::floating(s));
  ok &= expect(CircuitTensor::approx_equal(tensor_from_unitary(tmat), texpect,
                                           1e-12),
               "T tensor to 1e-12");

  ok &= expect(tensor_from_clifford(clifford_cx()) ==
                   golden(kQ2, kQ2,
                          {{"II", "II", 1, 1}, {"IX", "IX", 1, 1},
                           {"IY", "ZY", 1, 1}, {"IZ", "ZZ", 1, 1},
                           {"XI", "XX", 1, 1}, {"XX", "XI", 1, 1},
                           {"XY", "YZ", 1, 1}, {"XZ", "YY", -1, 1},
                           {"YI", "YX", 1, 1}, {"YX", "YI", 1, 1},
                           {"YY", "XZ", -1, 1}, {"YZ", "XY", 1, 1},
                           {"ZI", "ZI", 1, 1}, {"ZX", "ZX", 1, 1},
                           {"ZY", "IY", 1, 1}, {"ZZ", "IZ", 1, 1}}),
               "CNOT tensor");

  auto prep = [](const char* gen) {
    return tensor_state_prep({SignedPauli::from_label(gen)});
  };
  ok &= expect(prep("+Z") == golden(kNone, kQ1, {{"", "I", 1, 1}, {"", "Z", 1, 1}}),
               "|0> prep");
  ok &= expect(prep("+X") == golden(kNone, kQ1, {{"", "I", 1, 1}, {"", "X", 1, 1}}),
               "|+> prep");
  ok &= expect(prep("-X") == golden(kNone, kQ1, {{"", "I", 1, 1}, {"", "X", -1, 1}}),
               "|-> prep");
  ok &= expect(prep("+Y") == golden(kNone, kQ1, {{"", "I", 1, 1}, {"", "Y", 1, 1}}),
               "|+i> prep");
  ok &= expect(prep("-Y") == golden(kNone, kQ1, {{"", "I", 1, 1}, {"", "Y", -1, 1}}),
               "|-i> prep");
  ok &= expect(tensor_state_prep({SignedPauli::from_label("+XX"),
                                  SignedPauli::from_label("+ZZ")}) ==
                   golden(kNone, kQ2, {{"", "II", 1, 1}, {"", "XX", 1, 1},
                                       {"", "YY", -1, 1}, {"", "ZZ", 1, 1}}),
               "Bell prep");

  for (char p : {'X', 'Y', 'Z'}) {
    std::string in(1, p);
    ok &= expect(tensor_destructive_meas(p) ==
                     golden(kQ1, kC2, {{"I", "0", 1, 1}, {in, "1", 1, 1}}),
                 "destructive measurement");
  }

  ok &= expect(tensor_projective_meas(SignedPauli::from_label("+Z")) ==
                   golden(kQ1, kBitQ, {{"I", "0I", 1, 1}, {"Z", "1I", 1, 1},
                                       {"I", "1Z", 1, 1}, {"Z", "0Z", 1, 1}}),
               "projective Z");
  ok &= expect(tensor_projective_meas(SignedPauli::from_label("+X")) ==
                   golden(kQ1, kBitQ, {{"I", "0I", 1, 1}, {"X", "1I", 1, 1},
                                       {"I", "1X", 1, 1}, {"X", "0X", 1, 1}}),
               "projective X");
  ok &= expect(tensor_projective_meas(SignedPauli::from_label("+Y")) ==
                   golden(kQ1, kBitQ, {{"I", "0I", 1, 1}, {"Y", "1I", 1, 1},
                                       {"I", "1Y", 1, 1}, {"Y", "0Y", 1, 1}}),
               "projective Y");

  ok &= expect(tensor_controlled_pauli(PauliString::from_label("X")) ==
                   golden(kBitQ, kQ1, {{"0I", "I", 1, 1}, {"0X", "X", 1, 1},
                                       {"1Y", "Y", 1, 1}, {"1Z", "Z", 1, 1}}),
               "cntl-X");
  ok &= expect(tensor_controlled_pauli(PauliString::from_label("Z")) ==
                   golden(kBitQ, kQ1, {{"0I", "I", 1, 1}, {"1X", "X", 1, 1},
                                       {"1Y", "Y", 1, 1}, {"0Z", "Z", 1, 1}}),
               "cntl-Z");

  ok &= expect(tensor_classical_xor() ==
                   golden(kCC, kC2, {{"00", "0", 1, 1}, {"11", "1", 1, 1}}),
               "xor");
  ok &= expect(tensor_classical_and() ==
                   golden(kCC, kC2,
                          {{"00", "0", 1, 1}, {"00", "1", 1, 2},
                           {"01", "1", 1, 2}, {"10", "1", 1, 2},
                           {"11", "1", -1, 2}}),
               "and");
  ok &= expect(tensor_classical_or() ==
                   golden(kCC, kC2,
                          {{"00", "0", 1, 1}, {"00", "1", -1, 2},
                           {"01", "1", 1, 2}, {"10", "1", 1, 2},
                           {"11", "1", 1, 2}}),
               "or");
  ok &= expect(tensor_classical_mux() ==
                   golden(kCCC, kC2,
                          {{"000", "0", 1, 1}, {"001", "1", 1, 2},
                           {"010", "1", 1, 2}, {"101", "1", -1, 2},
                           {"110", "1", 1, 2}}),
               "mux");
  ok &= expect(tensor_classical_not() ==
                   golden(kC2, kC2, {{"0", "0", 1, 1}, {"1", "1", -1, 1}}),
               "not");
  return ok;
}

// ---------------------------------------------------------------- criterion 2
bool composition_suite() {
  bool ok = true;
  auto sp_bell = tensor_state_prep(
      {SignedPauli::from_label("+XX"), SignedPauli::from_label("+ZZ")});
  auto t1 = kron(identity_tensor(kQ1), sp_bell);
  auto t2 = kron(tensor_from_clifford(clifford_cx()), identity_tensor(kQ1));
  auto t3 = kron(kron(tensor_destructive_meas('X'), tensor_destructive_meas('Z')),
                 identity_tensor(kQ1));
  auto t4 = kron(identity_tensor(kC2),
                 tensor_controlled_pauli(PauliString::from_label("X")));
  auto t5 = tensor_controlled_pauli(PauliString::from_label("Z"));
  auto tel = compose(compose(compose(compose(t1, t2), t3), t4), t5);
  ok &= expect(tel == identity_tensor(kQ1), "teleportation == identity");

  auto sp = kron(identity_tensor(kQ1),
                 tensor_state_prep({SignedPauli::from_label("+Z")}));
  auto step = compose(sp, tensor_from_clifford(clifford_cx()));
  auto md = kron(identity_tensor(kQ1), tensor_destructive_meas('Z'));
  auto pipeline = compose(step, md);
  CircuitTensor swapped(kQ1, kBitQ, pipeline.ring(), pipeline.table());
  for (const auto& [k, p] : pipeline.entries())
    swapped.add(k.first, {k.second[1], k.second[0]}, p);
  ok &= expect(swapped == tensor_projective_meas(SignedPauli::from_label("+Z")),
               "ancilla pipeline == projective Z");
  return ok;
}

// ---------------------------------------------------------------- criterion 3
bool noisy_teleportation_suite() {
  const char* src = R"(
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
  auto res = run(parse_circuit(src), true);
  auto table = res.tensor.table();
  // exponent order in the run table: m, c2, r, c1
  auto mono = [&](uint32_t m, uint32_t c2, uint32_t r, uint32_t c1) {
    return Exponents{m, c2, r, c1};
  };
  auto u_x = poly_of(
      table,
      {{mono(0, 0, 0, 0), 1, 1},       {mono(0, 0, 0, 1), -2, 3},
       {mono(0, 1, 0, 0), -14, 15},    {mono(0, 0, 1, 0), -2, 1},
       {mono(1, 0, 0, 0), -14, 15},    {mono(0, 0, 0, 2), 1, 9},
       {mono(0, 1, 0, 1), 28, 45},     {mono(0, 0, 1, 1), 4, 3},
       {mono(1, 0, 0, 1), 28, 45},     {mono(0, 1, 1, 0), 28, 15},
       {mono(1, 1, 0, 0), 196, 225},   {mono(1, 0, 1, 0), 28, 15},
       {mono(0, 1, 0, 2), -14, 135},   {mono(0, 0, 1, 2), -2, 9},
       {mono(1, 0, 0, 2), -14, 135},   {mono(0, 1, 1, 1), -56, 45},
       {mono(1, 1, 0, 1), -392, 675},  {mono(1, 0, 1, 1), -56, 45},
       {mono(1, 1, 1, 0), -392, 225},  {mono(0, 1, 1, 2), 28, 135},
       {mono(1, 1, 0, 2), 196, 2025},  {mono(1, 0, 1, 2), 28, 135},
       {mono(1, 1, 1, 1), 784, 675},   {mono(1, 1, 1, 2), -392, 2025}});
  auto u_y = poly_of(
      table,
      {{mono(0, 0, 0, 0), 1, 1},        {mono(0, 0, 0, 1), -2, 3},
       {mono(0, 1, 0, 0), -14, 15},     {mono(0, 0, 1, 0), -4, 1},
       {mono(1, 0, 0, 0), -14, 15},     {mono(0, 0, 0, 2), 1, 9},
       {mono(0, 1, 0, 1), 28, 45},      {mono(0, 0, 1, 1), 8, 3},
       {mono(1, 0, 0, 1), 28, 45},      {mono(0, 1, 1, 0), 56, 15},
       {mono(1, 1, 0, 0), 196, 225},    {mono(0, 0, 2, 0), 4, 1},
       {mono(1, 0, 1, 0), 56, 15},      {mono(0, 1, 0, 2), -14, 135},
       {mono(0, 0, 1, 2), -4, 9},       {mono(1, 0, 0, 2), -14, 135},
       {mono(0, 1, 1, 1), -112, 45},    {mono(1, 1, 0, 1), -392, 675},
       {mono(0, 0, 2, 1), -8, 3},       {mono(1, 0, 1, 1), -112, 45},
       {mono(0, 1, 2, 0), -56, 15},     {mono(1, 1, 1, 0), -784, 225},
       {mono(1, 0, 2, 0), -56, 15},     {mono(0, 1, 1, 2), 56, 135},
       {mono(1, 1, 0, 2), 196, 2025},   {mono(0, 0, 2, 2), 4, 9},
       {mono(1, 0, 1, 2), 56, 135},     {mono(0, 1, 2, 1), 112, 45},
       {mono(1, 1, 1, 1), 1568, 675},   {mono(1, 0, 2, 1), 112, 45},
       {mono(1, 1, 2, 0), 784, 225},    {mono(0, 1, 2, 2), -56, 135},
       {mono(1, 1, 1, 2), -784, 2025},  {mono(1, 0, 2, 2), -56, 135},
       {mono(1, 1, 2, 1), -1568, 675},  {mono(1, 1, 2, 2), 784, 2025}});

  bool ok = true;
  ok &= expect(res.tensor.num_entries() == 4, "diagonal with four entries");
  auto one = Polynomial::constant(table, Coeff::exact(1));
  ok &= expect(*res.tensor.entry({kLabelI}, {kLabelI}) == one, "u_I == 1");
  ok &= expect(*res.tensor.entry({kLabelX}, {kLabelX}) == u_x, "u_X printed form");
  ok &= expect(*res.tensor.entry({kLabelZ}, {kLabelZ}) == u_x, "u_Z == u_X");
  ok &= expect(*res.tensor.entry({kLabelY}, {kLabelY}) == u_y, "u_Y printed form");

  auto probs = diagonal_to_pauli_probs(res.tensor);
  auto p_i = poly_of(
      table,
      {{mono(0, 0, 0, 0), 1, 1},        {mono(0, 0, 0, 1), -1, 2},
       {mono(0, 1, 0, 0), -7, 10},      {mono(0, 0, 1, 0), -2, 1},
       {mono(1, 0, 0, 0), -7, 10},      {mono(0, 0, 0, 2), 1, 12},
       {mono(0, 1, 0, 1), 7, 15},       {mono(0, 0, 1, 1), 4, 3},
       {mono(1, 0, 0, 1), 7, 15},       {mono(0, 1, 1, 0), 28, 15},
       {mono(1, 1, 0, 0), 49, 75},      {mono(0, 0, 2, 0), 1, 1},
       {mono(1, 0, 1, 0), 28, 15},      {mono(0, 1, 0, 2), -7, 90},
       {mono(0, 0, 1, 2), -2, 9},       {mono(1, 0, 0, 2), -7, 90},
       {mono(0, 1, 1, 1), -56, 45},     {mono(1, 1, 0, 1), -98, 225},
       {mono(0, 0, 2, 1), -2, 3},       {mono(1, 0, 1, 1), -56, 45},
       {mono(0, 1, 2, 0), -14, 15},     {mono(1, 1, 1, 0), -392, 225},
       {mono(1, 0, 2, 0), -14, 15},     {mono(0, 1, 1, 2), 28, 135},
       {mono(1, 1, 0, 2), 49, 675},     {mono(0, 0, 2, 2), 1, 9},
       {mono(1, 0, 1, 2), 28, 135},     {mono(0, 1, 2, 1), 28, 45},
       {mono(1, 1, 1, 1), 784, 675},    {mono(1, 0, 2, 1), 28, 45},
       {mono(1, 1, 2, 0), 196, 225},    {mono(0, 1, 2, 2), -14, 135},
       {mono(1, 1, 1, 2), -392, 2025},  {mono(1, 0, 2, 2), -14, 135},
       {mono(1, 1, 2, 1), -392, 675},   {mono(1, 1, 2, 2), 196, 2025}});
  auto p_x = poly_of(
      table,
      {{mono(0, 0, 0, 1), 1, 6},        {mono(0, 1, 0, 0), 7, 30},
       {mono(0, 0, 1, 0), 1, 1},        {mono(1, 0, 0, 0), 7, 30},
       {mono(0, 0, 0, 2), -1, 36},      {mono(0, 1, 0, 1), -7, 45},
       {mono(0, 0, 1, 1), -2, 3},       {mono(1, 0, 0, 1), -7, 45},
       {mono(0, 1, 1, 0), -14, 15},     {mono(1, 1, 0, 0), -49, 225},
       {mono(0, 0, 2, 0), -1, 1},       {mono(1, 0, 1, 0), -14, 15},
       {mono(0, 1, 0, 2), 7, 270},      {mono(0, 0, 1, 2), 1, 9},
       {mono(1, 0, 0, 2), 7, 270},      {mono(0, 1, 1, 1), 28, 45},
       {mono(1, 1, 0, 1), 98, 675},     {mono(0, 0, 2, 1), 2, 3},
       {mono(1, 0, 1, 1), 28, 45},      {mono(0, 1, 2, 0), 14, 15},
       {mono(1, 1, 1, 0), 196, 225},    {mono(1, 0, 2, 0), 14, 15},
       {mono(0, 1, 1, 2), -14, 135},    {mono(1, 1, 0, 2), -49, 2025},
       {mono(0, 0, 2, 2), -1, 9},       {mono(1, 0, 1, 2), -14, 135},
       {mono(0, 1, 2, 1), -28, 45},     {mono(1, 1, 1, 1), -392, 675},
       {mono(1, 0, 2, 1), -28, 45},     {mono(1, 1, 2, 0), -196, 225},
       {mono(0, 1, 2, 2), 14, 135},     {mono(1, 1, 1, 2), 196, 2025},
       {mono(1, 0, 2, 2), 14, 135},     {mono(1, 1, 2, 1), 392, 675},
       {mono(1, 1, 2, 2), -196, 2025}});
  auto p_y = poly_of(
      table,
      {{mono(0, 0, 0, 1), 1, 6},       {mono(0, 1, 0, 0), 7, 30},
       {mono(1, 0, 0, 0), 7, 30},      {mono(0, 0, 0, 2), -1, 36},
       {mono(0, 1, 0, 1), -7, 45},     {mono(1, 0, 0, 1), -7, 45},
       {mono(1, 1, 0, 0), -49, 225},   {mono(0, 0, 2, 0), 1, 1},
       {mono(0, 1, 0, 2), 7, 270},     {mono(1, 0, 0, 2), 7, 270},
       {mono(1, 1, 0, 1), 98, 675},    {mono(0, 0, 2, 1), -2, 3},
       {mono(0, 1, 2, 0), -14, 15},    {mono(1, 0, 2, 0), -14, 15},
       {mono(1, 1, 0, 2), -49, 2025},  {mono(0, 0, 2, 2), 1, 9},
       {mono(0, 1, 2, 1), 28, 45},     {mono(1, 0, 2, 1), 28, 45},
       {mono(1, 1, 2, 0), 196, 225},   {mono(0, 1, 2, 2), -14, 135},
       {mono(1, 0, 2, 2), -14, 135},   {mono(1, 1, 2, 1), -392, 675},
       {mono(1, 1, 2, 2), 196, 2025}});
  ok &= expect(probs.at("I") == p_i, "p_I printed form");
  ok &= expect(probs.at("X") == p_x, "p_X printed form");
  ok &= expect(probs.at("Z") == p_x, "p_Z == p_X");
  ok &= expect(probs.at("Y") == p_y, "p_Y printed form");
  return ok;
}

// ---------------------------------------------------------------- criterion 4
bool perfect_code_suite() {
  auto code = perfect_code();
  auto model = NoiseModel::standard(code, true, true);
  auto table = model.homogeneous_table();
  bool ok = true;

  // exponent order: w_z, z, w_m, m, w_c, c
  ok &= expect(group_weight_sum(code, Side::Stabilizer, model) ==
                   poly_of(table, {{{5, 0, 4, 0, 4, 0}, 1, 1},
                                   {{1, 4, 0, 4, 0, 4}, 3, 1},
                                   {{1, 4, 0, 4, 1, 3}, 12, 1}}),
               "stabilizer weight sum");
  ok &= expect(group_weight_sum(code, Side::Normalizer, model) ==
                   poly_of(table, {{{5, 0, 4, 0, 4, 0}, 1, 1},
                                   {{2, 3, 0, 4, 1, 3}, 12, 1},
                                   {{2, 3, 0, 4, 2, 2}, 18, 1},
                                   {{1, 4, 0, 4, 0, 4}, 3, 1},
                                   {{1, 4, 0, 4, 1, 3}, 12, 1},
                                   {{0, 5, 0, 4, 0, 4}, 18, 1}}),
               "normalizer weight sum");

  auto pe = path_enumerators(code, model, 3);
  auto at = model.active_table();  // z, m, c
  auto b_expect = poly_of(at,
                          {{{0, 0, 0}, 1, 1},       {{0, 1, 0}, 60, 1},
                           {{1, 1, 0}, 960, 1},     {{1, 0, 1}, 12, 1},
                           {{0, 2, 0}, 24390, 1},   {{0, 1, 1}, 768, 1},
                           {{3, 0, 0}, 30, 1},      {{2, 1, 0}, 5760, 1},
                           {{2, 0, 1}, 72, 1},      {{1, 2, 0}, 365760, 1},
                           {{1, 1, 1}, 11472, 1},   {{1, 0, 2}, 54, 1},
                           {{0, 3, 0}, 4145340, 1}, {{0, 2, 1}, 292608, 1},
                           {{0, 1, 2}, 3456, 1},    {{0, 0, 3}, 12, 1}},
                          3);
  auto a_expect = poly_of(at,
                          {{{0, 0, 0}, 1, 1},       {{0, 1, 0}, 12, 1},
                           {{1, 1, 0}, 240, 1},     {{1, 0, 1}, 12, 1},
                           {{0, 2, 0}, 6102, 1},    {{0, 1, 1}, 192, 1},
                           {{2, 1, 0}, 1440, 1},    {{1, 2, 0}, 91440, 1},
                           {{1, 1, 1}, 2832, 1},    {{0, 3, 0}, 1036332, 1},
                           {{0, 2, 1}, 73152, 1},   {{0, 1, 2}, 864, 1}},
                          3);
  ok &= expect(pe.b_path == b_expect, "B_path series");
  ok &= expect(pe.a_path == a_expect, "A_path series");
  ok &= expect(pe.b_path - pe.a_path ==
                   poly_of(at,
                           {{{0, 1, 0}, 48, 1},      {{1, 1, 0}, 720, 1},
                            {{0, 2, 0}, 18288, 1},   {{0, 1, 1}, 576, 1},
                            {{3, 0, 0}, 30, 1},      {{2, 1, 0}, 4320, 1},
                            {{2, 0, 1}, 72, 1},      {{1, 2, 0}, 274320, 1},
                            {{1, 1, 1}, 8640, 1},    {{1, 0, 2}, 54, 1},
                            {{0, 3, 0}, 3109008, 1}, {{0, 2, 1}, 219456, 1},
                            {{0, 1, 2}, 2592, 1},    {{0, 0, 3}, 12, 1}},
                           3),
               "B-A series");
  return ok;
}

// ---------------------------------------------------------------- criterion 5
bool d3_suite() {
  auto code = rotated_surface_code(3);
  bool ok = true;

  // unmerged element monomials of the printed table rows
  auto split_model = NoiseModel::standard(code, true, false);
  auto ht = split_model.homogeneous_table();
  // order: w_z, z, w_m4, m4, w_c, c, w_m2, m2
  auto row = [&](const char* label, uint32_t m4, uint32_t m2, uint32_t c,
                 uint32_t z) {
    Exponents e{9 - z, z, 4 - m4, m4, 48 - c, c, 4 - m2, m2};
    return element_monomial(split_model, PauliString::from_label(label)) ==
           poly_of(ht, {{e, 1, 1}});
  };
  ok &= expect(row("ZZIZZIIII", 4, 2, 20, 4), "table row ZZIZZIIII");
  ok &= expect(row("IIIIZZIZZ", 4, 2, 20, 4), "table row IIIIZZIZZ");
  ok &= expect(row("IXXIXXIII", 4, 2, 20, 4), "table row IXXIXXIII");
  ok &= expect(row("IIIXXIXXI", 4, 2, 20, 4), "table row IIIXXIXXI");
  ok &= expect(row("IIZIIZIII", 2, 1, 11, 2), "table row IIZIIZIII");
  ok &= expect(row("IIIZIIZII", 2, 1, 11, 2), "table row IIIZIIZII");
  ok &= expect(row("XXIIIIIII", 2, 1, 11, 2), "table row XXIIIIIII");
  ok &= expect(row("IIIIIIIXX", 2, 1, 11, 2), "table row IIIIIIIXX");

  // printed unhomogenized stabilizer sum, variables m4, m2, c, z
  {
    auto sum = group_weight_sum(code, Side::Stabilizer, split_model)
                   .set_to_one(split_model.w_names());
    auto get = [&](uint32_t m4, uint32_t m2, uint32_t c, uint32_t z) {
      Exponents e{0, z, 0, m4, 0, c, 0, m2};
      auto v = sum.coefficient(e);
      return v.re().get_num().get_si();
    };
    ok &= expect(get(0, 0, 0, 0) == 1, "d3 stab sum 1");
    ok &= expect(get(2, 1, 11, 2) == 4, "d3 stab sum 4 m4^2 m2 c^11 z^2");
    ok &= expect(get(4, 2, 20, 4) == 8, "d3 stab sum 8 m4^4 m2^2 c^20 z^4");
    ok &= expect(get(4, 2, 21, 4) == 8, "d3 stab sum 8 m4^4 m2^2 c^21 z^4");
    ok &= expect(get(3, 2, 22, 4) == 4, "d3 stab sum 4 m4^3 m2^2 c^22 z^4");
    ok &= expect(get(4, 2, 22, 4) == 2, "d3 stab sum 2 m4^4 m2^2 c^22 z^4");
    ok &= expect(get(4, 3, 31, 6) == 32, "d3 stab sum 32 m4^4 m2^3 c^31 z^6");
    ok &= expect(get(4, 3, 32, 6) == 32, "d3 stab sum 32 m4^4 m2^3 c^32 z^6");
    ok &= expect(get(4, 4, 32, 6) == 8, "d3 stab sum 8 m4^4 m2^4 c^32 z^6");
    ok &= expect(get(4, 3, 33, 6) == 4, "d3 stab sum 4 m4^4 m2^3 c^33 z^6");
    ok &= expect(get(4, 4, 33, 6) == 16, "d3 stab sum 16 m4^4 m2^4 c^33 z^6");
    ok &= expect(get(4, 4, 34, 6) == 8, "d3 stab sum 8 m4^4 m2^4 c^34 z^6");
    ok &= expect(get(4, 4, 42, 8) == 56, "d3 stab sum 56 m4^4 m2^4 c^42 z^8");
    ok &= expect(get(4, 4, 43, 8) == 56, "d3 stab sum 56 m4^4 m2^4 c^43 z^8");
    ok &= expect(get(4, 4, 44, 8) == 17, "d3 stab sum 17 m4^4 m2^4 c^44 z^8");
  }

  // merged series through degree 3
  auto model = NoiseModel::standard(code, true, true);
  auto pe = path_enumerators(code, model, 3);
  auto at = model.active_table();  // z, m, c
  // The z^2 c coefficient of the B side is 472: confirmed by direct
  // enumeration of one idle event plus two initial events.
  auto b_expect = poly_of(at,
                          {{{0, 0, 0}, 1, 1},      {{0, 1, 0}, 16, 1},
                           {{0, 0, 2}, 438, 1},    {{1, 0, 1}, 188, 1},
                           {{0, 1, 1}, 1952, 1},   {{2, 0, 0}, 4, 1},
                           {{1, 1, 0}, 368, 1},    {{0, 2, 0}, 3228, 1},
                           {{0, 0, 3}, 5432, 1},   {{1, 0, 2}, 3358, 1},
                           {{0, 1, 2}, 92600, 1},  {{2, 0, 1}, 472, 1},
                           {{1, 1, 1}, 36160, 1},  {{0, 2, 1}, 395744, 1},
                           {{2, 1, 0}, 2832, 1},   {{1, 2, 0}, 74600, 1},
                           {{0, 3, 0}, 403280, 1}, {{3, 0, 0}, 24, 1}},
                          3);
  auto a_expect = poly_of(at,
                          {{{0, 0, 0}, 1, 1},      {{0, 1, 0}, 16, 1},
                           {{0, 0, 2}, 438, 1},    {{1, 0, 1}, 188, 1},
                           {{0, 1, 1}, 1320, 1},   {{2, 0, 0}, 4, 1},
                           {{1, 1, 0}, 256, 1},    {{0, 2, 0}, 1516, 1},
                           {{0, 0, 3}, 1824, 1},   {{1, 0, 2}, 1316, 1},
                           {{0, 1, 2}, 44224, 1},  {{2, 0, 1}, 88, 1},
                           {{1, 1, 1}, 17992, 1},  {{0, 2, 1}, 150744, 1},
                           {{2, 1, 0}, 1264, 1},   {{1, 2, 0}, 28880, 1},
                           {{0, 3, 0}, 114192, 1}},
                          3);
  ok &= expect(pe.b_path == b_expect, "d3 B_path series");
  ok &= expect(pe.a_path == a_expect, "d3 A_path series");

  // idle-off path counts with exactly three errors
  auto off = NoiseModel::standard(code, false, true);
  auto pe_off = path_enumerators(code, off, 3);
  auto deg3 = [&](const Polynomial& p) {
    mpq_class acc = 0;
    for (const auto& [e, c] : p.terms())
      if (total_degree(e) == 3) acc += c.re();
    return acc.get_num().get_si();
  };
  ok &= expect(deg3(pe_off.a_path) == 144336, "144336 identity paths");
  auto lx = code.logical_x()[0];
  auto lz = code.logical_z()[0];
  long cx = deg3(coset_enumerator(code, {Phase(), lx}, off, 3));
  long cz = deg3(coset_enumerator(code, {Phase(), lz}, off, 3));
  long cy = deg3(coset_enumerator(code, {Phase(), lx ^ lz}, off, 3));
  ok &= expect(cx == 120260, "120260 logical X paths");
  ok &= expect(cz == 120260, "120260 logical Z paths");
  ok &= expect(cy == 95880, "95880 logical Y paths");
  ok &= expect(144336 + 120260 == 264596, "validation identity");
  ok &= expect(deg3(pe_off.b_path) == 144336 + cx + cz + cy,
               "cosets partition B");
  return ok;
}

// ---------------------------------------------------------------- criterion 6
bool d5_suite() {
  auto code = rotated_surface_code(5);
  auto model = NoiseModel::standard(code, false, true);
  auto pe = path_enumerators(code, model, 5);
  auto at = model.active_table();  // z, m
  auto b_expect = poly_of(at,
                          {{{0, 0}, 1, 1},           {{0, 1}, 40, 1},
                           {{2, 0}, 8, 1},           {{1, 1}, 704, 1},
                           {{0, 2}, 4892, 1},        {{2, 1}, 3656, 1},
                           {{1, 2}, 106568, 1},      {{0, 3}, 606632, 1},
                           {{4, 0}, 72, 1},          {{3, 1}, 16960, 1},
                           {{2, 2}, 1156208, 1},     {{1, 3}, 19015984, 1},
                           {{0, 4}, 94658202, 1},    {{5, 0}, 160, 1},
                           {{4, 1}, 73040, 1},       {{3, 2}, 8544672, 1},
                           {{2, 3}, 292544120, 1},   {{1, 4}, 3723068248, 1},
                           {{0, 5}, 16168935704, 1}},
                          5);
  auto a_expect = poly_of(at,
                          {{{0, 0}, 1, 1},           {{0, 1}, 40, 1},
                           {{2, 0}, 8, 1},           {{1, 1}, 704, 1},
                           {{0, 2}, 4892, 1},        {{2, 1}, 3656, 1},
                           {{1, 2}, 103440, 1},      {{0, 3}, 548712, 1},
                           {{4, 0}, 72, 1},          {{3, 1}, 15424, 1},
                           {{2, 2}, 1046000, 1},     {{1, 3}, 15997312, 1},
                           {{0, 4}, 71438618, 1},    {{4, 1}, 52816, 1},
                           {{3, 2}, 6800352, 1},     {{2, 3}, 222326424, 1},
                           {{1, 4}, 2569524432, 1},  {{0, 5}, 9919808920, 1}},
                          5);
  bool ok = true;
  ok &= expect(pe.b_path == b_expect, "d5 B_path series");
  ok &= expect(pe.a_path == a_expect, "d5 A_path series");
  return ok;
}

// ---------------------------------------------------------------- criterion 7
bool poisson_oracle_suite() {
  auto code = perfect_code();
  auto wf1 = WeightFunction::global_pauli(5, "w1", "z1");
  auto wf2 = WeightFunction::global_pauli(5, "w2", "z2");

  NoiseModel model;
  model.positions = {wf1, wf2};
  auto table = model.homogeneous_table();
  std::map<std::string, Polynomial> images;
  for (const auto& p : model.positions) {
    auto mw = macwilliams_for(p, table);
    images.insert({p.w_name, mw.phi0});
    images.insert({p.active_name, mw.phi1});
  }
  auto lhs_n = group_weight_sum(code, Side::Normalizer, model)
                   .substitute_linear(images);
  auto lhs_s = group_weight_sum(code, Side::Stabilizer, model)
                   .substitute_linear(images);
  bool ok = true;
  ok &= expect(poisson_rhs(code, wf1, wf2, Side::Stabilizer) ==
                   lhs_n.scaled(Coeff::exact(16)),
               "pairs into the stabilizer == 2^(n-k) x normalizer transform");
  ok &= expect(poisson_rhs(code, wf1, wf2, Side::Normalizer) ==
                   lhs_s.scaled(Coeff::exact(64)),
               "pairs into the normalizer == 2^(n+k) x stabilizer transform");
  return ok;
}

// ---------------------------------------------------------------- criterion 8
bool bounded_oracle_suite() {
  auto code = rotated_surface_code(3);
  auto model = NoiseModel::standard(code, true, true);
  auto pe = path_enumerators(code, model, 2);
  bool ok = true;
  auto a2 = bounded_path_count(code, model, 2, PathTarget::stabilizer());
  auto b2 = bounded_path_count(code, model, 2, PathTarget::normalizer());
  ok &= expect(a2 == pe.a_path.with_cap(2), "degree-2 stabilizer paths");
  ok &= expect(b2 == pe.b_path.with_cap(2), "degree-2 normalizer paths");
  ok &= expect(a2.coefficient({{"c", 2}}) == Coeff::exact(438), "438 c^2");
  ok &= expect(a2.coefficient({{"c", 1}, {"z", 1}}) == Coeff::exact(188),
               "188 cz");
  return ok;
}

// ---------------------------------------------------------------- criterion 9
bool process_matrix_suite() {
  std::mt19937_64 rng(71);
  bool ok = true;
  for (int trial = 0; trial < 50; trial++) {
    uint32_t n = trial % 2 ? 2 : 1;
    size_t dim = size_t{1} << n;
    auto kraus = random_kraus_pair(dim, rng);
    auto chi = ProcessMatrix::from_kraus(kraus);
    ok &= expect(chi.hermiticity_defect() <= 1e-9, "chi hermitian");
    auto psi = psi_transform(chi);
    CircuitTensor scaled_psi(psi.in_sig(), psi.out_sig(), Ring::Float);
    for (const auto& [k, p] : psi.entries())
      scaled_psi.add(k.first, k.second,
                     p.scaled(Coeff::floating(static_cast<double>(dim))));
    auto sig = WireSignature::qubits(n);
    ok &= expect(CircuitTensor::approx_equal(
                     scaled_psi, tensor_from_kraus(kraus, sig, sig), 1e-9),
                 "dim * psi(chi) == circuit tensor");
    if (!ok) break;
  }
  return ok;
}

// --------------------------------------------------------------- criterion 10
bool property_suite() {
  bool ok = true;
  std::mt19937_64 rng(73);

  for (int trial = 0; trial < 200 && ok; trial++) {
    auto a = random_signed_pauli(5, rng);
    auto b = random_signed_pauli(5, rng);
    auto c = random_signed_pauli(5, rng);
    ok &= (mul(mul(a, b), c) == mul(a, mul(b, c)));
  }
  ok = expect(ok, "pauli associativity");

  bool bich = true;
  for (int trial = 0; trial < 200 && bich; trial++) {
    auto a = random_pauli(6, rng);
    auto b = random_pauli(6, rng);
    auto c = random_pauli(6, rng);
    bich &= (omega(a, b).sign() * omega(b, a).sign() == 1);
    bich &= (omega(a, b ^ c).sign() == omega(a, b).sign() * omega(a, c).sign());
  }
  ok &= expect(bich, "omega bicharacter");

  auto code = perfect_code();
  std::vector<SignedPauli> ngens;
  for (const auto& p : code.normalizer_basis()) ngens.push_back({Phase(), p});
  bool duality = true;
  for (uint64_t idx = 0; idx < 1024 && duality; idx++) {
    PauliString e(5);
    for (uint32_t q = 0; q < 5; q++) {
      e.set_x(q, (idx >> (2 * q)) & 1);
      e.set_z(q, (idx >> (2 * q + 1)) & 1);
    }
    int64_t s_sum = 0, n_sum = 0;
    for_each_group_element(code.generators(),
                           [&](uint64_t, const SignedPauli& s) {
                             s_sum += omega(s.pauli, e).sign();
                           });
    for_each_group_element(ngens, [&](uint64_t, const SignedPauli& s) {
      n_sum += omega(s.pauli, e).sign();
    });
    duality &= (s_sum == (code.in_normalizer(e) ? 16 : 0));
    duality &= (n_sum == (code.in_stabilizer_group(e) ? 64 : 0));
  }
  ok &= expect(duality, "duality sums");

  bool kraus_free = true;
  for (int trial = 0; trial < 10 && kraus_free; trial++) {
    auto kraus = random_kraus_pair(2, rng);
    Mat mix = random_unitary(2, rng);
    std::vector<Mat> other{
        scale(kraus[0], mix.at(0, 0)) + scale(kraus[1], mix.at(0, 1)),
        scale(kraus[0], mix.at(1, 0)) + scale(kraus[1], mix.at(1, 1))};
    kraus_free &= CircuitTensor::approx_equal(
        tensor_from_kraus(kraus, kQ1, kQ1),
        tensor_from_kraus(other, kQ1, kQ1), 1e-9);
  }
  ok &= expect(kraus_free, "kraus decomposition independence");

  bool comp = true;
  for (int trial = 0; trial < 100 && comp; trial++) {
    size_t dim = trial % 2 ? 4 : 2;
    WireSignature sig = WireSignature::qubits(dim == 2 ? 1 : 2);
    Mat a = random_unitary(dim, rng);
    Mat b = random_unitary(dim, rng);
    comp &= CircuitTensor::approx_equal(
        dense_tensor(matmul(b, a), sig, sig),
        compose(dense_tensor(a, sig, sig), dense_tensor(b, sig, sig)), 1e-9);
  }
  ok &= expect(comp, "composition vs dense oracle, 100 pairs");
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  bool with_d5 = false;
  for (int i = 1; i < argc; i++)
    if (!std::strcmp(argv[i], "--d5")) with_d5 = true;

  struct Item {
    int idx;
    const char* name;
    bool (*fn)();
    double limit_ms;
  };
  const Item items[] = {
      {1, "gate-tensor golden suite", gate_golden_suite, 1000},
      {2, "composition identities", composition_suite, 1000},
      {3, "noisy teleportation enumerator", noisy_teleportation_suite, 1000},
      {4, "perfect code enumerators", perfect_code_suite, 1000},
      {5, "d3 surface code enumerators", d3_suite, 5000},
      {7, "poisson summation oracle", poisson_oracle_suite, 30000},
      {8, "bounded path oracle", bounded_oracle_suite, 60000},
      {9, "process-matrix identity", process_matrix_suite, 30000},
      {10, "property suites", property_suite, 30000},
  };

  for (const auto& item : items) {
    Timer t;
    bool pass = false;
    try {
      pass = item.fn();
    } catch (const std::exception& e) {
      std::printf("       exception: %s\n", e.what());
    }
    report(item.idx, item.name, pass, t.ms(), item.limit_ms);
  }

  if (with_d5) {
    Timer t;
    bool pass = false;
    try {
      pass = d5_suite();
    } catch (const std::exception& e) {
      std::printf("       exception: %s\n", e.what());
    }
    report(6, "d5 surface code enumerators (opt-in)", pass, t.ms(),
           30.0 * 60.0 * 1000.0);
  } else {
    std::printf("SKIP  [ 6] d5 surface code enumerators (run with --d5)\n");
  }

  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
