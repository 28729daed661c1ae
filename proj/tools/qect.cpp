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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qect/circuit.hpp"
#include "qect/codes.hpp"
#include "qect/enumerator.hpp"
#include "qect/oracle.hpp"

namespace {

using namespace qect;

StabilizerCode resolve_code(const std::string& name) {
  if (name == "perfect") return perfect_code();
  if (name == "d3") return rotated_surface_code(3);
  if (name == "d5") return rotated_surface_code(5);
  return load_code_file(name);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_circuit_cmd(const std::string& path, bool traced, const std::string& out) {
  CircuitIR ir = parse_circuit(read_file(path));
  RunResult r = run(ir, traced);
  if (out == "json") {
    std::cout << r.tensor.json() << "\n";
  } else {
    std::cout << r.tensor.str() << "\n";
    if (!r.open_noise.empty()) {
      std::cout << "open noise wires:";
      for (const auto& n : r.open_noise) std::cout << " " << n;
      std::cout << "\n";
    }
  }
  return 0;
}

nlohmann::json poly_json(const Polynomial& p) {
  return nlohmann::json::parse(p.json());
}

int run_paths(const std::string& code_name, bool idle, uint32_t degree,
              bool merge, bool cosets, const std::string& out) {
  StabilizerCode code = resolve_code(code_name);
  NoiseModel model = NoiseModel::standard(code, idle, merge);
  PathEnumerators pe = path_enumerators(code, model, degree);

  nlohmann::json j;
  j["A_path"] = poly_json(pe.a_path);
  j["B_path"] = poly_json(pe.b_path);
  if (cosets && code.dimension() == 1) {
    nlohmann::json cj;
    auto rep = [&](char which) {
      PauliString x = code.logical_x()[0], z = code.logical_z()[0];
      if (which == 'X') return x;
      if (which == 'Z') return z;
      return x ^ z;
    };
    for (char whichever : {'X', 'Y', 'Z'}) {
      Polynomial c = coset_enumerator(code, SignedPauli{Phase(), rep(whichever)},
                                      model, degree);
      cj[std::string(1, whichever)] = poly_json(c);
    }
    j["cosets"] = std::move(cj);
  }
  j["meta"] = {{"n", code.length()},
               {"k", code.dimension()},
               {"degree_cap", degree},
               {"group_sizes",
                {uint64_t{1} << (code.length() - code.dimension()),
                 uint64_t{1} << (code.length() + code.dimension())}}};
  if (out == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "A_path = " << pe.a_path.str() << "\n";
    std::cout << "B_path = " << pe.b_path.str() << "\n";
    std::cout << "B-A    = " << (pe.b_path - pe.a_path).str() << "\n";
    if (j.contains("cosets"))
      for (auto& [key, val] : j["cosets"].items())
        std::cout << "coset " << key << " = " << val.dump() << "\n";
  }
  return 0;
}

int run_coset(const std::string& code_name, const std::string& logical, bool idle,
              uint32_t degree, const std::string& out) {
  StabilizerCode code = resolve_code(code_name);
  if (code.dimension() != 1)
    throw std::runtime_error("--logical X|Y|Z requires a k=1 code");
  NoiseModel model = NoiseModel::standard(code, idle, true);
  PauliString x = code.logical_x()[0], z = code.logical_z()[0];
  PauliString rep = logical == "X" ? x : logical == "Z" ? z : x ^ z;
  Polynomial c = coset_enumerator(code, SignedPauli{Phase(), rep}, model, degree);
  if (out == "json")
    std::cout << poly_json(c).dump(2) << "\n";
  else
    std::cout << "coset " << logical << " = " << c.str() << "\n";
  return 0;
}

int run_sl(const std::string& code_name, const std::string& out) {
  StabilizerCode code = resolve_code(code_name);
  auto [a, b] = shor_laflamme(code);
  if (out == "json") {
    nlohmann::json j;
    j["A"] = poly_json(a);
    j["B"] = poly_json(b);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "A(z) = " << a.str() << "\n";
    std::cout << "B(z) = " << b.str() << "\n";
  }
  return 0;
}

bool check_pauli_suite() {
  bool ok = true;
  StabilizerCode code = perfect_code();
  // duality sums over the stabilizer group and normalizer
  std::vector<SignedPauli> ngens;
  for (const auto& p : code.normalizer_basis())
    ngens.push_back(SignedPauli{Phase(), p});
  for (uint64_t probe = 0; probe < 1024 && ok; probe += 37) {
    PauliString e(5);
    for (uint32_t q = 0; q < 5; q++) {
      e.set_x(q, (probe >> (2 * q)) & 1);
      e.set_z(q, (probe >> (2 * q + 1)) & 1);
    }
    int64_t sum = 0;
    for_each_group_element(code.generators(), [&](uint64_t, const SignedPauli& s) {
      sum += omega(s.pauli, e).sign();
    });
    int64_t want = code.in_normalizer(e) ? 16 : 0;
    ok &= (sum == want);
  }
  std::cout << (ok ? "PASS" : "FAIL") << " pauli duality sums\n";
  return ok;
}

bool check_tensor_suite() {
  bool ok = true;
  // noiseless teleportation reduces to the identity
  const char* tel = R"(
input q0
prep bell q1 q2
gate cx q0 q1
measure x q0 -> b0
measure z q1 -> b1
cpauli X b1 q2
cpauli Z b0 q2
)";
  RunResult r = run(parse_circuit(tel), false);
  ok &= (r.tensor == identity_tensor(WireSignature::qubits(1), r.tensor.table()));
  std::cout << (ok ? "PASS" : "FAIL") << " teleportation identity\n";

  bool ok2 = true;
  CircuitTensor mpz = tensor_projective_meas(SignedPauli::from_label("+Z"));
  CircuitTensor sp = kron(identity_tensor(WireSignature::qubits(1)),
                          tensor_state_prep({SignedPauli::from_label("+Z")}));
  CircuitTensor md = kron(identity_tensor(WireSignature::qubits(1)),
                          tensor_destructive_meas('Z'));
  CircuitTensor pipeline = compose(compose(sp, tensor_from_clifford(clifford_cx())), md);
  // reorder: pipeline emits (qubit, bit); the direct form emits (bit, qubit)
  CircuitTensor swapped(pipeline.in_sig(), mpz.out_sig(), pipeline.ring(),
                        pipeline.table());
  for (const auto& [k, p] : pipeline.entries())
    swapped.add(k.first, {k.second[1], k.second[0]}, p);
  ok2 &= (swapped == mpz);
  std::cout << (ok2 ? "PASS" : "FAIL") << " projective measurement pipeline\n";
  return ok && ok2;
}

bool check_enumerator_suite() {
  StabilizerCode code = perfect_code();
  NoiseModel model = NoiseModel::standard(code, true, true);
  PathEnumerators pe = path_enumerators(code, model, 2);
  Polynomial a2 = bounded_path_count(code, model, 2, PathTarget::stabilizer());
  Polynomial b2 = bounded_path_count(code, model, 2, PathTarget::normalizer());
  bool ok = (a2 == pe.a_path.with_cap(2)) && (b2 == pe.b_path.with_cap(2));
  std::cout << (ok ? "PASS" : "FAIL") << " bounded path counts vs enumerators\n";
  return ok;
}

int run_check(const std::string& suite) {
  bool ok = true;
  if (suite == "pauli" || suite == "all") ok &= check_pauli_suite();
  if (suite == "tensor" || suite == "all") ok &= check_tensor_suite();
  if (suite == "enumerator" || suite == "all") ok &= check_enumerator_suite();
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact circuit tensors and error-path enumerators for stabilizer codes"};
  app.require_subcommand(1);

  std::string file, out = "text", code_name, logical = "X", suite = "all";
  uint32_t degree = 5;
  bool idle = false, merge = true, cosets = false;
  unsigned threads = 0;

  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", out, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_threads = [&](CLI::App* c) {
    c->add_option("--threads", threads, "worker threads (default: all cores)");
  };

  auto* tensor_cmd = app.add_subcommand("tensor", "compose a circuit file");
  tensor_cmd->add_option("file", file)->required();
  add_out(tensor_cmd);

  auto* trace_cmd = app.add_subcommand("trace", "composed and traced enumerator");
  trace_cmd->add_option("file", file)->required();
  add_out(trace_cmd);

  auto* paths_cmd = app.add_subcommand("paths", "error-path enumerators");
  paths_cmd->add_option("code", code_name, "perfect|d3|d5|<file>")->required();
  paths_cmd->add_flag("--idle", idle, "include idle-qubit noise");
  paths_cmd->add_option("--degree", degree, "truncation degree");
  paths_cmd->add_flag("--merge,!--no-merge", merge, "merge measurement variables");
  paths_cmd->add_flag("--cosets", cosets, "include logical coset enumerators");
  add_threads(paths_cmd);
  add_out(paths_cmd);

  auto* coset_cmd = app.add_subcommand("coset", "logical coset path counts");
  coset_cmd->add_option("code", code_name)->required();
  coset_cmd->add_option("--logical", logical)->check(CLI::IsMember({"X", "Y", "Z"}));
  coset_cmd->add_flag("--idle", idle);
  coset_cmd->add_option("--degree", degree);
  add_threads(coset_cmd);
  add_out(coset_cmd);

  auto* sl_cmd = app.add_subcommand("sl", "Shor-Laflamme weight distributions");
  sl_cmd->add_option("code", code_name)->required();
  add_out(sl_cmd);

  auto* check_cmd = app.add_subcommand("check", "run self-check suites");
  check_cmd->add_option("suite", suite, "pauli|tensor|enumerator|all")
      ->check(CLI::IsMember({"pauli", "tensor", "enumerator", "all"}));

  CLI11_PARSE(app, argc, argv);
  if (threads) qect::set_num_threads(threads);

  try {
    if (*tensor_cmd) return run_circuit_cmd(file, false, out);
    if (*trace_cmd) return run_circuit_cmd(file, true, out);
    if (*paths_cmd) return run_paths(code_name, idle, degree, merge, cosets, out);
    if (*coset_cmd) return run_coset(code_name, logical, idle, degree, out);
    if (*sl_cmd) return run_sl(code_name, out);
    if (*check_cmd) return run_check(suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
