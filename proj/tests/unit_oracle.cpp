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

#include <random>

#include "doctest.h"
#include "qect/codes.hpp"
#include "qect/oracle.hpp"
#include "test_support.hpp"

using namespace qect;
using namespace qect::testing;

namespace {

const WireSignature kQ1 = WireSignature::qubits(1);
const WireSignature kQ2 = WireSignature::qubits(2);

Mat hadamard() {
  Mat h(2, 2);
  double s = 1.0 / std::sqrt(2.0);
  h.at(0, 0) = s; h.at(0, 1) = s; h.at(1, 0) = s; h.at(1, 1) = -s;
  return h;
}

// engine-side sum over a group of MacWilliams-transformed weight monomials
Polynomial engine_lhs(const StabilizerCode& code, Side side,
                      const WeightFunction& wf1, const WeightFunction& wf2) {
  NoiseModel model;
  model.positions = {wf1, wf2};
  auto table = model.homogeneous_table();
  std::map<std::string, Polynomial> images;
  for (const auto& p : model.positions) {
    auto mw = macwilliams_for(p, table);
    images.insert({p.w_name, mw.phi0});
    images.insert({p.active_name, mw.phi1});
  }
  return group_weight_sum(code, side, model).substitute_linear(images);
}

}  // namespace

TEST_CASE("dense tensor of standard operators") {
  CHECK(CircuitTensor::approx_equal(
      dense_tensor(hadamard(), kQ1, kQ1),
      tensor_from_clifford(clifford_h()).as_float(), 1e-12));

  // |0> preparation as a 2x1 isometry
  Mat prep(2, 1);
  prep.at(0, 0) = 1;
  CHECK(CircuitTensor::approx_equal(
      dense_tensor(prep, WireSignature(), kQ1),
      tensor_state_prep({SignedPauli::from_label("+Z")}).as_float(), 1e-12));

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 5; trial++) {
    auto t = dense_tensor(random_unitary(4, rng), kQ2, kQ2);
    Label id{kLabelI, kLabelI};
    for (const auto& [k, p] : t.entries())
      if (k.second == id) CHECK(k.first == id);
  }

  Mat big = Mat::eye(16);
  CHECK_THROWS_AS(dense_tensor(big, WireSignature::qubits(4),
                               WireSignature::qubits(4)),
                  OracleError);
}

TEST_CASE("dense tensor respects the composition law") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 10; trial++) {
    size_t dim = trial % 2 ? 4 : 2;
    WireSignature sig = WireSignature::qubits(dim == 2 ? 1 : 2);
    Mat a = random_unitary(dim, rng);
    Mat b = random_unitary(dim, rng);
    auto lhs = dense_tensor(matmul(b, a), sig, sig);
    auto rhs = compose(dense_tensor(a, sig, sig), dense_tensor(b, sig, sig));
    CHECK(CircuitTensor::approx_equal(lhs, rhs, 1e-9));
  }

  // arbitrary (non-unitary) linear operators compose the same way
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; trial++) {
    Mat a(2, 2), b(2, 2);
    for (auto& v : a.a) v = {g(rng), g(rng)};
    for (auto& v : b.a) v = {g(rng), g(rng)};
    auto lhs = dense_tensor(matmul(b, a), kQ1, kQ1);
    auto rhs = compose(dense_tensor(a, kQ1, kQ1), dense_tensor(b, kQ1, kQ1));
    CHECK(CircuitTensor::approx_equal(lhs, rhs, 1e-9));
  }
}

TEST_CASE("poisson summation against the engine, both dualities") {
  auto code = perfect_code();
  auto wf1 = WeightFunction::global_pauli(5, "w1", "z1");
  auto wf2 = WeightFunction::global_pauli(5, "w2", "z2");

  // product in the stabilizer group vs the normalizer-side transform
  auto rhs_s = poisson_rhs(code, wf1, wf2, Side::Stabilizer);
  auto lhs_n = engine_lhs(code, Side::Normalizer, wf1, wf2);
  CHECK(rhs_s == lhs_n.scaled(Coeff::exact(16)));  // q^(n-k)

  auto rhs_n = poisson_rhs(code, wf1, wf2, Side::Normalizer);
  auto lhs_s = engine_lhs(code, Side::Stabilizer, wf1, wf2);
  CHECK(rhs_n == lhs_s.scaled(Coeff::exact(64)));  // q^(n+k)
}

TEST_CASE("poisson summation with a trigger position") {
  auto code = perfect_code();
  auto wf1 = WeightFunction::global_pauli(5, "w1", "z1");
  auto wf2 = WeightFunction::support_trigger({0, 1, 2, 3, 4}, "w2", "m2");
  auto rhs = poisson_rhs(code, wf1, wf2, Side::Stabilizer);
  auto lhs = engine_lhs(code, Side::Normalizer, wf1, wf2);
  CHECK(rhs == lhs.scaled(Coeff::exact(16)));
}

TEST_CASE("identity weights count the whole pair space") {
  auto code = perfect_code();
  auto wf1 = WeightFunction::global_pauli(5, "w1", "z1");
  auto wf2 = WeightFunction::global_pauli(5, "w2", "z2");
  auto rhs = poisson_rhs(code, wf1, wf2, Side::Normalizer);
  std::map<std::string, Coeff> all_one;
  for (const auto& n : {"w1", "z1", "w2", "z2"}) all_one[n] = Coeff::exact(1);
  // pairs with product in the normalizer: 4^5 choices for E1, 64 for E2
  CHECK(rhs.evaluate(all_one) == Coeff::exact(1024 * 64));
}

TEST_CASE("bounded path counts match the enumerators at low order") {
  auto code = perfect_code();
  for (bool idle : {false, true}) {
    auto model = NoiseModel::standard(code, idle, true);
    auto pe = path_enumerators(code, model, 2);
    CHECK(bounded_path_count(code, model, 2, PathTarget::stabilizer()) ==
          pe.a_path.with_cap(2));
    CHECK(bounded_path_count(code, model, 2, PathTarget::normalizer()) ==
          pe.b_path.with_cap(2));

    auto lx = code.logical_x()[0];
    CHECK(bounded_path_count(code, model, 2,
                             PathTarget::coset(SignedPauli{Phase(), lx})) ==
          coset_enumerator(code, SignedPauli{Phase(), lx}, model, 2));
  }
}

TEST_CASE("zero-event enumeration counts only the trivial path") {
  auto code = perfect_code();
  auto model = NoiseModel::standard(code, true, true);
  auto p = bounded_path_count(code, model, 0, PathTarget::stabilizer());
  CHECK(p == Polynomial::constant(model.active_table(), Coeff::exact(1), 0));
}

TEST_CASE("enumeration caps are hard errors") {
  auto code = rotated_surface_code(3);
  auto model = NoiseModel::standard(code, true, true);
  CHECK_THROWS_AS(bounded_path_count(code, model, 4, PathTarget::stabilizer()),
                  OracleError);
}
