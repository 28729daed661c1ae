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

#ifndef QECT_ORACLE_HPP
#define QECT_ORACLE_HPP

#include "qect/enumerator.hpp"
#include "qect/tensor.hpp"

namespace qect {

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Entrywise trace-formula tensor of a single linear operator; Float ring.
/// Desk scale only (total dimension <= 8 on each side).
CircuitTensor dense_tensor(const Mat& a, const WireSignature& in_sig,
                           const WireSignature& out_sig);

/// Direct double loop over all error pairs, classifying the product's
/// membership by syndrome and logical checks. Homogeneous in both
/// positions' variables. Caps at n <= 5.
Polynomial poisson_rhs(const StabilizerCode& code, const WeightFunction& wf1,
                       const WeightFunction& wf2, Side side);

struct PathTarget {
  enum class Kind { Stabilizer, Normalizer, Coset };
  Kind kind = Kind::Stabilizer;
  SignedPauli coset_rep;

  static PathTarget stabilizer() { return {Kind::Stabilizer, {}}; }
  static PathTarget normalizer() { return {Kind::Normalizer, {}}; }
  static PathTarget coset(SignedPauli rep) {
    return {Kind::Coset, std::move(rep)};
  }
};

/// Enumerates every assignment of at most `max_events` elementary error
/// events across the model's positions and counts those whose accumulated
/// product lands in the target set. The result matches the path enumerators
/// truncated at max_events, by direct enumeration rather than duality.
Polynomial bounded_path_count(const StabilizerCode& code, const NoiseModel& model,
                              uint32_t max_events, const PathTarget& target);

}  // namespace qect

#endif
