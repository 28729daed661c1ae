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

#ifndef QECT_ENUMERATOR_HPP
#define QECT_ENUMERATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qect/pauli.hpp"
#include "qect/poly.hpp"

namespace qect {

struct EnumeratorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Global worker count for group enumeration; 0 picks the hardware
/// concurrency. The QECT_THREADS environment variable overrides the default.
void set_num_threads(unsigned n);
unsigned num_threads();

/// Scalar weight function mapping an n-qubit error to an exponent pair
/// (inactive, active) of its two variables.
struct WeightFunction {
  enum class Kind {
    SupportTrigger,  // (1,0) when the error restricted to `qubits` is I
    PerQubitCount,   // counts identity / non-identity factors over `qubits`
    GlobalPauli,     // PerQubitCount over every qubit
  };
  Kind kind = Kind::GlobalPauli;
  std::vector<uint32_t> qubits;
  std::string w_name, active_name;

  static WeightFunction support_trigger(std::vector<uint32_t> support,
                                        std::string w, std::string active);
  static WeightFunction per_qubit_count(std::vector<uint32_t> region,
                                        std::string w, std::string active);
  static WeightFunction global_pauli(uint32_t n, std::string w, std::string active);

  /// (a, b) exponents of (w_name, active_name) on e.
  std::pair<uint32_t, uint32_t> weight(const PauliString& e) const;
  /// Support size for triggers; region size for counts.
  uint32_t local_size() const { return static_cast<uint32_t>(qubits.size()); }
};

/// The pair of linear forms (phi0, phi1) dual to a weight function's local
/// factor. Construction brute-force checks the defining identity on the
/// local error set.
struct MacWilliamsTransform {
  Polynomial phi0, phi1;
};

MacWilliamsTransform macwilliams_for(const WeightFunction& wf,
                                     const VarTableRef& table,
                                     std::optional<uint32_t> cap = std::nullopt);

enum class Side { Stabilizer, Normalizer };

/// Ordered noise positions of a syndrome-extraction round: one initial
/// per-qubit channel, one trigger per generator, optionally one idle
/// region per generator.
struct NoiseModel {
  std::vector<WeightFunction> positions;
  bool include_idle = false;

  /// The standard model: initial channel in (w_z, z); measurement triggers
  /// in (w_m, m) when merged, or (w_m<r>, m<r>) keyed by support size when
  /// not; idle regions in (w_c, c).
  static NoiseModel standard(const StabilizerCode& code, bool include_idle,
                             bool merge_measure_vars);

  size_t num_positions() const { return positions.size(); }
  /// Homogenizing variable names, deduplicated in position order.
  std::vector<std::string> w_names() const;
  /// Table over every variable: homogeneous form.
  VarTableRef homogeneous_table() const;
  /// Table over the active variables only (w's evaluated at 1).
  VarTableRef active_table() const;
};

/// Raw monomial prod_j u_j^{wt_j(e)} of a single error, homogeneous form.
Polynomial element_monomial(const NoiseModel& model, const PauliString& e);

/// Sum of element monomials over the stabilizer group or the full
/// normalizer; exact, homogeneous in the w variables.
Polynomial group_weight_sum(const StabilizerCode& code, Side side,
                            const NoiseModel& model);

struct PathEnumerators {
  Polynomial a_path;  // paths whose accumulated product is a stabilizer
  Polynomial b_path;  // paths whose product lies anywhere in the normalizer
};

/// Exact error-path counts through one syndrome-extraction round,
/// truncated at max_degree, over the model's active variables.
PathEnumerators path_enumerators(const StabilizerCode& code,
                                 const NoiseModel& model, uint32_t max_degree);

/// Counts paths whose product lands in the coset L * stabilizer.
Polynomial coset_enumerator(const StabilizerCode& code, const SignedPauli& L,
                            const NoiseModel& model, uint32_t max_degree);

/// Weight distributions of the stabilizer group and normalizer in variable
/// "z"; both have constant term 1.
std::pair<Polynomial, Polynomial> shor_laflamme(const StabilizerCode& code);

/// Composes the noisy measurement chain as circuit tensors, takes the
/// weighted trace, and extracts the trivial-readout diagonal. Returns the
/// same transform-side sum path_enumerators integrates, as a cross-module
/// bridge. Capped at n <= 12.
Polynomial trace_syndrome_circuit(const StabilizerCode& code,
                                  const NoiseModel& model);

}  // namespace qect

#endif
