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

#ifndef QECT_TENSOR_HPP
#define QECT_TENSOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qect/dense.hpp"
#include "qect/pauli.hpp"
#include "qect/poly.hpp"

namespace qect {

struct TensorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class WireKind : uint8_t {
  Quantum,      // qubit; labels 0..3 = I,X,Y,Z
  Classical,    // C^M; labels are exponents of Z_M
  NoiseCyclic,  // noise-mode selector over Z_M
  NoisePauli,   // noise-mode selector over Z_2^{2k}, Pauli pair indexing
};

struct Wire {
  WireKind kind = WireKind::Quantum;
  uint32_t arity = 4;        // number of labels on this wire
  uint32_t pauli_qubits = 0; // for NoisePauli: number of qubits addressed

  bool is_noise() const {
    return kind == WireKind::NoiseCyclic || kind == WireKind::NoisePauli;
  }
  /// Hilbert-space dimension carried by the wire.
  uint32_t dim() const { return kind == WireKind::Quantum ? 2 : arity; }
  bool operator==(const Wire&) const = default;
};

Wire quantum_wire();
Wire classical_wire(uint32_t M);
Wire noise_cyclic_wire(uint32_t M);
Wire noise_pauli_wire(uint32_t k_qubits);

class WireSignature {
 public:
  WireSignature() = default;
  explicit WireSignature(std::vector<Wire> wires) : wires_(std::move(wires)) {}
  static WireSignature qubits(uint32_t n);

  size_t size() const { return wires_.size(); }
  bool empty() const { return wires_.empty(); }
  const Wire& operator[](size_t i) const { return wires_[i]; }
  const std::vector<Wire>& wires() const { return wires_; }
  bool has_noise() const;
  size_t num_quantum() const;
  WireSignature concat(const WireSignature& o) const;
  uint64_t label_space() const;
  bool operator==(const WireSignature&) const = default;
  std::string str() const;

 private:
  std::vector<Wire> wires_;
};

/// One label value per wire; quantum wires use 0..3 = I,X,Y,Z.
using Label = std::vector<uint8_t>;

constexpr uint8_t kLabelI = 0, kLabelX = 1, kLabelY = 2, kLabelZ = 3;

uint8_t quantum_label_of(char p);
char quantum_label_char(uint8_t v);
Label label_from_pauli(const PauliString& p);
PauliString pauli_from_label(const Label& l);
/// Printable form; all-quantum signatures render as plain Pauli strings.
std::string label_str(const WireSignature& sig, const Label& l);

/// Sparse map from (input label, output label) to polynomial entries.
class CircuitTensor {
 public:
  using EntryMap = std::map<std::pair<Label, Label>, Polynomial>;

  CircuitTensor() = default;
  CircuitTensor(WireSignature in, WireSignature out, Ring ring,
                VarTableRef table = nullptr);

  const WireSignature& in_sig() const { return in_; }
  const WireSignature& out_sig() const { return out_; }
  Ring ring() const { return ring_; }
  const VarTableRef& table() const { return table_; }
  const EntryMap& entries() const { return entries_; }
  size_t num_entries() const { return entries_.size(); }

  void add(const Label& in, const Label& out, const Coeff& c);
  void add(const Label& in, const Label& out, const Polynomial& p);
  /// Null when the entry is absent.
  const Polynomial* entry(const Label& in, const Label& out) const;
  Coeff entry_coeff(const Label& in, const Label& out) const;

  CircuitTensor as_float() const;
  /// Re-keys every entry polynomial onto `table` (variables matched by name).
  CircuitTensor with_table(const VarTableRef& table) const;

  bool operator==(const CircuitTensor& o) const;
  static bool approx_equal(const CircuitTensor& a, const CircuitTensor& b,
                           double tol = 1e-9);

  std::string str() const;
  std::string json() const;

 private:
  void check_label(const WireSignature& sig, const Label& l) const;
  WireSignature in_, out_;
  Ring ring_ = Ring::Exact;
  VarTableRef table_;
  EntryMap entries_;
};

// ---- constructors ----

CircuitTensor identity_tensor(const WireSignature& sig,
                              VarTableRef table = nullptr);

/// Bloch-style tensor of a unitary on m qubits; Float ring.
CircuitTensor tensor_from_unitary(const Mat& u);

/// Clifford conjugation action given by the images of X_i and Z_i.
struct CliffordMap {
  std::vector<SignedPauli> image_x, image_z;
  uint32_t num_qubits() const { return static_cast<uint32_t>(image_x.size()); }
  /// Image of an arbitrary positive-basis element under conjugation.
  SignedPauli image(const PauliString& p) const;
};
CliffordMap clifford_h();
CliffordMap clifford_s();
CliffordMap clifford_sdg();
CliffordMap clifford_pauli(char p);
CliffordMap clifford_cx();

CircuitTensor tensor_from_clifford(const CliffordMap& g);

/// Diagonal tensor of a Pauli operator: entry (Q, Q) = omega(Q, p).
CircuitTensor tensor_from_pauli(const PauliString& p);

/// Stabilizer-state preparation from n independent commuting generators.
CircuitTensor tensor_state_prep(const std::vector<SignedPauli>& gens);
CircuitTensor tensor_state_prep_dense(const std::vector<std::complex<double>>& psi);
CircuitTensor tensor_effect_dense(const std::vector<std::complex<double>>& psi);

/// Destructive single-qubit Pauli measurement, P in {X,Y,Z}.
CircuitTensor tensor_destructive_meas(char p);
/// Destructive measurement in an explicit orthonormal qubit basis.
CircuitTensor tensor_destructive_meas_dense(const Mat& phi0_phi1_columns);

/// Projective measurement of a signed n-qubit Pauli; output wires are the
/// classical readout bit followed by the data qubits.
CircuitTensor tensor_projective_meas(const SignedPauli& s);

/// Classical function given as a flat truth table over mixed-radix inputs
/// (row-major, first wire most significant). Exact when every arity is 2.
CircuitTensor tensor_classical_fn(const std::vector<uint32_t>& truth_table,
                                  const std::vector<uint32_t>& in_arities,
                                  const std::vector<uint32_t>& out_arities);
CircuitTensor tensor_classical_xor();
CircuitTensor tensor_classical_and();
CircuitTensor tensor_classical_or();
CircuitTensor tensor_classical_not();
CircuitTensor tensor_classical_mux();  // mux(s, a, b) = s ? b : a

/// Pauli operation applied when the leading classical bit is 1.
CircuitTensor tensor_controlled_pauli(const PauliString& p);

/// Mixes M equal-signature channels behind a new leading selection wire.
/// The wire kind decides the Fourier kernel (cyclic or Pauli-pair).
CircuitTensor tensor_selector(const Wire& sel,
                              const std::vector<CircuitTensor>& channels);

CircuitTensor tensor_from_kraus(const std::vector<Mat>& kraus,
                                const WireSignature& in_sig,
                                const WireSignature& out_sig);

/// Pre-traced uniform Pauli channel on n qubits: diagonal polynomial tensor
/// with per-qubit factor (w+3z) on I and (w-z) on X,Y,Z.
CircuitTensor uniform_pauli_noise(uint32_t n, const VarTableRef& table,
                                  const std::string& w_name,
                                  const std::string& z_name);

// ---- combinators ----

/// Sparse product over the shared middle labels; runs a after... a first:
/// compose(a, b) is the tensor of "a then b".
CircuitTensor compose(const CircuitTensor& a, const CircuitTensor& b);
CircuitTensor kron(const CircuitTensor& a, const CircuitTensor& b);

/// Weight assignment for one noise wire: one polynomial per mode.
using NoiseWeights = std::vector<Polynomial>;

/// Removes every noise wire from the input signature, folding the Fourier
/// weights in. `weights` aligns with the noise wires in input order.
CircuitTensor trace_weights(const CircuitTensor& t,
                            const std::vector<NoiseWeights>& weights);

/// Inverts the omega-Fourier system on a diagonal all-quantum tensor,
/// returning the Pauli error-model probabilities keyed by label string.
std::map<std::string, Polynomial> diagonal_to_pauli_probs(const CircuitTensor& t);

// ---- process matrices ----

class ProcessMatrix {
 public:
  ProcessMatrix(uint32_t n_qubits);
  static ProcessMatrix from_kraus(const std::vector<Mat>& kraus);
  uint32_t num_qubits() const { return n_; }
  std::complex<double>& at(size_t e, size_t ep) { return chi_[e * dim_ + ep]; }
  const std::complex<double>& at(size_t e, size_t ep) const {
    return chi_[e * dim_ + ep];
  }
  size_t side() const { return dim_; }
  double hermiticity_defect() const;

 private:
  uint32_t n_;
  size_t dim_;  // 4^n
  std::vector<std::complex<double>> chi_;
};

/// MacWilliams-type transform of a process matrix; dim * psi_transform(chi)
/// reproduces the channel's circuit tensor.
CircuitTensor psi_transform(const ProcessMatrix& chi);

}  // namespace qect

#endif
