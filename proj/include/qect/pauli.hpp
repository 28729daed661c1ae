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

#ifndef QECT_PAULI_HPP
#define QECT_PAULI_HPP

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qect {

/// Raised when group-theoretic preconditions fail (length mismatch,
/// non-commuting stabilizer generators, dependent generators, ...).
struct PauliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A fourth root of unity, stored as an exponent of i.
class Phase {
 public:
  constexpr Phase() : exp_(0) {}
  static constexpr Phase from_exponent(int k) {
    Phase p;
    p.exp_ = static_cast<uint8_t>(((k % 4) + 4) % 4);
    return p;
  }
  static constexpr Phase plus_one() { return from_exponent(0); }
  static constexpr Phase minus_one() { return from_exponent(2); }
  static constexpr Phase plus_i() { return from_exponent(1); }
  static constexpr Phase minus_i() { return from_exponent(3); }

  int exponent() const { return exp_; }
  bool is_real() const { return (exp_ & 1) == 0; }
  /// +1 or -1; only valid when is_real().
  int sign() const {
    if (!is_real()) throw PauliError("phase is imaginary, no sign");
    return exp_ == 0 ? 1 : -1;
  }
  std::complex<double> value() const {
    switch (exp_) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }
  Phase operator*(Phase o) const { return from_exponent(exp_ + o.exp_); }
  Phase conj() const { return from_exponent(-exp_); }
  bool operator==(const Phase&) const = default;
  std::string str() const {
    static const char* s[4] = {"+1", "+i", "-1", "-i"};
    return s[exp_];
  }

 private:
  uint8_t exp_;
};

/// Element of the positive n-qubit Pauli basis in symplectic form.
/// Phases are never stored here; see SignedPauli.
class PauliString {
 public:
  PauliString() : n_(0) {}
  explicit PauliString(uint32_t n) : n_(n), x_(words_for(n)), z_(words_for(n)) {}

  /// Parse a label such as "XZZXI". Characters must be in {I,X,Y,Z}.
  static PauliString from_label(std::string_view s);

  /// Identity except for Pauli `p` on qubit `q`.
  static PauliString single(uint32_t n, uint32_t q, char p);

  uint32_t num_qubits() const { return n_; }
  size_t num_words() const { return x_.size(); }

  bool x_bit(uint32_t i) const { return (x_[i >> 6] >> (i & 63)) & 1; }
  bool z_bit(uint32_t i) const { return (z_[i >> 6] >> (i & 63)) & 1; }
  void set_x(uint32_t i, bool v) { set_bit(x_, i, v); }
  void set_z(uint32_t i, bool v) { set_bit(z_, i, v); }

  /// One of 'I','X','Y','Z'.
  char label_at(uint32_t i) const {
    static const char tab[4] = {'I', 'X', 'Z', 'Y'};
    return tab[(x_bit(i) ? 1 : 0) | (z_bit(i) ? 2 : 0)];
  }
  void set(uint32_t i, char p);

  uint32_t weight() const;
  bool is_identity() const;

  /// True when every qubit selected by `mask` carries the identity.
  bool identity_on(const std::vector<uint64_t>& mask) const;
  /// Number of mask-selected qubits carrying a non-identity factor.
  uint32_t weight_on(const std::vector<uint64_t>& mask) const;

  const std::vector<uint64_t>& x_words() const { return x_; }
  const std::vector<uint64_t>& z_words() const { return z_; }
  std::vector<uint64_t>& x_words() { return x_; }
  std::vector<uint64_t>& z_words() { return z_; }

  /// XOR of symplectic bits (product in the quotient modulo phases).
  PauliString operator^(const PauliString& o) const;
  PauliString& operator^=(const PauliString& o);

  std::string str() const;
  bool operator==(const PauliString&) const = default;
  bool operator<(const PauliString& o) const;

  static size_t words_for(uint32_t n) { return (n + 63) >> 6; }

 private:
  static void set_bit(std::vector<uint64_t>& w, uint32_t i, bool v) {
    if (v)
      w[i >> 6] |= uint64_t{1} << (i & 63);
    else
      w[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  uint32_t n_;
  std::vector<uint64_t> x_, z_;
};

/// Commutation phase: +1 when a and b commute, -1 otherwise.
Phase omega(const PauliString& a, const PauliString& b);
bool commutes(const PauliString& a, const PauliString& b);

/// A Pauli operator with its exact phase, P = phase * pauli, pauli positive.
struct SignedPauli {
  Phase phase;
  PauliString pauli;

  SignedPauli() = default;
  SignedPauli(Phase ph, PauliString p) : phase(ph), pauli(std::move(p)) {}
  static SignedPauli identity(uint32_t n) { return {Phase(), PauliString(n)}; }
  /// Parse an optional sign ('+'/'-') followed by a Pauli label.
  static SignedPauli from_label(std::string_view s);

  uint32_t num_qubits() const { return pauli.num_qubits(); }
  std::string str() const;
  bool operator==(const SignedPauli&) const = default;
};

/// Exact product with phase bookkeeping.
SignedPauli mul(const SignedPauli& a, const SignedPauli& b);
inline SignedPauli operator*(const SignedPauli& a, const SignedPauli& b) {
  return mul(a, b);
}

/// Bitmask over qubit indices, in PauliString word layout.
std::vector<uint64_t> make_mask(uint32_t n, const std::vector<uint32_t>& qubits);

constexpr uint32_t kMaxGroupGenerators = 30;

/// Visits every subset product of `gens` with subset index in [begin, end),
/// in Gray-code order so each step costs one Pauli multiplication.
/// `f` is called as f(uint64_t subset_index, const SignedPauli& element).
/// Disjoint index ranges may be visited from different threads.
template <typename F>
void for_each_group_element(const std::vector<SignedPauli>& gens,
                            uint64_t begin, uint64_t end, F&& f) {
  const size_t m = gens.size();
  if (m > kMaxGroupGenerators)
    throw PauliError("group iteration cap exceeded: " + std::to_string(m) +
                     " generators (max " + std::to_string(kMaxGroupGenerators) + ")");
  const uint64_t total = uint64_t{1} << m;
  if (end > total) end = total;
  if (begin >= end) return;
  uint32_t n = m == 0 ? 0 : gens[0].num_qubits();
  for (const auto& g : gens)
    if (g.num_qubits() != n) throw PauliError("generator length mismatch");

  // Seed the element for the Gray code of `begin`.
  SignedPauli cur = SignedPauli::identity(n);
  uint64_t gray = begin ^ (begin >> 1);
  for (size_t b = 0; b < m; b++)
    if ((gray >> b) & 1) cur = mul(cur, gens[b]);

  for (uint64_t i = begin;;) {
    f(i, cur);
    if (++i >= end) break;
    cur = mul(cur, gens[std::countr_zero(i)]);
  }
}

template <typename F>
void for_each_group_element(const std::vector<SignedPauli>& gens, F&& f) {
  if (gens.size() > kMaxGroupGenerators)
    throw PauliError("group iteration cap exceeded");
  for_each_group_element(gens, 0, uint64_t{1} << gens.size(), std::forward<F>(f));
}

/// Stream-style wrapper over for_each_group_element.
class GroupIterator {
 public:
  explicit GroupIterator(std::vector<SignedPauli> gens, uint64_t begin = 0,
                         uint64_t end = UINT64_MAX);
  bool done() const { return index_ >= end_; }
  uint64_t index() const { return index_; }
  const SignedPauli& current() const { return cur_; }
  void next();

 private:
  std::vector<SignedPauli> gens_;
  SignedPauli cur_;
  uint64_t index_, end_;
};

/// Stabilizer code: signed generator list plus derived symplectic data.
class StabilizerCode {
 public:
  /// Validates pairwise commutation, GF(2) independence, and that every
  /// generator phase is +-1. Throws PauliError naming offending indices.
  explicit StabilizerCode(std::vector<SignedPauli> generators);

  uint32_t length() const { return n_; }
  uint32_t dimension() const { return k_; }
  const std::vector<SignedPauli>& generators() const { return gens_; }

  /// Bit j is 0 iff e commutes with generator j.
  std::vector<uint8_t> syndrome(const PauliString& e) const;
  bool in_normalizer(const PauliString& e) const;
  bool in_stabilizer_group(const PauliString& e) const;

  /// n+k positive-basis generators of the normalizer; the first n-k entries
  /// are the stabilizer generators' pauli parts, followed by the chosen
  /// logical X then logical Z representatives.
  const std::vector<PauliString>& normalizer_basis() const { return norm_basis_; }
  const std::vector<PauliString>& logical_x() const { return logical_x_; }
  const std::vector<PauliString>& logical_z() const { return logical_z_; }

  /// For e in the normalizer: 2k bits (a_0..a_{k-1}, b_0..b_{k-1}) such that
  /// e lies in the coset of prod X_L[i]^a_i Z_L[i]^b_i. All-zero means e is
  /// in the stabilizer group.
  std::vector<uint8_t> logical_class(const PauliString& e) const;

 private:
  void derive();
  uint32_t n_ = 0, k_ = 0;
  std::vector<SignedPauli> gens_;
  std::vector<PauliString> norm_basis_, logical_x_, logical_z_;
};

}  // namespace qect

#endif
