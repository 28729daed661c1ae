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

#include "qect/pauli.hpp"

#include <algorithm>

namespace qect {

namespace {

int popcount_and(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  int c = 0;
  for (size_t i = 0; i < a.size(); i++) c += std::popcount(a[i] & b[i]);
  return c;
}

}  // namespace

PauliString PauliString::from_label(std::string_view s) {
  PauliString p(static_cast<uint32_t>(s.size()));
  for (uint32_t i = 0; i < s.size(); i++) p.set(i, s[i]);
  return p;
}

PauliString PauliString::single(uint32_t n, uint32_t q, char c) {
  PauliString p(n);
  p.set(q, c);
  return p;
}

void PauliString::set(uint32_t i, char p) {
  if (i >= n_) throw PauliError("qubit index out of range");
  switch (p) {
    case 'I': set_x(i, false); set_z(i, false); break;
    case 'X': set_x(i, true);  set_z(i, false); break;
    case 'Y': set_x(i, true);  set_z(i, true);  break;
    case 'Z': set_x(i, false); set_z(i, true);  break;
    default:
      throw PauliError(std::string("invalid Pauli character '") + p + "'");
  }
}

uint32_t PauliString::weight() const {
  uint32_t w = 0;
  for (size_t i = 0; i < x_.size(); i++) w += std::popcount(x_[i] | z_[i]);
  return w;
}

bool PauliString::is_identity() const {
  for (size_t i = 0; i < x_.size(); i++)
    if (x_[i] | z_[i]) return false;
  return true;
}

bool PauliString::identity_on(const std::vector<uint64_t>& mask) const {
  for (size_t i = 0; i < x_.size(); i++)
    if ((x_[i] | z_[i]) & mask[i]) return false;
  return true;
}

uint32_t PauliString::weight_on(const std::vector<uint64_t>& mask) const {
  uint32_t w = 0;
  for (size_t i = 0; i < x_.size(); i++)
    w += std::popcount((x_[i] | z_[i]) & mask[i]);
  return w;
}

PauliString PauliString::operator^(const PauliString& o) const {
  PauliString r = *this;
  r ^= o;
  return r;
}

PauliString& PauliString::operator^=(const PauliString& o) {
  if (o.n_ != n_) throw PauliError("length mismatch");
  for (size_t i = 0; i < x_.size(); i++) {
    x_[i] ^= o.x_[i];
    z_[i] ^= o.z_[i];
  }
  return *this;
}

std::string PauliString::str() const {
  std::string s(n_, 'I');
  for (uint32_t i = 0; i < n_; i++) s[i] = label_at(i);
  return s;
}

bool PauliString::operator<(const PauliString& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (size_t i = 0; i < x_.size(); i++) {
    if (x_[i] != o.x_[i]) return x_[i] < o.x_[i];
    if (z_[i] != o.z_[i]) return z_[i] < o.z_[i];
  }
  return false;
}

Phase omega(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) throw PauliError("length mismatch");
  int p = popcount_and(a.x_words(), b.z_words()) +
          popcount_and(a.z_words(), b.x_words());
  return (p & 1) ? Phase::minus_one() : Phase::plus_one();
}

bool commutes(const PauliString& a, const PauliString& b) {
  return omega(a, b) == Phase::plus_one();
}

SignedPauli SignedPauli::from_label(std::string_view s) {
  Phase ph = Phase::plus_one();
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    if (s[0] == '-') ph = Phase::minus_one();
    s.remove_prefix(1);
  }
  return {ph, PauliString::from_label(s)};
}

std::string SignedPauli::str() const {
  std::string sign = phase == Phase::plus_one()    ? "+"
                     : phase == Phase::minus_one() ? "-"
                     : phase == Phase::plus_i()    ? "+i"
                                                   : "-i";
  return sign + pauli.str();
}

SignedPauli mul(const SignedPauli& a, const SignedPauli& b) {
  if (a.num_qubits() != b.num_qubits()) throw PauliError("length mismatch");
  // Per qubit, with basis elements written as i^{xz} X^x Z^z:
  //   exponent of i accumulated is xa*za + xb*zb + 2*za*xb - xc*zc,
  // where (xc, zc) is the XOR of the inputs.
  const auto& ax = a.pauli.x_words();
  const auto& az = a.pauli.z_words();
  const auto& bx = b.pauli.x_words();
  const auto& bz = b.pauli.z_words();
  int g = 0;
  PauliString out(a.num_qubits());
  auto& ox = out.x_words();
  auto& oz = out.z_words();
  for (size_t i = 0; i < ax.size(); i++) {
    uint64_t cx = ax[i] ^ bx[i];
    uint64_t cz = az[i] ^ bz[i];
    g += std::popcount(ax[i] & az[i]) + std::popcount(bx[i] & bz[i]) +
         2 * std::popcount(az[i] & bx[i]) + 3 * std::popcount(cx & cz);
    ox[i] = cx;
    oz[i] = cz;
  }
  return {a.phase * b.phase * Phase::from_exponent(g), std::move(out)};
}

std::vector<uint64_t> make_mask(uint32_t n, const std::vector<uint32_t>& qubits) {
  std::vector<uint64_t> m(PauliString::words_for(n), 0);
  for (uint32_t q : qubits) {
    if (q >= n) throw PauliError("mask qubit out of range");
    m[q >> 6] |= uint64_t{1} << (q & 63);
  }
  return m;
}

GroupIterator::GroupIterator(std::vector<SignedPauli> gens, uint64_t begin,
                             uint64_t end)
    : gens_(std::move(gens)), index_(begin) {
  if (gens_.size() > kMaxGroupGenerators)
    throw PauliError("group iteration cap exceeded");
  uint64_t total = uint64_t{1} << gens_.size();
  end_ = std::min(end, total);
  uint32_t n = gens_.empty() ? 0 : gens_[0].num_qubits();
  cur_ = SignedPauli::identity(n);
  uint64_t gray = begin ^ (begin >> 1);
  for (size_t b = 0; b < gens_.size(); b++)
    if ((gray >> b) & 1) cur_ = mul(cur_, gens_[b]);
}

void GroupIterator::next() {
  ++index_;
  if (index_ < end_) cur_ = mul(cur_, gens_[std::countr_zero(index_)]);
}

namespace {

// Dense GF(2) rows over 2n columns, layout (x-part | z-part).
struct F2Matrix {
  uint32_t cols = 0;
  std::vector<std::vector<uint64_t>> rows;

  size_t words() const { return (cols + 63) >> 6; }
  static bool get(const std::vector<uint64_t>& r, uint32_t c) {
    return (r[c >> 6] >> (c & 63)) & 1;
  }
  static void flip(std::vector<uint64_t>& r, uint32_t c) {
    r[c >> 6] ^= uint64_t{1} << (c & 63);
  }
  static void xor_into(std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    for (size_t i = 0; i < a.size(); i++) a[i] ^= b[i];
  }

  // Row-reduce in place; returns pivot column per kept row. Rows that become
  // zero are recorded in zero_rows (original indices) and removed.
  std::vector<uint32_t> rref(std::vector<size_t>* zero_rows = nullptr) {
    std::vector<uint32_t> pivots;
    std::vector<size_t> origin(rows.size());
    for (size_t i = 0; i < rows.size(); i++) origin[i] = i;
    size_t rank = 0;
    for (uint32_t c = 0; c < cols && rank < rows.size(); c++) {
      size_t sel = rank;
      while (sel < rows.size() && !get(rows[sel], c)) sel++;
      if (sel == rows.size()) continue;
      std::swap(rows[rank], rows[sel]);
      std::swap(origin[rank], origin[sel]);
      for (size_t r = 0; r < rows.size(); r++)
        if (r != rank && get(rows[r], c)) xor_into(rows[r], rows[rank]);
      pivots.push_back(c);
      rank++;
    }
    if (zero_rows)
      for (size_t r = rank; r < rows.size(); r++) zero_rows->push_back(origin[r]);
    rows.resize(rank);
    return pivots;
  }
};

std::vector<uint64_t> symplectic_vector(const PauliString& p) {
  uint32_t n = p.num_qubits();
  std::vector<uint64_t> v((2 * n + 63) >> 6, 0);
  for (uint32_t i = 0; i < n; i++) {
    if (p.x_bit(i)) F2Matrix::flip(v, i);
    if (p.z_bit(i)) F2Matrix::flip(v, n + i);
  }
  return v;
}

PauliString pauli_from_symplectic(const std::vector<uint64_t>& v, uint32_t n) {
  PauliString p(n);
  for (uint32_t i = 0; i < n; i++) {
    if (F2Matrix::get(v, i)) p.set_x(i, true);
    if (F2Matrix::get(v, n + i)) p.set_z(i, true);
  }
  return p;
}

bool symplectic_product(const std::vector<uint64_t>& a,
                        const std::vector<uint64_t>& b, uint32_t n) {
  // <a,b> = ax.bz + az.bx over GF(2)
  int acc = 0;
  for (uint32_t i = 0; i < n; i++) {
    acc ^= (F2Matrix::get(a, i) & F2Matrix::get(b, n + i));
    acc ^= (F2Matrix::get(a, n + i) & F2Matrix::get(b, i));
  }
  return acc;
}

}  // namespace

StabilizerCode::StabilizerCode(std::vector<SignedPauli> generators)
    : gens_(std::move(generators)) {
  if (gens_.empty()) throw PauliError("stabilizer code needs at least one generator");
  n_ = gens_[0].num_qubits();
  for (size_t i = 0; i < gens_.size(); i++) {
    if (gens_[i].num_qubits() != n_)
      throw PauliError("generator " + std::to_string(i + 1) + " has wrong length");
    if (!gens_[i].phase.is_real())
      throw PauliError("generator " + std::to_string(i + 1) +
                       " has imaginary phase; stabilizer phases must be +-1");
  }
  for (size_t i = 0; i < gens_.size(); i++)
    for (size_t j = i + 1; j < gens_.size(); j++)
      if (!commutes(gens_[i].pauli, gens_[j].pauli))
        throw PauliError("generators " + std::to_string(i + 1) + " and " +
                         std::to_string(j + 1) + " anticommute");
  if (gens_.size() >= n_ + 1)
    throw PauliError("too many generators");
  k_ = n_ - static_cast<uint32_t>(gens_.size());
  derive();
}

void StabilizerCode::derive() {
  const uint32_t n = n_;
  // Independence check via the symplectic row space.
  F2Matrix gen_rows;
  gen_rows.cols = 2 * n;
  for (const auto& g : gens_) gen_rows.rows.push_back(symplectic_vector(g.pauli));
  {
    F2Matrix probe = gen_rows;
    std::vector<size_t> zero;
    probe.rref(&zero);
    if (!zero.empty())
      throw PauliError("generator " + std::to_string(zero.front() + 1) +
                       " is dependent on the others");
  }

  // Kernel of the check map e -> (omega(e, S_j))_j. Constraint row for S_j
  // is (z_j | x_j) so that row . (x_e | z_e) is the symplectic product.
  F2Matrix check;
  check.cols = 2 * n;
  for (const auto& g : gens_) {
    std::vector<uint64_t> row((2 * n + 63) >> 6, 0);
    for (uint32_t i = 0; i < n; i++) {
      if (g.pauli.z_bit(i)) F2Matrix::flip(row, i);
      if (g.pauli.x_bit(i)) F2Matrix::flip(row, n + i);
    }
    check.rows.push_back(std::move(row));
  }
  auto pivots = check.rref();
  std::vector<bool> is_pivot(2 * n, false);
  for (uint32_t c : pivots) is_pivot[c] = true;

  // Kernel basis: one vector per free column, lowest index first.
  std::vector<std::vector<uint64_t>> kernel;
  for (uint32_t c = 0; c < 2 * n; c++) {
    if (is_pivot[c]) continue;
    std::vector<uint64_t> v((2 * n + 63) >> 6, 0);
    F2Matrix::flip(v, c);
    for (size_t r = 0; r < check.rows.size(); r++)
      if (F2Matrix::get(check.rows[r], c)) F2Matrix::flip(v, pivots[r]);
    kernel.push_back(std::move(v));
  }
  if (kernel.size() != n + k_)
    throw PauliError("internal error: kernel rank " + std::to_string(kernel.size()));

  // Reduce the kernel modulo the stabilizer row space to pick coset
  // representatives for the logical operators.
  F2Matrix stab_rref = gen_rows;
  auto stab_pivots = stab_rref.rref();
  auto reduce_mod_stab = [&](std::vector<uint64_t> v) {
    for (size_t r = 0; r < stab_rref.rows.size(); r++)
      if (F2Matrix::get(v, stab_pivots[r])) F2Matrix::xor_into(v, stab_rref.rows[r]);
    return v;
  };
  F2Matrix quot;
  quot.cols = 2 * n;
  for (const auto& v : kernel) {
    auto red = reduce_mod_stab(v);
    bool zero = std::all_of(red.begin(), red.end(), [](uint64_t w) { return !w; });
    if (!zero) quot.rows.push_back(std::move(red));
  }
  quot.rref();
  if (quot.rows.size() != 2 * k_)
    throw PauliError("internal error: logical space rank");

  // Symplectic Gram-Schmidt with lowest-index pivoting.
  std::vector<std::vector<uint64_t>> pool = quot.rows;
  logical_x_.clear();
  logical_z_.clear();
  for (uint32_t i = 0; i < k_; i++) {
    auto vx = pool.front();
    pool.erase(pool.begin());
    size_t partner = SIZE_MAX;
    for (size_t j = 0; j < pool.size(); j++)
      if (symplectic_product(vx, pool[j], n)) { partner = j; break; }
    if (partner == SIZE_MAX)
      throw PauliError("internal error: no symplectic partner");
    auto vz = pool[partner];
    pool.erase(pool.begin() + partner);
    for (auto& u : pool) {
      if (symplectic_product(u, vz, n)) F2Matrix::xor_into(u, vx);
      if (symplectic_product(u, vx, n)) F2Matrix::xor_into(u, vz);
    }
    logical_x_.push_back(pauli_from_symplectic(vx, n));
    logical_z_.push_back(pauli_from_symplectic(vz, n));
  }

  norm_basis_.clear();
  for (const auto& g : gens_) norm_basis_.push_back(g.pauli);
  for (const auto& l : logical_x_) norm_basis_.push_back(l);
  for (const auto& l : logical_z_) norm_basis_.push_back(l);
}

std::vector<uint8_t> StabilizerCode::syndrome(const PauliString& e) const {
  if (e.num_qubits() != n_) throw PauliError("length mismatch");
  std::vector<uint8_t> s(gens_.size());
  for (size_t j = 0; j < gens_.size(); j++)
    s[j] = commutes(e, gens_[j].pauli) ? 0 : 1;
  return s;
}

bool StabilizerCode::in_normalizer(const PauliString& e) const {
  if (e.num_qubits() != n_) throw PauliError("length mismatch");
  for (const auto& g : gens_)
    if (!commutes(e, g.pauli)) return false;
  return true;
}

bool StabilizerCode::in_stabilizer_group(const PauliString& e) const {
  if (!in_normalizer(e)) return false;
  for (uint32_t i = 0; i < k_; i++)
    if (!commutes(e, logical_x_[i]) || !commutes(e, logical_z_[i])) return false;
  return true;
}

std::vector<uint8_t> StabilizerCode::logical_class(const PauliString& e) const {
  if (!in_normalizer(e)) throw PauliError("element is outside the normalizer");
  std::vector<uint8_t> bits(2 * k_);
  for (uint32_t i = 0; i < k_; i++) {
    bits[i] = commutes(e, logical_z_[i]) ? 0 : 1;         // X_L component
    bits[k_ + i] = commutes(e, logical_x_[i]) ? 0 : 1;    // Z_L component
  }
  return bits;
}

}  // namespace qect
