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

#include "qect/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace qect {

namespace {

constexpr double kDropTol = 1e-12;

VarTableRef empty_table() {
  static VarTableRef t = make_table({});
  return t;
}

// Mixed-radix enumeration of every label of a signature.
template <typename F>
void for_each_label(const WireSignature& sig, F&& f) {
  Label l(sig.size(), 0);
  while (true) {
    f(l);
    size_t i = sig.size();
    while (i > 0) {
      i--;
      if (++l[i] < sig[i].arity) break;
      l[i] = 0;
      if (i == 0) return;
    }
    if (sig.size() == 0) return;
  }
}

int label_omega_sign(uint8_t a, uint8_t b) {
  // symplectic sign between single-qubit labels (I,X,Y,Z as 0..3)
  static const int x[4] = {0, 1, 1, 0};
  static const int z[4] = {0, 0, 1, 1};
  return ((x[a] & z[b]) ^ (z[a] & x[b])) ? -1 : 1;
}

Mat basis_matrix(const WireSignature& sig, const Label& l) {
  Mat m(1, 1);
  m.at(0, 0) = 1.0;
  for (size_t i = 0; i < sig.size(); i++) {
    if (sig[i].kind == WireKind::Quantum)
      m = kron(m, pauli_matrix(quantum_label_char(l[i])));
    else
      m = kron(m, clock_matrix(sig[i].arity, l[i]));
  }
  return m;
}

uint64_t dim_of(const WireSignature& sig) {
  uint64_t d = 1;
  for (size_t i = 0; i < sig.size(); i++) d *= sig[i].dim();
  return d;
}

}  // namespace

Wire quantum_wire() { return Wire{WireKind::Quantum, 4, 0}; }

Wire classical_wire(uint32_t M) {
  if (M < 2) throw TensorError("classical wire arity must be >= 2");
  return Wire{WireKind::Classical, M, 0};
}

Wire noise_cyclic_wire(uint32_t M) {
  if (M < 2) throw TensorError("noise wire arity must be >= 2");
  return Wire{WireKind::NoiseCyclic, M, 0};
}

Wire noise_pauli_wire(uint32_t k) {
  if (k == 0 || k > 3) throw TensorError("pauli noise wire supports 1..3 qubits");
  return Wire{WireKind::NoisePauli, 1u << (2 * k), k};
}

WireSignature WireSignature::qubits(uint32_t n) {
  return WireSignature(std::vector<Wire>(n, quantum_wire()));
}

bool WireSignature::has_noise() const {
  return std::any_of(wires_.begin(), wires_.end(),
                     [](const Wire& w) { return w.is_noise(); });
}

size_t WireSignature::num_quantum() const {
  return std::count_if(wires_.begin(), wires_.end(), [](const Wire& w) {
    return w.kind == WireKind::Quantum;
  });
}

WireSignature WireSignature::concat(const WireSignature& o) const {
  std::vector<Wire> w = wires_;
  w.insert(w.end(), o.wires_.begin(), o.wires_.end());
  return WireSignature(std::move(w));
}

uint64_t WireSignature::label_space() const {
  uint64_t s = 1;
  for (const auto& w : wires_) s *= w.arity;
  return s;
}

std::string WireSignature::str() const {
  std::string s;
  for (size_t i = 0; i < wires_.size(); i++) {
    if (i) s += ",";
    switch (wires_[i].kind) {
      case WireKind::Quantum: s += "q"; break;
      case WireKind::Classical: s += "c" + std::to_string(wires_[i].arity); break;
      case WireKind::NoiseCyclic: s += "n" + std::to_string(wires_[i].arity); break;
      case WireKind::NoisePauli:
        s += "np" + std::to_string(wires_[i].pauli_qubits);
        break;
    }
  }
  return s;
}

uint8_t quantum_label_of(char p) {
  switch (p) {
    case 'I': return kLabelI;
    case 'X': return kLabelX;
    case 'Y': return kLabelY;
    case 'Z': return kLabelZ;
  }
  throw TensorError("bad Pauli character");
}

char quantum_label_char(uint8_t v) {
  static const char tab[4] = {'I', 'X', 'Y', 'Z'};
  if (v > 3) throw TensorError("bad quantum label");
  return tab[v];
}

Label label_from_pauli(const PauliString& p) {
  Label l(p.num_qubits());
  for (uint32_t i = 0; i < p.num_qubits(); i++)
    l[i] = quantum_label_of(p.label_at(i));
  return l;
}

PauliString pauli_from_label(const Label& l) {
  PauliString p(static_cast<uint32_t>(l.size()));
  for (uint32_t i = 0; i < l.size(); i++) p.set(i, quantum_label_char(l[i]));
  return p;
}

std::string label_str(const WireSignature& sig, const Label& l) {
  if (sig.empty()) return "-";
  std::string s;
  bool prev_quantum = false;
  for (size_t i = 0; i < sig.size(); i++) {
    bool q = sig[i].kind == WireKind::Quantum;
    if (i && !(q && prev_quantum)) s += ",";
    if (q)
      s += quantum_label_char(l[i]);
    else
      s += "Z^" + std::to_string(l[i]);
    prev_quantum = q;
  }
  return s;
}

// Noise wires live on input signatures; they appear on an output only as
// the pass-through half of an identity used to lift an earlier stage.
CircuitTensor::CircuitTensor(WireSignature in, WireSignature out, Ring ring,
                             VarTableRef table)
    : in_(std::move(in)), out_(std::move(out)), ring_(ring),
      table_(table ? std::move(table) : empty_table()) {}

void CircuitTensor::check_label(const WireSignature& sig, const Label& l) const {
  if (l.size() != sig.size()) throw TensorError("label length mismatch");
  for (size_t i = 0; i < l.size(); i++)
    if (l[i] >= sig[i].arity) throw TensorError("label value out of range");
}

void CircuitTensor::add(const Label& in, const Label& out, const Coeff& c) {
  add(in, out, Polynomial::constant(table_, c));
}

void CircuitTensor::add(const Label& in, const Label& out, const Polynomial& p) {
  check_label(in_, in);
  check_label(out_, out);
  if (p.ring() != ring_) throw TensorError("ring mismatch");
  if (p.is_zero()) return;
  auto key = std::make_pair(in, out);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(std::move(key), p);
    return;
  }
  it->second = it->second + p;
  bool drop = it->second.is_zero();
  if (!drop && ring_ == Ring::Float && it->second.is_constant())
    drop = std::abs(it->second.constant_value().to_complex()) < kDropTol;
  if (drop) entries_.erase(it);
}

const Polynomial* CircuitTensor::entry(const Label& in, const Label& out) const {
  auto it = entries_.find(std::make_pair(in, out));
  return it == entries_.end() ? nullptr : &it->second;
}

Coeff CircuitTensor::entry_coeff(const Label& in, const Label& out) const {
  const Polynomial* p = entry(in, out);
  if (!p) return Coeff::zero(ring_);
  return p->constant_value();
}

CircuitTensor CircuitTensor::as_float() const {
  if (ring_ == Ring::Float) return *this;
  CircuitTensor t(in_, out_, Ring::Float, table_);
  for (const auto& [k, p] : entries_) t.add(k.first, k.second, p.as_ring(Ring::Float));
  return t;
}

CircuitTensor CircuitTensor::with_table(const VarTableRef& table) const {
  if (same_table(table_, table)) return *this;
  CircuitTensor t(in_, out_, ring_, table);
  for (const auto& [k, p] : entries_) {
    Polynomial q(table, ring_, p.degree_cap());
    for (const auto& [exps, c] : p.terms()) {
      Exponents e(table->size(), 0);
      for (uint32_t i = 0; i < exps.size(); i++)
        if (exps[i]) e[table->require(table_->name(i))] = exps[i];
      q.add_term(e, c);
    }
    t.add(k.first, k.second, q);
  }
  return t;
}

bool CircuitTensor::operator==(const CircuitTensor& o) const {
  return in_ == o.in_ && out_ == o.out_ && ring_ == o.ring_ &&
         same_table(table_, o.table_) && entries_ == o.entries_;
}

bool CircuitTensor::approx_equal(const CircuitTensor& a_in,
                                 const CircuitTensor& b_in, double tol) {
  if (!(a_in.in_ == b_in.in_) || !(a_in.out_ == b_in.out_)) return false;
  CircuitTensor a = a_in, b = b_in;
  if (!same_table(a.table_, b.table_)) {
    if (a.table_->size() <= b.table_->size())
      a = a.with_table(b.table_);
    else
      b = b.with_table(a.table_);
  }
  auto zero = Polynomial(a.table_, Ring::Float);
  for (const auto& [k, p] : a.entries_) {
    const Polynomial* q = b.entry(k.first, k.second);
    if (!Polynomial::approx_equal(p.as_ring(Ring::Float),
                                  q ? q->as_ring(Ring::Float) : zero, tol))
      return false;
  }
  for (const auto& [k, q] : b.entries_)
    if (!a.entry(k.first, k.second) &&
        !Polynomial::approx_equal(zero, q.as_ring(Ring::Float), tol))
      return false;
  return true;
}

std::string CircuitTensor::str() const {
  std::ostringstream os;
  os << "[" << in_.str() << " -> " << out_.str() << "]";
  for (const auto& [k, p] : entries_) {
    os << "\n  e[" << label_str(in_, k.first) << " -> "
       << label_str(out_, k.second) << "] = " << p.str();
  }
  return os.str();
}

std::string CircuitTensor::json() const {
  nlohmann::json j;
  auto sig_json = [](const WireSignature& s) {
    std::vector<std::string> v;
    for (size_t i = 0; i < s.size(); i++) {
      WireSignature one(std::vector<Wire>{s[i]});
      v.push_back(one.str());
    }
    return v;
  };
  j["in"] = sig_json(in_);
  j["out"] = sig_json(out_);
  auto terms = nlohmann::json::array();
  for (const auto& [k, p] : entries_)
    terms.push_back({label_str(in_, k.first), label_str(out_, k.second),
                     nlohmann::json::parse(p.json())});
  j["terms"] = std::move(terms);
  return j.dump();
}

// ---- constructors ----

CircuitTensor identity_tensor(const WireSignature& sig, VarTableRef table) {
  CircuitTensor t(sig, sig, Ring::Exact, std::move(table));
  for_each_label(sig, [&](const Label& l) { t.add(l, l, Coeff::exact(1)); });
  return t;
}

CircuitTensor tensor_from_unitary(const Mat& u) {
  if (u.rows != u.cols) throw TensorError("unitary must be square");
  uint32_t m = 0;
  while ((size_t{1} << m) < u.rows) m++;
  if ((size_t{1} << m) != u.rows) throw TensorError("dimension is not a power of two");
  if (!is_unitary(u)) throw TensorError("matrix is not unitary");

  WireSignature sig = WireSignature::qubits(m);
  CircuitTensor t(sig, sig, Ring::Float);
  double norm = 1.0 / static_cast<double>(u.rows);
  Mat udag = u.dagger();
  for_each_label(sig, [&](const Label& lin) {
    Mat e = basis_matrix(sig, lin);
    Mat left = matmul(e.dagger(), udag);
    for_each_label(sig, [&](const Label& lout) {
      Mat ep = basis_matrix(sig, lout);
      std::complex<double> v = trace(matmul(left, matmul(ep, u))) * norm;
      if (std::abs(v) > kDropTol) t.add(lin, lout, Coeff::floating(v));
    });
  });
  return t;
}

SignedPauli CliffordMap::image(const PauliString& p) const {
  uint32_t n = num_qubits();
  if (p.num_qubits() != n) throw TensorError("length mismatch");
  int ys = 0;
  for (uint32_t i = 0; i < n; i++)
    if (p.x_bit(i) && p.z_bit(i)) ys++;
  SignedPauli acc{Phase::from_exponent(ys), PauliString(n)};
  for (uint32_t i = 0; i < n; i++)
    if (p.x_bit(i)) acc = mul(acc, image_x[i]);
  for (uint32_t i = 0; i < n; i++)
    if (p.z_bit(i)) acc = mul(acc, image_z[i]);
  return acc;
}

CliffordMap clifford_h() {
  return {{SignedPauli::from_label("+Z")}, {SignedPauli::from_label("+X")}};
}
CliffordMap clifford_s() {
  return {{SignedPauli::from_label("+Y")}, {SignedPauli::from_label("+Z")}};
}
CliffordMap clifford_sdg() {
  return {{SignedPauli::from_label("-Y")}, {SignedPauli::from_label("+Z")}};
}
CliffordMap clifford_pauli(char p) {
  PauliString g = PauliString::single(1, 0, p);
  auto sign = [&](char q) {
    return commutes(g, PauliString::single(1, 0, q)) ? Phase::plus_one()
                                                     : Phase::minus_one();
  };
  return {{SignedPauli{sign('X'), PauliString::from_label("X")}},
          {SignedPauli{sign('Z'), PauliString::from_label("Z")}}};
}
CliffordMap clifford_cx() {
  return {{SignedPauli::from_label("+XX"), SignedPauli::from_label("+IX")},
          {SignedPauli::from_label("+ZI"), SignedPauli::from_label("+ZZ")}};
}

CircuitTensor tensor_from_clifford(const CliffordMap& g) {
  uint32_t n = g.num_qubits();
  if (g.image_z.size() != n) throw TensorError("clifford table size mismatch");
  if (n > 8) throw TensorError("clifford tensor cap exceeded");
  auto check_real = [](const SignedPauli& s) {
    if (!s.phase.is_real())
      throw TensorError("clifford table image has imaginary phase");
  };
  for (uint32_t i = 0; i < n; i++) {
    check_real(g.image_x[i]);
    check_real(g.image_z[i]);
    if (g.image_x[i].num_qubits() != n || g.image_z[i].num_qubits() != n)
      throw TensorError("clifford table image length mismatch");
  }
  // The images must reproduce the generator commutation relations.
  auto pair_ok = [&](const SignedPauli& a, const SignedPauli& b, bool anti) {
    return commutes(a.pauli, b.pauli) != anti;
  };
  for (uint32_t i = 0; i < n; i++)
    for (uint32_t j = 0; j < n; j++) {
      if (!pair_ok(g.image_x[i], g.image_z[j], i == j) ||
          !pair_ok(g.image_x[i], g.image_x[j], false) ||
          !pair_ok(g.image_z[i], g.image_z[j], false))
        throw TensorError("clifford table is not a valid automorphism");
    }

  WireSignature sig = WireSignature::qubits(n);
  CircuitTensor t(sig, sig, Ring::Exact);
  for_each_label(sig, [&](const Label& lin) {
    SignedPauli img = g.image(pauli_from_label(lin));
    if (!img.phase.is_real())
      throw TensorError("clifford table is not a valid automorphism");
    t.add(lin, label_from_pauli(img.pauli),
          Coeff::exact(img.phase.sign()));
  });
  return t;
}

CircuitTensor tensor_from_pauli(const PauliString& p) {
  uint32_t n = p.num_qubits();
  if (n > 8) throw TensorError("pauli tensor cap exceeded");
  WireSignature sig = WireSignature::qubits(n);
  CircuitTensor t(sig, sig, Ring::Exact);
  for_each_label(sig, [&](const Label& l) {
    t.add(l, l, Coeff::exact(omega(pauli_from_label(l), p).sign()));
  });
  return t;
}

CircuitTensor tensor_state_prep(const std::vector<SignedPauli>& gens) {
  if (gens.empty()) throw TensorError("state prep needs generators");
  uint32_t n = gens[0].num_qubits();
  if (gens.size() != n)
    throw TensorError("stabilizer state needs exactly n independent generators");
  StabilizerCode validate(gens);  // commutation/independence/phases
  CircuitTensor t(WireSignature(), WireSignature::qubits(n), Ring::Exact);
  for_each_group_element(gens, [&](uint64_t, const SignedPauli& s) {
    t.add({}, label_from_pauli(s.pauli), Coeff::exact(s.phase.sign()));
  });
  return t;
}

CircuitTensor tensor_state_prep_dense(const std::vector<std::complex<double>>& psi) {
  uint32_t m = 0;
  while ((size_t{1} << m) < psi.size()) m++;
  if ((size_t{1} << m) != psi.size()) throw TensorError("state length not a power of two");
  double norm = 0;
  for (auto v : psi) norm += std::norm(v);
  if (std::abs(norm - 1.0) > 1e-9) throw TensorError("state is not normalized");

  WireSignature out = WireSignature::qubits(m);
  CircuitTensor t(WireSignature(), out, Ring::Float);
  for_each_label(out, [&](const Label& l) {
    Mat e = basis_matrix(out, l);
    std::complex<double> v{};
    for (size_t r = 0; r < psi.size(); r++)
      for (size_t c = 0; c < psi.size(); c++)
        v += std::conj(psi[r]) * e.at(r, c) * psi[c];
    if (std::abs(v) > kDropTol) t.add({}, l, Coeff::floating(v));
  });
  return t;
}

CircuitTensor tensor_effect_dense(const std::vector<std::complex<double>>& psi) {
  double norm = 0;
  for (auto v : psi) norm += std::norm(v);
  if (norm < 1e-12) throw TensorError("effect vector is zero");
  if (std::abs(norm - 1.0) > 1e-9) throw TensorError("effect is not normalized");
  uint32_t m = 0;
  while ((size_t{1} << m) < psi.size()) m++;
  if ((size_t{1} << m) != psi.size()) throw TensorError("length not a power of two");

  WireSignature in = WireSignature::qubits(m);
  CircuitTensor t(in, WireSignature(), Ring::Float);
  double scale = 1.0 / static_cast<double>(psi.size());
  for_each_label(in, [&](const Label& l) {
    Mat e = basis_matrix(in, l);
    std::complex<double> v{};
    for (size_t r = 0; r < psi.size(); r++)
      for (size_t c = 0; c < psi.size(); c++)
        v += std::conj(psi[r]) * e.at(r, c) * psi[c];
    v *= scale;
    if (std::abs(v) > kDropTol) t.add(l, {}, Coeff::floating(v));
  });
  return t;
}

CircuitTensor tensor_destructive_meas(char p) {
  if (p != 'X' && p != 'Y' && p != 'Z')
    throw TensorError("destructive measurement needs a non-identity Pauli");
  CircuitTensor t(WireSignature::qubits(1),
                  WireSignature(std::vector<Wire>{classical_wire(2)}), Ring::Exact);
  t.add({kLabelI}, {0}, Coeff::exact(1));
  t.add({quantum_label_of(p)}, {1}, Coeff::exact(1));
  return t;
}

CircuitTensor tensor_destructive_meas_dense(const Mat& basis) {
  if (basis.rows != 2 || basis.cols != 2)
    throw TensorError("dense destructive measurement supports qubits only");
  // columns are the measurement basis states
  std::vector<std::vector<std::complex<double>>> phi = {
      {basis.at(0, 0), basis.at(1, 0)}, {basis.at(0, 1), basis.at(1, 1)}};
  WireSignature in = WireSignature::qubits(1);
  CircuitTensor t(in, WireSignature(std::vector<Wire>{classical_wire(2)}), Ring::Float);
  for (uint8_t e = 0; e < 4; e++) {
    Mat em = pauli_matrix(quantum_label_char(e)).dagger();
    for (uint8_t alpha = 0; alpha < 2; alpha++) {
      std::complex<double> v{};
      for (int j = 0; j < 2; j++) {
        std::complex<double> amp{};
        for (int r = 0; r < 2; r++)
          for (int c = 0; c < 2; c++)
            amp += std::conj(phi[j][r]) * em.at(r, c) * phi[j][c];
        v += (alpha && j ? -1.0 : 1.0) * amp;
      }
      v *= 0.5;
      if (std::abs(v) > kDropTol) t.add({e}, {alpha}, Coeff::floating(v));
    }
  }
  return t;
}

CircuitTensor tensor_projective_meas(const SignedPauli& s) {
  if (!s.phase.is_real())
    throw TensorError("projective measurement operator must have phase +-1");
  uint32_t n = s.num_qubits();
  if (n > 8) throw TensorError("projective measurement cap exceeded");
  WireSignature in = WireSignature::qubits(n);
  std::vector<Wire> outw{classical_wire(2)};
  for (uint32_t i = 0; i < n; i++) outw.push_back(quantum_wire());
  WireSignature out{outw};

  CircuitTensor t(in, out, Ring::Exact);
  for_each_label(in, [&](const Label& lp) {
    PauliString p = pauli_from_label(lp);
    if (!commutes(p, s.pauli)) return;
    Label out0(lp);
    out0.insert(out0.begin(), 0);
    t.add(lp, out0, Coeff::exact(1));
    SignedPauli ps = mul(SignedPauli{Phase(), p}, s);
    Label out1 = label_from_pauli(ps.pauli);
    out1.insert(out1.begin(), 1);
    t.add(lp, out1, Coeff::exact(ps.phase.sign()));
  });
  return t;
}

CircuitTensor tensor_classical_fn(const std::vector<uint32_t>& truth_table,
                                  const std::vector<uint32_t>& in_arities,
                                  const std::vector<uint32_t>& out_arities) {
  uint64_t in_space = 1, out_space = 1;
  for (uint32_t a : in_arities) in_space *= a;
  for (uint32_t a : out_arities) out_space *= a;
  if (truth_table.size() != in_space)
    throw TensorError("truth table size mismatch");
  for (uint32_t v : truth_table)
    if (v >= out_space) throw TensorError("truth table value out of range");
  bool exact = true;
  for (uint32_t a : in_arities) exact &= (a == 2);
  for (uint32_t a : out_arities) exact &= (a == 2);

  std::vector<Wire> inw, outw;
  for (uint32_t a : in_arities) inw.push_back(classical_wire(a));
  for (uint32_t a : out_arities) outw.push_back(classical_wire(a));
  WireSignature in{inw}, out{outw};

  auto digits = [](uint64_t v, const std::vector<uint32_t>& ar) {
    Label l(ar.size());
    for (size_t i = ar.size(); i-- > 0;) {
      l[i] = static_cast<uint8_t>(v % ar[i]);
      v /= ar[i];
    }
    return l;
  };

  CircuitTensor t(in, out, exact ? Ring::Exact : Ring::Float);
  for_each_label(in, [&](const Label& alpha) {
    for_each_label(out, [&](const Label& beta) {
      if (exact) {
        long acc = 0;
        for (uint64_t x = 0; x < in_space; x++) {
          Label xd = digits(x, in_arities);
          Label fd = digits(truth_table[x], out_arities);
          int e = 0;
          for (size_t i = 0; i < xd.size(); i++) e ^= (alpha[i] & xd[i]);
          for (size_t j = 0; j < fd.size(); j++) e ^= (beta[j] & fd[j]);
          acc += e ? -1 : 1;
        }
        if (acc != 0)
          t.add(alpha, beta, Coeff::exact(mpq_class(acc, static_cast<long>(in_space))));
      } else {
        std::complex<double> acc{};
        for (uint64_t x = 0; x < in_space; x++) {
          Label xd = digits(x, in_arities);
          Label fd = digits(truth_table[x], out_arities);
          double th = 0;
          for (size_t i = 0; i < xd.size(); i++)
            th -= 2.0 * std::numbers::pi * alpha[i] * xd[i] / in_arities[i];
          for (size_t j = 0; j < fd.size(); j++)
            th += 2.0 * std::numbers::pi * beta[j] * fd[j] / out_arities[j];
          acc += std::complex<double>{std::cos(th), std::sin(th)};
        }
        acc /= static_cast<double>(in_space);
        if (std::abs(acc) > kDropTol) t.add(alpha, beta, Coeff::floating(acc));
      }
    });
  });
  return t;
}

CircuitTensor tensor_classical_xor() {
  return tensor_classical_fn({0, 1, 1, 0}, {2, 2}, {2});
}
CircuitTensor tensor_classical_and() {
  return tensor_classical_fn({0, 0, 0, 1}, {2, 2}, {2});
}
CircuitTensor tensor_classical_or() {
  return tensor_classical_fn({0, 1, 1, 1}, {2, 2}, {2});
}
CircuitTensor tensor_classical_not() {
  return tensor_classical_fn({1, 0}, {2}, {2});
}
CircuitTensor tensor_classical_mux() {
  // inputs (s, a, b): s=0 -> a, s=1 -> b
  return tensor_classical_fn({0, 0, 1, 1, 0, 1, 0, 1}, {2, 2, 2}, {2});
}

CircuitTensor tensor_controlled_pauli(const PauliString& p) {
  uint32_t n = p.num_qubits();
  if (n > 8) throw TensorError("controlled Pauli cap exceeded");
  std::vector<Wire> inw{classical_wire(2)};
  for (uint32_t i = 0; i < n; i++) inw.push_back(quantum_wire());
  WireSignature in{inw}, out = WireSignature::qubits(n);
  CircuitTensor t(in, out, Ring::Exact);
  for_each_label(out, [&](const Label& le) {
    PauliString e = pauli_from_label(le);
    Label lin(le);
    lin.insert(lin.begin(), commutes(e, p) ? 0 : 1);
    t.add(lin, le, Coeff::exact(1));
  });
  return t;
}

namespace {

int pair_kernel_sign(uint32_t alpha, uint32_t m) {
  return std::popcount(alpha & m) & 1 ? -1 : 1;
}

}  // namespace

CircuitTensor tensor_selector(const Wire& sel,
                              const std::vector<CircuitTensor>& channels) {
  if (!sel.is_noise() && sel.kind != WireKind::Classical)
    throw TensorError("selector wire must be classical or noise");
  if (channels.size() != sel.arity)
    throw TensorError("selector needs one channel per mode");
  for (const auto& ch : channels) {
    if (!(ch.in_sig() == channels[0].in_sig()) ||
        !(ch.out_sig() == channels[0].out_sig()))
      throw TensorError("selector channel signature mismatch");
    if (!same_table(ch.table(), channels[0].table()))
      throw TensorError("selector channel table mismatch");
  }
  bool exact_kernel = sel.kind == WireKind::NoisePauli || sel.arity == 2;
  bool all_exact = std::all_of(channels.begin(), channels.end(),
                               [](const auto& c) { return c.ring() == Ring::Exact; });
  Ring ring = (exact_kernel && all_exact) ? Ring::Exact : Ring::Float;

  WireSignature in = WireSignature(std::vector<Wire>{sel}).concat(channels[0].in_sig());
  CircuitTensor t(in, channels[0].out_sig(), ring, channels[0].table());
  uint32_t M = sel.arity;
  for (uint32_t m = 0; m < M; m++) {
    const CircuitTensor& ch =
        ring == Ring::Float && channels[m].ring() == Ring::Exact
            ? channels[m].as_float()
            : channels[m];
    for (const auto& [k, p] : ch.entries()) {
      const Polynomial pr = p.ring() == ring ? p : p.as_ring(ring);
      for (uint32_t alpha = 0; alpha < M; alpha++) {
        Coeff kern;
        if (sel.kind == WireKind::NoisePauli) {
          kern = Coeff::exact(mpq_class(pair_kernel_sign(alpha, m), M));
        } else if (M == 2) {
          kern = Coeff::exact(mpq_class((alpha & m & 1) ? -1 : 1, M));
        } else {
          double th = -2.0 * std::numbers::pi * alpha * m / M;
          kern = Coeff::floating(std::complex<double>{std::cos(th), std::sin(th)} /
                                 static_cast<double>(M));
        }
        if (ring == Ring::Float) kern = kern.as_float();
        Label lin(k.first);
        lin.insert(lin.begin(), static_cast<uint8_t>(alpha));
        t.add(lin, k.second, pr.scaled(kern));
      }
    }
  }
  return t;
}

CircuitTensor tensor_from_kraus(const std::vector<Mat>& kraus,
                                const WireSignature& in_sig,
                                const WireSignature& out_sig) {
  if (kraus.empty()) throw TensorError("empty Kraus list");
  uint64_t din = dim_of(in_sig), dout = dim_of(out_sig);
  if (din > 64 || dout > 64) throw TensorError("dense channel cap exceeded");
  Mat comp(din, din);
  for (const auto& a : kraus) {
    if (a.rows != dout || a.cols != din)
      throw TensorError("Kraus operator shape mismatch");
    comp = comp + matmul(a.dagger(), a);
  }
  if (max_abs_diff(comp, Mat::eye(din)) > 1e-9)
    throw TensorError("channel is not trace preserving");

  CircuitTensor t(in_sig, out_sig, Ring::Float);
  for_each_label(in_sig, [&](const Label& lin) {
    Mat edag = basis_matrix(in_sig, lin).dagger();
    for_each_label(out_sig, [&](const Label& lout) {
      Mat ep = basis_matrix(out_sig, lout);
      std::complex<double> v{};
      for (const auto& a : kraus)
        v += trace(matmul(matmul(edag, a.dagger()), matmul(ep, a)));
      v /= static_cast<double>(din);
      if (std::abs(v) > kDropTol) t.add(lin, lout, Coeff::floating(v));
    });
  });
  return t;
}

CircuitTensor uniform_pauli_noise(uint32_t n, const VarTableRef& table,
                                  const std::string& w_name,
                                  const std::string& z_name) {
  if (n < 1) throw TensorError("need at least one qubit");
  if (n > 8) throw TensorError("uniform noise tensor cap exceeded");
  Polynomial w = Polynomial::variable(table, w_name);
  Polynomial z = Polynomial::variable(table, z_name);
  Polynomial on_i = w + z.scaled(Coeff::exact(3));
  Polynomial on_p = w - z;
  std::vector<Polynomial> pow_i{Polynomial::constant(table, Coeff::exact(1))};
  std::vector<Polynomial> pow_p = pow_i;
  for (uint32_t i = 0; i < n; i++) {
    pow_i.push_back(pow_i.back() * on_i);
    pow_p.push_back(pow_p.back() * on_p);
  }
  WireSignature sig = WireSignature::qubits(n);
  CircuitTensor t(sig, sig, Ring::Exact, table);
  for_each_label(sig, [&](const Label& l) {
    uint32_t nontrivial = 0;
    for (uint8_t v : l) nontrivial += (v != kLabelI);
    t.add(l, l, pow_i[n - nontrivial] * pow_p[nontrivial]);
  });
  return t;
}

// ---- combinators ----

namespace {

// Bring two tensors onto a shared table/ring so entries can be multiplied.
void unify(CircuitTensor& a, CircuitTensor& b) {
  if (!same_table(a.table(), b.table())) {
    if (a.table()->size() == 0 || b.table()->size() == 0 ||
        a.table()->size() <= b.table()->size()) {
      a = a.with_table(b.table());
    } else {
      b = b.with_table(a.table());
    }
  }
  if (a.ring() != b.ring()) {
    a = a.as_float();
    b = b.as_float();
  }
}

}  // namespace

CircuitTensor compose(const CircuitTensor& a_in, const CircuitTensor& b_in) {
  if (!(a_in.out_sig() == b_in.in_sig()))
    throw TensorError("signature mismatch in composition: " +
                      a_in.out_sig().str() + " vs " + b_in.in_sig().str());
  CircuitTensor a = a_in, b = b_in;
  unify(a, b);

  // group b's entries by input label
  std::map<Label, std::vector<std::pair<const Label*, const Polynomial*>>> by_in;
  for (const auto& [k, p] : b.entries())
    by_in[k.first].push_back({&k.second, &p});

  CircuitTensor t(a.in_sig(), b.out_sig(), a.ring(), a.table());
  for (const auto& [k, p] : a.entries()) {
    auto it = by_in.find(k.second);
    if (it == by_in.end()) continue;
    for (const auto& [out, q] : it->second) t.add(k.first, *out, p * *q);
  }
  return t;
}

CircuitTensor kron(const CircuitTensor& a_in, const CircuitTensor& b_in) {
  CircuitTensor a = a_in, b = b_in;
  unify(a, b);
  CircuitTensor t(a.in_sig().concat(b.in_sig()), a.out_sig().concat(b.out_sig()),
                  a.ring(), a.table());
  for (const auto& [ka, pa] : a.entries())
    for (const auto& [kb, pb] : b.entries()) {
      Label in(ka.first);
      in.insert(in.end(), kb.first.begin(), kb.first.end());
      Label out(ka.second);
      out.insert(out.end(), kb.second.begin(), kb.second.end());
      t.add(in, out, pa * pb);
    }
  return t;
}

CircuitTensor trace_weights(const CircuitTensor& t_in,
                            const std::vector<NoiseWeights>& weights) {
  std::vector<size_t> noise_pos;
  for (size_t i = 0; i < t_in.in_sig().size(); i++)
    if (t_in.in_sig()[i].is_noise()) noise_pos.push_back(i);
  if (noise_pos.size() != weights.size())
    throw TensorError("need one weight assignment per noise wire, got " +
                      std::to_string(weights.size()) + " for " +
                      std::to_string(noise_pos.size()) + " wires");
  if (noise_pos.empty()) return t_in;

  VarTableRef table = weights[0][0].table();
  Ring ring = weights[0][0].ring();
  if (t_in.ring() == Ring::Float) ring = Ring::Float;
  for (size_t w = 0; w < noise_pos.size(); w++) {
    const Wire& wire = t_in.in_sig()[noise_pos[w]];
    if (wire.kind == WireKind::NoiseCyclic && wire.arity > 2) ring = Ring::Float;
  }
  CircuitTensor t = t_in.with_table(table);
  if (t.ring() != ring) t = t.as_float();

  // Fourier variables per wire: u_alpha = sum_m kernel(alpha, m) w_m.
  std::vector<std::vector<Polynomial>> u(noise_pos.size());
  for (size_t w = 0; w < noise_pos.size(); w++) {
    const Wire& wire = t.in_sig()[noise_pos[w]];
    uint32_t M = wire.arity;
    if (weights[w].size() != M)
      throw TensorError("weight count mismatch on noise wire");
    bool exact_kernel = wire.kind == WireKind::NoisePauli || M == 2;
    if (!exact_kernel && ring == Ring::Exact)
      throw TensorError("cyclic noise wire of arity > 2 requires the float ring");
    for (uint32_t alpha = 0; alpha < M; alpha++) {
      Polynomial acc(table, ring, weights[w][0].degree_cap());
      for (uint32_t m = 0; m < M; m++) {
        if (!same_table(weights[w][m].table(), table))
          throw TensorError("weight polynomials must share one table");
        const Polynomial wm = weights[w][m].ring() == ring
                                  ? weights[w][m]
                                  : weights[w][m].as_ring(ring);
        Coeff kern;
        if (wire.kind == WireKind::NoisePauli)
          kern = ring == Ring::Exact
                     ? Coeff::exact(pair_kernel_sign(alpha, m))
                     : Coeff::floating(pair_kernel_sign(alpha, m));
        else if (M == 2)
          kern = ring == Ring::Exact
                     ? Coeff::exact((alpha & m & 1) ? -1 : 1)
                     : Coeff::floating((alpha & m & 1) ? -1.0 : 1.0);
        else {
          double th = 2.0 * std::numbers::pi * alpha * m / M;
          kern = Coeff::floating({std::cos(th), std::sin(th)});
        }
        acc = acc + wm.scaled(kern);
      }
      u[w].push_back(std::move(acc));
    }
  }

  std::vector<Wire> kept;
  std::vector<bool> is_noise(t.in_sig().size(), false);
  for (size_t p : noise_pos) is_noise[p] = true;
  for (size_t i = 0; i < t.in_sig().size(); i++)
    if (!is_noise[i]) kept.push_back(t.in_sig()[i]);

  CircuitTensor out(WireSignature(kept), t.out_sig(), ring, table);
  for (const auto& [k, p] : t.entries()) {
    Polynomial v = p;
    Label lin;
    size_t w = 0;
    for (size_t i = 0; i < k.first.size(); i++) {
      if (is_noise[i])
        v = v * u[w++][k.first[i]];
      else
        lin.push_back(k.first[i]);
    }
    out.add(lin, k.second, v);
  }
  return out;
}

std::map<std::string, Polynomial> diagonal_to_pauli_probs(const CircuitTensor& t) {
  const WireSignature& sig = t.in_sig();
  if (!(sig == t.out_sig()) || sig.num_quantum() != sig.size())
    throw TensorError("expected an all-quantum square tensor");
  if (sig.size() > 4) throw TensorError("error-model extraction cap exceeded");
  for (const auto& [k, p] : t.entries())
    if (k.first != k.second) throw TensorError("tensor is not diagonal");

  Ring ring = t.ring();
  Coeff inv = ring == Ring::Exact
                  ? Coeff::exact(mpq_class(1, static_cast<long>(sig.label_space())))
                  : Coeff::floating(1.0 / static_cast<double>(sig.label_space()));
  std::map<std::string, Polynomial> probs;
  for_each_label(sig, [&](const Label& lp) {
    Polynomial acc(t.table(), ring);
    for_each_label(sig, [&](const Label& lq) {
      const Polynomial* u = t.entry(lq, lq);
      if (!u) return;
      int sign = 1;
      for (size_t i = 0; i < lp.size(); i++) sign *= label_omega_sign(lp[i], lq[i]);
      acc = acc + (sign == 1 ? *u : -*u);
    });
    probs.emplace(label_str(sig, lp), acc.scaled(inv));
  });
  return probs;
}

ProcessMatrix::ProcessMatrix(uint32_t n)
    : n_(n), dim_(size_t{1} << (2 * n)), chi_(dim_ * dim_) {}

ProcessMatrix ProcessMatrix::from_kraus(const std::vector<Mat>& kraus) {
  if (kraus.empty()) throw TensorError("empty Kraus list");
  size_t d = kraus[0].rows;
  uint32_t n = 0;
  while ((size_t{1} << n) < d) n++;
  if ((size_t{1} << n) != d || kraus[0].cols != d)
    throw TensorError("process matrix needs square power-of-two Kraus operators");
  if (n > 3) throw TensorError("process matrix cap exceeded");

  WireSignature sig = WireSignature::qubits(n);
  ProcessMatrix chi(n);
  size_t nlabels = chi.dim_;
  // lambda_{j,E} = Tr(E A_j) / dim
  std::vector<std::vector<std::complex<double>>> lam(
      kraus.size(), std::vector<std::complex<double>>(nlabels));
  size_t idx = 0;
  for_each_label(sig, [&](const Label& l) {
    Mat e = basis_matrix(sig, l);
    for (size_t j = 0; j < kraus.size(); j++)
      lam[j][idx] = trace(matmul(e, kraus[j])) / static_cast<double>(d);
    idx++;
  });
  for (size_t e = 0; e < nlabels; e++)
    for (size_t ep = 0; ep < nlabels; ep++) {
      std::complex<double> v{};
      for (size_t j = 0; j < kraus.size(); j++)
        v += lam[j][ep] * std::conj(lam[j][e]);
      chi.chi_[e * nlabels + ep] = v;
    }
  return chi;
}

double ProcessMatrix::hermiticity_defect() const {
  double d = 0;
  for (size_t e = 0; e < dim_; e++)
    for (size_t ep = 0; ep < dim_; ep++)
      d = std::max(d, std::abs(at(e, ep) - std::conj(at(ep, e))));
  return d;
}

CircuitTensor psi_transform(const ProcessMatrix& chi) {
  uint32_t n = chi.num_qubits();
  WireSignature sig = WireSignature::qubits(n);
  size_t nl = chi.side();
  double dim = static_cast<double>(size_t{1} << n);

  // Enumerate labels once.
  std::vector<Label> labels;
  for_each_label(sig, [&](const Label& l) { labels.push_back(l); });
  std::vector<PauliString> paulis;
  for (const auto& l : labels) paulis.push_back(pauli_from_label(l));
  std::map<Label, size_t> index;
  for (size_t i = 0; i < nl; i++) index[labels[i]] = i;

  CircuitTensor t(sig, sig, Ring::Float);
  for (size_t f = 0; f < nl; f++) {
    for (size_t fp = 0; fp < nl; fp++) {
      std::complex<double> acc{};
      for (size_t e = 0; e < nl; e++) {
        // Tr(F^dag E F' E'^dag) is nonzero only when E' = F xor E xor F'.
        PauliString epp = paulis[f] ^ paulis[e] ^ paulis[fp];
        size_t ep = index[label_from_pauli(epp)];
        SignedPauli prod =
            mul(mul(SignedPauli{Phase(), paulis[f]}, SignedPauli{Phase(), paulis[e]}),
                mul(SignedPauli{Phase(), paulis[fp]}, SignedPauli{Phase(), epp}));
        acc += chi.at(e, ep) * prod.phase.value() * dim;
      }
      acc /= dim * dim;
      if (std::abs(acc) > kDropTol)
        t.add(labels[f], labels[fp], Coeff::floating(acc));
    }
  }
  return t;
}

}  // namespace qect
