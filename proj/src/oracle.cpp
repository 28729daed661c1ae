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

#include "qect/oracle.hpp"

#include <algorithm>

namespace qect {

namespace {

constexpr double kDropTol = 1e-12;

uint64_t dim_of(const WireSignature& sig) {
  uint64_t d = 1;
  for (size_t i = 0; i < sig.size(); i++) d *= sig[i].dim();
  return d;
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

PauliString pauli_from_index(uint64_t idx, uint32_t n) {
  PauliString p(n);
  for (uint32_t q = 0; q < n; q++) {
    p.set_x(q, (idx >> (2 * q)) & 1);
    p.set_z(q, (idx >> (2 * q + 1)) & 1);
  }
  return p;
}

}  // namespace

CircuitTensor dense_tensor(const Mat& a, const WireSignature& in_sig,
                           const WireSignature& out_sig) {
  uint64_t din = dim_of(in_sig), dout = dim_of(out_sig);
  if (din > 8 || dout > 8) throw OracleError("dense oracle dimension cap exceeded");
  if (a.rows != dout || a.cols != din)
    throw OracleError("operator shape does not match the signatures");

  CircuitTensor t(in_sig, out_sig, Ring::Float);
  Mat adag = a.dagger();
  for_each_label(in_sig, [&](const Label& lin) {
    Mat left = matmul(basis_matrix(in_sig, lin).dagger(), adag);
    for_each_label(out_sig, [&](const Label& lout) {
      std::complex<double> v =
          trace(matmul(left, matmul(basis_matrix(out_sig, lout), a)));
      v /= static_cast<double>(din);
      if (std::abs(v) > kDropTol) t.add(lin, lout, Coeff::floating(v));
    });
  });
  return t;
}

Polynomial poisson_rhs(const StabilizerCode& code, const WeightFunction& wf1,
                       const WeightFunction& wf2, Side side) {
  uint32_t n = code.length();
  if (n > 5) throw OracleError("pair enumeration cap exceeded (n <= 5)");
  uint64_t nlabels = uint64_t{1} << (2 * n);

  // Precompute per-element data; membership of a product is linear in the
  // commutation bits, so classify pairs by XOR of class bits.
  std::vector<uint32_t> classbits(nlabels);
  std::vector<std::pair<uint32_t, uint32_t>> w1(nlabels), w2(nlabels);
  for (uint64_t i = 0; i < nlabels; i++) {
    PauliString p = pauli_from_index(i, n);
    uint32_t bits = 0, b = 0;
    for (const auto& g : code.generators())
      bits |= (commutes(p, g.pauli) ? 0u : 1u) << b++;
    for (uint32_t l = 0; l < code.dimension(); l++) {
      bits |= (commutes(p, code.logical_x()[l]) ? 0u : 1u) << b++;
      bits |= (commutes(p, code.logical_z()[l]) ? 0u : 1u) << b++;
    }
    classbits[i] = bits;
    w1[i] = wf1.weight(p);
    w2[i] = wf2.weight(p);
  }
  uint32_t syndrome_mask = (1u << code.generators().size()) - 1;

  auto max_active = [](const WeightFunction& wf) {
    return wf.kind == WeightFunction::Kind::SupportTrigger ? 1u : wf.local_size();
  };
  uint32_t s1 = max_active(wf1), s2 = max_active(wf2);
  std::vector<int64_t> counts((s1 + 1) * (s2 + 1), 0);
  for (uint64_t i = 0; i < nlabels; i++) {
    for (uint64_t j = 0; j < nlabels; j++) {
      uint32_t cls = classbits[i] ^ classbits[j];
      bool member = side == Side::Stabilizer ? cls == 0
                                             : (cls & syndrome_mask) == 0;
      if (!member) continue;
      counts[w1[i].second * (s2 + 1) + w2[j].second]++;
    }
  }

  std::vector<std::string> names;
  for (const auto& s : {wf1.w_name, wf1.active_name, wf2.w_name, wf2.active_name})
    if (std::find(names.begin(), names.end(), s) == names.end()) names.push_back(s);
  VarTableRef table = make_table(names);
  Polynomial out(table, Ring::Exact);
  for (uint32_t b1 = 0; b1 <= s1; b1++)
    for (uint32_t b2 = 0; b2 <= s2; b2++) {
      int64_t c = counts[b1 * (s2 + 1) + b2];
      if (!c) continue;
      Exponents e(table->size(), 0);
      e[table->require(wf1.active_name)] += b1;
      e[table->require(wf1.w_name)] += s1 - b1;
      e[table->require(wf2.active_name)] += b2;
      e[table->require(wf2.w_name)] += s2 - b2;
      out.add_term(e, Coeff::exact(c));
    }
  return out;
}

namespace {

// One elementary fault slot: a qubit of the initial or an idle position, or
// a whole measurement-trigger position.
struct EventSlot {
  size_t position;
  uint32_t degree_var;  // index into the active table
  // choices as positive Pauli patterns on the full register
  std::vector<PauliString> patterns;
};

void enumerate_assignments(const std::vector<EventSlot>& slots, size_t first,
                           uint32_t remaining, const PauliString& acc,
                           Exponents& exps, const StabilizerCode& code,
                           const PathTarget& target, Polynomial& out) {
  // classify the accumulated product
  bool hit = false;
  switch (target.kind) {
    case PathTarget::Kind::Stabilizer:
      hit = code.in_stabilizer_group(acc);
      break;
    case PathTarget::Kind::Normalizer:
      hit = code.in_normalizer(acc);
      break;
    case PathTarget::Kind::Coset:
      hit = code.in_stabilizer_group(acc ^ target.coset_rep.pauli);
      break;
  }
  if (hit) out.add_term(exps, Coeff::exact(1));
  if (!remaining) return;
  for (size_t s = first; s < slots.size(); s++) {
    exps[slots[s].degree_var]++;
    for (const auto& pat : slots[s].patterns)
      enumerate_assignments(slots, s + 1, remaining - 1, acc ^ pat, exps, code,
                            target, out);
    exps[slots[s].degree_var]--;
  }
}

}  // namespace

Polynomial bounded_path_count(const StabilizerCode& code, const NoiseModel& model,
                              uint32_t max_events, const PathTarget& target) {
  if (target.kind == PathTarget::Kind::Coset &&
      !code.in_normalizer(target.coset_rep.pauli))
    throw OracleError("coset representative has nonzero syndrome");
  uint32_t n = code.length();
  VarTableRef active = model.active_table();

  std::vector<EventSlot> slots;
  for (size_t pos = 0; pos < model.positions.size(); pos++) {
    const WeightFunction& wf = model.positions[pos];
    uint32_t var = active->require(wf.active_name);
    if (wf.kind == WeightFunction::Kind::SupportTrigger) {
      EventSlot slot{pos, var, {}};
      uint32_t r = wf.local_size();
      for (uint64_t idx = 1; idx < (uint64_t{1} << (2 * r)); idx++) {
        PauliString pat(n);
        for (uint32_t q = 0; q < r; q++) {
          pat.set_x(wf.qubits[q], (idx >> (2 * q)) & 1);
          pat.set_z(wf.qubits[q], (idx >> (2 * q + 1)) & 1);
        }
        slot.patterns.push_back(std::move(pat));
      }
      slots.push_back(std::move(slot));
    } else {
      for (uint32_t q : wf.qubits) {
        EventSlot slot{pos, var, {}};
        for (char p : {'X', 'Y', 'Z'})
          slot.patterns.push_back(PauliString::single(n, q, p));
        slots.push_back(std::move(slot));
      }
    }
  }

  // Cost guard: the exact assignment count is the sum of elementary
  // symmetric polynomials of the per-slot choice counts.
  {
    std::vector<double> esym(max_events + 1, 0.0);
    esym[0] = 1.0;
    for (const auto& s : slots) {
      double c = static_cast<double>(s.patterns.size());
      for (uint32_t k = std::min<uint32_t>(max_events, 1e9); k >= 1; k--)
        esym[k] += esym[k - 1] * c;
    }
    double total = 0;
    for (double v : esym) total += v;
    if (total > 2e7) throw OracleError("bounded enumeration cap exceeded");
  }

  Polynomial out(active, Ring::Exact, max_events);
  Exponents exps(active->size(), 0);
  enumerate_assignments(slots, 0, max_events, PauliString(n), exps, code, target,
                        out);
  return out;
}

}  // namespace qect
