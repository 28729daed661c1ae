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

#include "qect/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "qect/tensor.hpp"

namespace qect {

namespace {

std::atomic<unsigned> g_threads{0};

unsigned default_threads() {
  if (const char* env = std::getenv("QECT_THREADS")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace

void set_num_threads(unsigned n) { g_threads.store(n); }

unsigned num_threads() {
  unsigned n = g_threads.load();
  return n ? n : default_threads();
}

WeightFunction WeightFunction::support_trigger(std::vector<uint32_t> support,
                                               std::string w, std::string active) {
  if (support.empty()) throw EnumeratorError("empty trigger support");
  return {Kind::SupportTrigger, std::move(support), std::move(w), std::move(active)};
}

WeightFunction WeightFunction::per_qubit_count(std::vector<uint32_t> region,
                                               std::string w, std::string active) {
  return {Kind::PerQubitCount, std::move(region), std::move(w), std::move(active)};
}

WeightFunction WeightFunction::global_pauli(uint32_t n, std::string w,
                                            std::string active) {
  std::vector<uint32_t> all(n);
  for (uint32_t i = 0; i < n; i++) all[i] = i;
  return {Kind::GlobalPauli, std::move(all), std::move(w), std::move(active)};
}

std::pair<uint32_t, uint32_t> WeightFunction::weight(const PauliString& e) const {
  auto mask = make_mask(e.num_qubits(), qubits);
  if (kind == Kind::SupportTrigger)
    return e.identity_on(mask) ? std::make_pair(1u, 0u) : std::make_pair(0u, 1u);
  uint32_t b = e.weight_on(mask);
  return {local_size() - b, b};
}

MacWilliamsTransform macwilliams_for(const WeightFunction& wf,
                                     const VarTableRef& table,
                                     std::optional<uint32_t> cap) {
  Polynomial w = Polynomial::variable(table, wf.w_name, Ring::Exact, cap);
  Polynomial v = Polynomial::variable(table, wf.active_name, Ring::Exact, cap);
  uint32_t r = wf.kind == WeightFunction::Kind::SupportTrigger ? wf.local_size() : 1;
  mpz_class dim = 1;
  dim <<= r;  // 2^r
  mpz_class nlabels = 1;
  nlabels <<= 2 * r;  // 4^r
  Coeff inv_dim = Coeff::exact(mpq_class(1, dim));
  MacWilliamsTransform t{
      (w + v.scaled(Coeff::exact(mpq_class(nlabels - 1)))).scaled(inv_dim),
      (w - v).scaled(inv_dim)};

  // Self-check against the defining identity on the local error set.
  if (r <= 6) {
    PauliString id(r);
    std::vector<PauliString> locals;
    for (uint64_t idx = 0; idx < (uint64_t{1} << (2 * r)); idx++) {
      PauliString p(r);
      for (uint32_t q = 0; q < r; q++) {
        p.set_x(q, (idx >> (2 * q)) & 1);
        p.set_z(q, (idx >> (2 * q + 1)) & 1);
      }
      locals.push_back(std::move(p));
    }
    auto local_mono = [&](const PauliString& p) {
      bool active = !p.is_identity();
      return active ? v : w;
    };
    for (const auto& d : locals) {
      Polynomial rhs(table, Ring::Exact, cap);
      for (const auto& e : locals) {
        Coeff sign = Coeff::exact(omega(d, e).sign());
        rhs = rhs + local_mono(e).scaled(sign);
      }
      rhs = rhs.scaled(inv_dim);
      const Polynomial& lhs = d.is_identity() ? t.phi0 : t.phi1;
      if (!(lhs == rhs))
        throw EnumeratorError("MacWilliams self-check failed for " + wf.active_name);
    }
  }
  return t;
}

NoiseModel NoiseModel::standard(const StabilizerCode& code, bool include_idle,
                                bool merge_measure_vars) {
  NoiseModel m;
  m.include_idle = include_idle;
  uint32_t n = code.length();
  m.positions.push_back(WeightFunction::global_pauli(n, "w_z", "z"));
  for (const auto& g : code.generators()) {
    std::vector<uint32_t> supp, off;
    for (uint32_t q = 0; q < n; q++) {
      if (g.pauli.label_at(q) != 'I')
        supp.push_back(q);
      else
        off.push_back(q);
    }
    std::string suffix =
        merge_measure_vars ? "" : std::to_string(supp.size());
    m.positions.push_back(
        WeightFunction::support_trigger(supp, "w_m" + suffix, "m" + suffix));
    if (include_idle)
      m.positions.push_back(WeightFunction::per_qubit_count(off, "w_c", "c"));
  }
  return m;
}

std::vector<std::string> NoiseModel::w_names() const {
  std::vector<std::string> names;
  for (const auto& p : positions)
    if (std::find(names.begin(), names.end(), p.w_name) == names.end())
      names.push_back(p.w_name);
  return names;
}

VarTableRef NoiseModel::homogeneous_table() const {
  std::vector<std::string> names;
  auto push = [&](const std::string& s) {
    if (std::find(names.begin(), names.end(), s) == names.end())
      names.push_back(s);
  };
  for (const auto& p : positions) {
    push(p.w_name);
    push(p.active_name);
  }
  return make_table(std::move(names));
}

VarTableRef NoiseModel::active_table() const {
  std::vector<std::string> names;
  for (const auto& p : positions)
    if (std::find(names.begin(), names.end(), p.active_name) == names.end())
      names.push_back(p.active_name);
  return make_table(std::move(names));
}

Polynomial element_monomial(const NoiseModel& model, const PauliString& e) {
  VarTableRef table = model.homogeneous_table();
  Exponents exps(table->size(), 0);
  for (const auto& p : model.positions) {
    auto [a, b] = p.weight(e);
    exps[table->require(p.w_name)] += a;
    exps[table->require(p.active_name)] += b;
  }
  Polynomial out(table, Ring::Exact);
  out.add_term(exps, Coeff::exact(1));
  return out;
}

namespace {

// Positions collapse into classes with identical local transforms; only the
// per-class active counts matter, which is what makes large groups cheap.
struct WeightClass {
  bool trigger;
  uint32_t r;  // trigger support size (1 for per-qubit factors)
  std::string w_name, active_name;
  std::vector<std::vector<uint64_t>> masks;
  uint32_t max_active;
  uint64_t stride = 0;
};

std::vector<WeightClass> build_classes(const NoiseModel& model, uint32_t n) {
  std::vector<WeightClass> classes;
  for (const auto& p : model.positions) {
    bool trig = p.kind == WeightFunction::Kind::SupportTrigger;
    uint32_t r = trig ? p.local_size() : 1;
    WeightClass* cls = nullptr;
    for (auto& c : classes)
      if (c.trigger == trig && c.r == r && c.w_name == p.w_name &&
          c.active_name == p.active_name) {
        cls = &c;
        break;
      }
    if (!cls) {
      classes.push_back({trig, r, p.w_name, p.active_name, {}, 0, 0});
      cls = &classes.back();
    }
    cls->masks.push_back(make_mask(n, p.qubits));
    cls->max_active += trig ? 1 : p.local_size();
  }
  uint64_t stride = 1;
  for (auto& c : classes) {
    c.stride = stride;
    stride *= c.max_active + 1;
    if (stride > (uint64_t{1} << 26))
      throw EnumeratorError("weight histogram too large");
  }
  return classes;
}

uint64_t histogram_size(const std::vector<WeightClass>& classes) {
  uint64_t s = 1;
  for (const auto& c : classes) s *= c.max_active + 1;
  return s;
}

uint64_t key_of(const std::vector<WeightClass>& classes, const PauliString& e) {
  uint64_t key = 0;
  for (const auto& c : classes) {
    uint64_t cnt = 0;
    if (c.trigger) {
      for (const auto& m : c.masks) cnt += !e.identity_on(m);
    } else {
      for (const auto& m : c.masks) cnt += e.weight_on(m);
    }
    key += c.stride * cnt;
  }
  return key;
}

// Histogram of per-class active counts over all subset products of `gens`,
// optionally signed by commutation with a twist operator.
std::vector<int64_t> accumulate_histogram(const std::vector<SignedPauli>& gens,
                                          const std::vector<WeightClass>& classes,
                                          const PauliString* twist) {
  std::vector<int64_t> hist(histogram_size(classes), 0);
  const uint64_t total = uint64_t{1} << gens.size();
  unsigned nt = num_threads();
  if (total < 4096 || nt <= 1) {
    for_each_group_element(gens, 0, total, [&](uint64_t, const SignedPauli& s) {
      int64_t sign = twist && !commutes(s.pauli, *twist) ? -1 : 1;
      hist[key_of(classes, s.pauli)] += sign;
    });
    return hist;
  }
  nt = static_cast<unsigned>(std::min<uint64_t>(nt, total / 1024));
  std::vector<std::vector<int64_t>> parts(nt, std::vector<int64_t>(hist.size(), 0));
  std::vector<std::thread> workers;
  uint64_t chunk = (total + nt - 1) / nt;
  for (unsigned t = 0; t < nt; t++) {
    uint64_t b = t * chunk, e = std::min(total, b + chunk);
    workers.emplace_back([&, t, b, e] {
      auto& local = parts[t];
      for_each_group_element(gens, b, e, [&](uint64_t, const SignedPauli& s) {
        int64_t sign = twist && !commutes(s.pauli, *twist) ? -1 : 1;
        local[key_of(classes, s.pauli)] += sign;
      });
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& part : parts)
    for (size_t i = 0; i < hist.size(); i++) hist[i] += part[i];
  return hist;
}

std::vector<SignedPauli> side_generators(const StabilizerCode& code, Side side) {
  if (side == Side::Stabilizer) return code.generators();
  std::vector<SignedPauli> gens;
  for (const auto& p : code.normalizer_basis())
    gens.push_back(SignedPauli{Phase(), p});
  return gens;
}

mpq_class two_pow(int64_t e) {
  mpz_class z = 1;
  if (e >= 0) {
    z <<= static_cast<unsigned>(e);
    return mpq_class(z);
  }
  z <<= static_cast<unsigned>(-e);
  return mpq_class(1, z);
}

// Sum over histogram keys of count * prod_class phi0^(max-cnt) phi1^cnt,
// with the w variables already evaluated at 1.
Polynomial assemble_transformed(const std::vector<int64_t>& hist,
                                const std::vector<WeightClass>& classes,
                                const VarTableRef& active, uint32_t cap) {
  // phi powers in unhomogenized form, cached per class
  struct Pows {
    std::vector<Polynomial> p0, p1;
  };
  std::vector<Pows> pows(classes.size());
  for (size_t c = 0; c < classes.size(); c++) {
    const auto& cls = classes[c];
    Polynomial v = Polynomial::variable(active, cls.active_name, Ring::Exact, cap);
    Polynomial one = Polynomial::constant(active, Coeff::exact(1), cap);
    mpz_class dim = 1;
    dim <<= cls.r;
    mpz_class nl = 1;
    nl <<= 2 * cls.r;
    Coeff inv = Coeff::exact(mpq_class(1, dim));
    Polynomial phi0 = (one + v.scaled(Coeff::exact(mpq_class(nl - 1)))).scaled(inv);
    Polynomial phi1 = (one - v).scaled(inv);
    pows[c].p0.push_back(one);
    pows[c].p1.push_back(Polynomial::constant(active, Coeff::exact(1), cap));
    for (uint32_t e = 1; e <= cls.max_active; e++) {
      pows[c].p0.push_back(pows[c].p0.back() * phi0);
      pows[c].p1.push_back(pows[c].p1.back() * phi1);
    }
  }
  Polynomial out(active, Ring::Exact, cap);
  for (uint64_t key = 0; key < hist.size(); key++) {
    if (!hist[key]) continue;
    Polynomial term = Polynomial::constant(active, Coeff::exact(hist[key]), cap);
    uint64_t rest = key;
    for (size_t c = 0; c < classes.size(); c++) {
      uint64_t cnt = rest % (classes[c].max_active + 1);
      rest /= classes[c].max_active + 1;
      term = term * pows[c].p1[cnt] * pows[c].p0[classes[c].max_active - cnt];
    }
    out = out + term;
  }
  return out;
}

void check_integer_counts(const Polynomial& p, const char* what) {
  for (const auto& [e, c] : p.terms())
    if (c.re().get_den() != 1 || c.im() != 0)
      throw EnumeratorError(std::string("internal error: non-integer count in ") +
                            what);
}

}  // namespace

Polynomial group_weight_sum(const StabilizerCode& code, Side side,
                            const NoiseModel& model) {
  VarTableRef table = model.homogeneous_table();
  auto classes = build_classes(model, code.length());
  auto hist = accumulate_histogram(side_generators(code, side), classes, nullptr);

  Polynomial out(table, Ring::Exact);
  for (uint64_t key = 0; key < hist.size(); key++) {
    if (!hist[key]) continue;
    Exponents exps(table->size(), 0);
    uint64_t rest = key;
    for (const auto& c : classes) {
      uint64_t cnt = rest % (c.max_active + 1);
      rest /= c.max_active + 1;
      exps[table->require(c.active_name)] += static_cast<uint32_t>(cnt);
      exps[table->require(c.w_name)] += c.max_active - static_cast<uint32_t>(cnt);
    }
    out.add_term(exps, Coeff::exact(hist[key]));
  }
  return out;
}

namespace {

// Total dimension exponent of the per-position local error sets. Each
// position contributes its own window, so the duality prefactors below are
// 2^(D-n-k) for paths into the stabilizer and 2^(D-n+k) for paths into the
// normalizer; with full-window positions these reduce to q^((m-1)n -+ k).
int64_t local_dim_exponent(const NoiseModel& model) {
  int64_t d = 0;
  for (const auto& p : model.positions) d += p.local_size();
  return d;
}

}  // namespace

PathEnumerators path_enumerators(const StabilizerCode& code,
                                 const NoiseModel& model, uint32_t max_degree) {
  VarTableRef active = model.active_table();
  auto classes = build_classes(model, code.length());
  int64_t n = code.length(), k = code.dimension();
  int64_t d = local_dim_exponent(model);

  auto hist_s = accumulate_histogram(side_generators(code, Side::Stabilizer),
                                     classes, nullptr);
  auto hist_n = accumulate_histogram(side_generators(code, Side::Normalizer),
                                     classes, nullptr);

  PathEnumerators out;
  out.a_path = assemble_transformed(hist_n, classes, active, max_degree)
                   .scaled(Coeff::exact(two_pow(d - n - k)));
  out.b_path = assemble_transformed(hist_s, classes, active, max_degree)
                   .scaled(Coeff::exact(two_pow(d - n + k)));
  check_integer_counts(out.a_path, "a_path");
  check_integer_counts(out.b_path, "b_path");
  return out;
}

Polynomial coset_enumerator(const StabilizerCode& code, const SignedPauli& L,
                            const NoiseModel& model, uint32_t max_degree) {
  if (!code.in_normalizer(L.pauli))
    throw EnumeratorError("coset representative has nonzero syndrome");
  VarTableRef active = model.active_table();
  auto classes = build_classes(model, code.length());
  int64_t n = code.length(), k = code.dimension();
  int64_t d = local_dim_exponent(model);
  auto hist = accumulate_histogram(side_generators(code, Side::Normalizer),
                                   classes, &L.pauli);
  Polynomial out = assemble_transformed(hist, classes, active, max_degree)
                       .scaled(Coeff::exact(two_pow(d - n - k)));
  check_integer_counts(out, "coset enumerator");
  return out;
}

std::pair<Polynomial, Polynomial> shor_laflamme(const StabilizerCode& code) {
  VarTableRef table = make_table({"z"});
  Polynomial a(table, Ring::Exact), b(table, Ring::Exact);
  auto add_weights = [&](Polynomial& p, const std::vector<SignedPauli>& gens) {
    std::vector<int64_t> byw(code.length() + 1, 0);
    for_each_group_element(gens, [&](uint64_t, const SignedPauli& s) {
      byw[s.pauli.weight()]++;
    });
    for (uint32_t w = 0; w <= code.length(); w++)
      if (byw[w]) p.add_term({w}, Coeff::exact(byw[w]));
  };
  add_weights(a, side_generators(code, Side::Stabilizer));
  add_weights(b, side_generators(code, Side::Normalizer));
  return {a, b};
}

Polynomial trace_syndrome_circuit(const StabilizerCode& code,
                                  const NoiseModel& model) {
  uint32_t n = code.length();
  if (n > 12) throw EnumeratorError("tensor bridge cap exceeded (n <= 12)");
  VarTableRef table = model.homogeneous_table();

  // Initial per-qubit channel, in raw (w+3z)/(w-z) form.
  const WeightFunction& init = model.positions.front();
  if (init.kind != WeightFunction::Kind::GlobalPauli)
    throw EnumeratorError("model must start with the initial channel");
  CircuitTensor t = uniform_pauli_noise(n, table, init.w_name, init.active_name);

  WireSignature qubits = WireSignature::qubits(n);
  int64_t norm_exp = n;  // the initial channel contributes 2^n

  std::vector<Wire> bits;
  size_t pos = 1;
  for (size_t j = 0; j < code.generators().size(); j++) {
    const SignedPauli& s = code.generators()[j];
    CircuitTensor mp = tensor_projective_meas(s);
    CircuitTensor lifted = bits.empty()
                               ? mp.with_table(table)
                               : kron(identity_tensor(WireSignature(bits), table),
                                      mp.with_table(table));
    t = compose(t, lifted);
    bits.push_back(classical_wire(2));

    // Post-measurement noise factors for this generator; a model with just
    // the initial channel runs the measurements noiselessly.
    if (pos >= model.positions.size()) continue;
    const WeightFunction& trig = model.positions.at(pos++);
    const WeightFunction* idle = nullptr;
    if (model.include_idle) idle = &model.positions.at(pos++);

    Polynomial wm = Polynomial::variable(table, trig.w_name);
    Polynomial vm = Polynomial::variable(table, trig.active_name);
    uint32_t r = trig.local_size();
    mpz_class nl = 1;
    nl <<= 2 * r;
    Polynomial trig_quiet = wm + vm.scaled(Coeff::exact(mpq_class(nl - 1)));
    Polynomial trig_hit = wm - vm;
    norm_exp += r;

    std::vector<Polynomial> idle_quiet_pow, idle_hit_pow;
    std::vector<uint64_t> idle_mask;
    if (idle) {
      Polynomial wc = Polynomial::variable(table, idle->w_name);
      Polynomial vc = Polynomial::variable(table, idle->active_name);
      Polynomial q = wc + vc.scaled(Coeff::exact(3));
      Polynomial h = wc - vc;
      idle_quiet_pow.push_back(Polynomial::constant(table, Coeff::exact(1)));
      idle_hit_pow.push_back(idle_quiet_pow.back());
      for (uint32_t i = 0; i < idle->local_size(); i++) {
        idle_quiet_pow.push_back(idle_quiet_pow.back() * q);
        idle_hit_pow.push_back(idle_hit_pow.back() * h);
      }
      idle_mask = make_mask(n, idle->qubits);
      norm_exp += idle->local_size();
    }
    auto supp_mask = make_mask(n, trig.qubits);

    CircuitTensor noise(qubits, qubits, Ring::Exact, table);
    // Diagonal over the labels actually present downstream keeps this sparse.
    std::map<Label, bool> seen;
    for (const auto& [key, p] : t.entries()) {
      Label q_out(key.second.end() - n, key.second.end());
      if (seen.emplace(q_out, true).second) {
        PauliString e = pauli_from_label(q_out);
        Polynomial f = e.identity_on(supp_mask) ? trig_quiet : trig_hit;
        if (idle) {
          uint32_t hit = e.weight_on(idle_mask);
          f = f * idle_quiet_pow[idle->local_size() - hit] * idle_hit_pow[hit];
        }
        noise.add(q_out, q_out, f);
      }
    }
    CircuitTensor lifted_noise =
        kron(identity_tensor(WireSignature(bits), table), noise);
    t = compose(t, lifted_noise);
  }

  // Diagonal extraction: all readout labels trivial, output error equal to
  // the input error.
  Polynomial acc(table, Ring::Exact);
  size_t nbits = bits.size();
  for (const auto& [key, p] : t.entries()) {
    const Label& in = key.first;
    const Label& out = key.second;
    bool zero_bits = true;
    for (size_t i = 0; i < nbits; i++) zero_bits &= (out[i] == 0);
    if (!zero_bits) continue;
    if (!std::equal(in.begin(), in.end(), out.begin() + nbits)) continue;
    acc = acc + p;
  }
  return acc.scaled(Coeff::exact(two_pow(-norm_exp)));
}

}  // namespace qect
