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

#include "qect/poly.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace qect {

namespace {
constexpr double kFloatDropTol = 1e-12;
}

Coeff Coeff::operator+(const Coeff& o) const {
  if (ring_ != o.ring_) throw PolyError("ring mismatch");
  if (ring_ == Ring::Exact) return exact(re_ + o.re_, im_ + o.im_);
  return floating(f_ + o.f_);
}

Coeff Coeff::operator-(const Coeff& o) const {
  if (ring_ != o.ring_) throw PolyError("ring mismatch");
  if (ring_ == Ring::Exact) return exact(re_ - o.re_, im_ - o.im_);
  return floating(f_ - o.f_);
}

Coeff Coeff::operator*(const Coeff& o) const {
  if (ring_ != o.ring_) throw PolyError("ring mismatch");
  if (ring_ == Ring::Exact)
    return exact(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  return floating(f_ * o.f_);
}

Coeff Coeff::operator-() const {
  if (ring_ == Ring::Exact) return exact(-re_, -im_);
  return floating(-f_);
}

Coeff Coeff::conj() const {
  if (ring_ == Ring::Exact) return exact(re_, -im_);
  return floating(std::conj(f_));
}

bool Coeff::operator==(const Coeff& o) const {
  if (ring_ != o.ring_) return false;
  if (ring_ == Ring::Exact) return re_ == o.re_ && im_ == o.im_;
  return f_ == o.f_;
}

std::string Coeff::str() const {
  if (ring_ == Ring::Float) {
    std::ostringstream os;
    os << f_.real();
    if (f_.imag() != 0) os << (f_.imag() > 0 ? "+" : "") << f_.imag() << "i";
    return os.str();
  }
  std::string s = re_.get_str();
  if (im_ != 0) {
    s += (im_ > 0 ? "+" : "") + im_.get_str() + "i";
  }
  return s;
}

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (uint32_t i = 0; i < names_.size(); i++) {
    if (!index_.emplace(names_[i], i).second)
      throw PolyError("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<uint32_t> VarTable::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

uint32_t VarTable::require(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw PolyError("unknown variable '" + name + "'");
  return *i;
}

VarTableRef make_table(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

bool same_table(const VarTableRef& a, const VarTableRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->names() == b->names();
}

uint32_t total_degree(const Exponents& e) {
  uint32_t d = 0;
  for (uint32_t v : e) d += v;
  return d;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  uint32_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(VarTableRef table, Coeff c,
                                std::optional<uint32_t> cap) {
  Polynomial p(std::move(table), c.ring(), cap);
  p.add_term(Exponents(p.table_ ? p.table_->size() : 0, 0), c);
  return p;
}

Polynomial Polynomial::variable(VarTableRef table, const std::string& name,
                                Ring ring, std::optional<uint32_t> cap) {
  Polynomial p(table, ring, cap);
  Exponents e(table->size(), 0);
  e[table->require(name)] = 1;
  p.add_term(e, Coeff::one(ring));
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Coeff Polynomial::constant_value() const {
  if (terms_.empty()) return Coeff::zero(ring_);
  if (!is_constant()) throw PolyError("polynomial is not constant");
  return terms_.begin()->second;
}

uint32_t Polynomial::degree() const {
  uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void Polynomial::add_term(const Exponents& exps, const Coeff& c) {
  size_t want = table_ ? table_->size() : 0;
  if (exps.size() != want) throw PolyError("exponent vector length mismatch");
  if (c.ring() != ring_) throw PolyError("ring mismatch");
  if (cap_ && total_degree(exps) > *cap_) return;
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second = it->second + c;
    bool drop = it->second.is_zero();
    if (!drop && ring_ == Ring::Float)
      drop = std::abs(it->second.to_complex()) < kFloatDropTol;
    if (drop) terms_.erase(it);
  }
}

Coeff Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Coeff::zero(ring_) : it->second;
}

Coeff Polynomial::coefficient(const std::map<std::string, uint32_t>& mono) const {
  Exponents e(table_->size(), 0);
  for (const auto& [name, exp] : mono) e[table_->require(name)] = exp;
  return coefficient(e);
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!same_table(table_, o.table_)) throw PolyError("variable table mismatch");
  if (ring_ != o.ring_) throw PolyError("ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  if (o.cap_ && (!r.cap_ || *o.cap_ < *r.cap_)) {
    r = r.with_cap(o.cap_);
  }
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(table_, ring_, cap_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  std::optional<uint32_t> cap = cap_;
  if (o.cap_ && (!cap || *o.cap_ < *cap)) cap = o.cap_;
  Polynomial r(table_, ring_, cap);
  for (const auto& [ea, ca] : terms_) {
    uint32_t da = total_degree(ea);
    for (const auto& [eb, cb] : o.terms_) {
      if (cap && da + total_degree(eb) > *cap) continue;
      Exponents e(ea);
      for (size_t i = 0; i < e.size(); i++) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  Polynomial r(table_, ring_, cap_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

Polynomial Polynomial::pow(uint32_t e) const {
  Polynomial r = Polynomial::constant(table_, Coeff::one(ring_), cap_);
  Polynomial base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Polynomial Polynomial::with_cap(std::optional<uint32_t> cap) const {
  Polynomial r(table_, ring_, cap);
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::as_ring(Ring r) const {
  if (r == ring_) return *this;
  if (r == Ring::Exact) throw PolyError("cannot promote float coefficients to exact");
  Polynomial out(table_, Ring::Float, cap_);
  for (const auto& [e, c] : terms_) out.add_term(e, c.as_float());
  return out;
}

Polynomial Polynomial::substitute_linear(
    const std::map<std::string, Polynomial>& images,
    std::optional<uint32_t> cap) const {
  if (images.empty()) throw PolyError("empty substitution");
  VarTableRef target = images.begin()->second.table();
  for (const auto& [name, img] : images) {
    table_->require(name);
    if (!same_table(img.table(), target))
      throw PolyError("substitution images use different tables");
    if (img.degree() > 1)
      throw PolyError("substitution image for '" + name + "' is not linear");
  }
  // Unmapped variables pass through by name.
  std::vector<Polynomial> image_of(table_->size());
  std::vector<std::vector<Polynomial>> powers(table_->size());
  for (uint32_t i = 0; i < table_->size(); i++) {
    auto it = images.find(table_->name(i));
    if (it != images.end())
      image_of[i] = it->second.with_cap(cap);
    else
      image_of[i] = Polynomial::variable(target, table_->name(i), ring_, cap);
    powers[i].push_back(Polynomial::constant(target, Coeff::one(ring_), cap));
  }
  auto power = [&](uint32_t var, uint32_t e) -> const Polynomial& {
    auto& ps = powers[var];
    while (ps.size() <= e) ps.push_back(ps.back() * image_of[var]);
    return ps[e];
  };
  Polynomial out(target, ring_, cap);
  for (const auto& [exps, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c, cap);
    for (uint32_t i = 0; i < exps.size(); i++)
      if (exps[i]) term = term * power(i, exps[i]);
    out = out + term;
  }
  return out;
}

Coeff Polynomial::evaluate(const std::map<std::string, Coeff>& assignment) const {
  std::vector<std::optional<Coeff>> vals(table_ ? table_->size() : 0);
  for (const auto& [name, c] : assignment) {
    if (c.ring() != ring_) throw PolyError("ring mismatch in assignment");
    vals[table_->require(name)] = c;
  }
  Coeff acc = Coeff::zero(ring_);
  for (const auto& [exps, c] : terms_) {
    Coeff t = c;
    for (uint32_t i = 0; i < exps.size(); i++) {
      if (!exps[i]) continue;
      if (!vals[i])
        throw PolyError("missing assignment for variable '" + table_->name(i) + "'");
      for (uint32_t k = 0; k < exps[i]; k++) t = t * *vals[i];
    }
    acc = acc + t;
  }
  return acc;
}

Polynomial Polynomial::set_to_one(const std::vector<std::string>& names) const {
  std::vector<bool> drop(table_->size(), false);
  for (const auto& name : names) drop[table_->require(name)] = true;
  Polynomial out(table_, ring_, cap_);
  for (const auto& [exps, c] : terms_) {
    Exponents e = exps;
    for (uint32_t i = 0; i < e.size(); i++)
      if (drop[i]) e[i] = 0;
    out.add_term(e, c);
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_table(table_, o.table_) || ring_ != o.ring_) return false;
  return terms_ == o.terms_;
}

bool Polynomial::approx_equal(const Polynomial& a, const Polynomial& b,
                              double tol) {
  if (!same_table(a.table_, b.table_)) return false;
  auto close = [tol](std::complex<double> x, std::complex<double> y) {
    return std::abs(x - y) <= tol;
  };
  for (const auto& [e, c] : a.terms_)
    if (!close(c.to_complex(), b.coefficient(e).to_complex())) return false;
  for (const auto& [e, c] : b.terms_)
    if (!close(a.coefficient(e).to_complex(), c.to_complex())) return false;
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    std::string cs = c.str();
    bool negated = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find('i') == std::string::npos &&
        cs.find('+', 1) == std::string::npos) {
      negated = true;
      cs.erase(0, 1);
    }
    if (!first)
      os << (negated ? " - " : " + ");
    else if (negated)
      os << "-";
    first = false;
    std::vector<std::string> factors;
    if (cs.find('i') != std::string::npos || cs.find('+', 1) != std::string::npos)
      cs = "(" + cs + ")";
    if (cs != "1" || total_degree(exps) == 0) factors.push_back(cs);
    for (uint32_t i = 0; i < exps.size(); i++) {
      if (!exps[i]) continue;
      std::string f = table_->name(i);
      if (exps[i] > 1) f += "^" + std::to_string(exps[i]);
      factors.push_back(std::move(f));
    }
    for (size_t i = 0; i < factors.size(); i++) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

std::string Polynomial::json() const {
  nlohmann::json j;
  j["vars"] = table_ ? table_->names() : std::vector<std::string>{};
  auto terms = nlohmann::json::array();
  for (const auto& [exps, c] : terms_) {
    nlohmann::json t;
    t["exp"] = exps;
    if (ring_ == Ring::Exact) {
      t["coeff"] = {{"num", c.re().get_num().get_str()},
                    {"den", c.re().get_den().get_str()},
                    {"inum", c.im().get_num().get_str()},
                    {"iden", c.im().get_den().get_str()}};
    } else {
      auto v = c.to_complex();
      t["coeff"] = {{"re", v.real()}, {"im", v.imag()}};
    }
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

}  // namespace qect
