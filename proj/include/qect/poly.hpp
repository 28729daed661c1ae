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

#ifndef QECT_POLY_HPP
#define QECT_POLY_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qect {

struct PolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Ring : uint8_t { Exact, Float };

/// Coefficient in one of two rings: exact Gaussian rationals (arbitrary
/// precision) or complex doubles. Exact arithmetic is error-free; Float
/// comparisons use an absolute tolerance (default 1e-9).
class Coeff {
 public:
  Coeff() : ring_(Ring::Exact) {}
  static Coeff zero(Ring r) { return r == Ring::Exact ? exact(0) : floating(0.0); }
  static Coeff one(Ring r) { return r == Ring::Exact ? exact(1) : floating(1.0); }
  static Coeff exact(mpq_class re, mpq_class im = 0) {
    Coeff c;
    c.ring_ = Ring::Exact;
    c.re_ = std::move(re);
    c.im_ = std::move(im);
    c.re_.canonicalize();
    c.im_.canonicalize();
    return c;
  }
  static Coeff exact_ratio(long num, long den) { return exact(mpq_class(num, den)); }
  static Coeff floating(std::complex<double> v) {
    Coeff c;
    c.ring_ = Ring::Float;
    c.f_ = v;
    return c;
  }

  Ring ring() const { return ring_; }
  bool is_zero() const {
    return ring_ == Ring::Exact ? (re_ == 0 && im_ == 0) : (f_ == std::complex<double>{});
  }
  const mpq_class& re() const { require_exact(); return re_; }
  const mpq_class& im() const { require_exact(); return im_; }
  std::complex<double> to_complex() const {
    if (ring_ == Ring::Float) return f_;
    return {re_.get_d(), im_.get_d()};
  }
  Coeff as_float() const { return floating(to_complex()); }

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator-() const;
  Coeff conj() const;
  bool operator==(const Coeff& o) const;

  static bool approx_equal(const Coeff& a, const Coeff& b, double tol = 1e-9) {
    return std::abs(a.to_complex() - b.to_complex()) <= tol;
  }

  std::string str() const;

 private:
  void require_exact() const {
    if (ring_ != Ring::Exact) throw PolyError("coefficient is not in the exact ring");
  }
  Ring ring_;
  mpq_class re_, im_;
  std::complex<double> f_{};
};

/// Immutable ordered variable table shared by polynomials.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);
  size_t size() const { return names_.size(); }
  const std::string& name(uint32_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<uint32_t> index_of(const std::string& name) const;
  uint32_t require(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, uint32_t> index_;
};

using VarTableRef = std::shared_ptr<const VarTable>;
VarTableRef make_table(std::vector<std::string> names);
bool same_table(const VarTableRef& a, const VarTableRef& b);

using Exponents = std::vector<uint32_t>;
uint32_t total_degree(const Exponents& e);

/// Graded-lexicographic term order: total degree first, then exponent
/// vectors compared left to right.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse exact multivariate polynomial with optional total-degree cap.
/// All stored coefficients are nonzero; capped polynomials never store a
/// monomial above the cap.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Coeff, GradedLexLess>;

  Polynomial() : ring_(Ring::Exact) {}
  Polynomial(VarTableRef table, Ring ring,
             std::optional<uint32_t> degree_cap = std::nullopt)
      : table_(std::move(table)), ring_(ring), cap_(degree_cap) {}

  static Polynomial constant(VarTableRef table, Coeff c,
                             std::optional<uint32_t> cap = std::nullopt);
  static Polynomial variable(VarTableRef table, const std::string& name,
                             Ring ring = Ring::Exact,
                             std::optional<uint32_t> cap = std::nullopt);

  const VarTableRef& table() const { return table_; }
  Ring ring() const { return ring_; }
  std::optional<uint32_t> degree_cap() const { return cap_; }
  const TermMap& terms() const { return terms_; }
  size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Coeff constant_value() const;
  uint32_t degree() const;

  /// Adds c * x^exps, dropping the term if it exceeds the cap or cancels.
  void add_term(const Exponents& exps, const Coeff& c);
  Coeff coefficient(const Exponents& exps) const;
  /// Coefficient of a monomial given as {name: exponent} (others zero).
  Coeff coefficient(const std::map<std::string, uint32_t>& mono) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial pow(uint32_t e) const;

  Polynomial with_cap(std::optional<uint32_t> cap) const;
  Polynomial as_ring(Ring r) const;

  /// Replaces each mapped variable by a polynomial of degree <= 1. All
  /// images must share one target table; unmapped variables must also exist
  /// in the target table.
  Polynomial substitute_linear(const std::map<std::string, Polynomial>& images,
                               std::optional<uint32_t> cap = std::nullopt) const;

  /// Total evaluation; every variable occurring in the polynomial needs an
  /// assignment.
  Coeff evaluate(const std::map<std::string, Coeff>& assignment) const;

  /// Partial evaluation setting the named variables to 1.
  Polynomial set_to_one(const std::vector<std::string>& names) const;

  bool operator==(const Polynomial& o) const;
  static bool approx_equal(const Polynomial& a, const Polynomial& b,
                           double tol = 1e-9);

  std::string str() const;
  std::string json() const;

 private:
  void check_compatible(const Polynomial& o) const;
  VarTableRef table_;
  Ring ring_;
  std::optional<uint32_t> cap_;
  TermMap terms_;
};

}  // namespace qect

#endif
