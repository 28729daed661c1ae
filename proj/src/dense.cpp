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

#include "qect/dense.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qect {

Mat Mat::eye(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; i++) m.at(i, i) = 1.0;
  return m;
}

Mat Mat::dagger() const {
  Mat m(cols, rows);
  for (size_t r = 0; r < rows; r++)
    for (size_t c = 0; c < cols; c++) m.at(c, r) = std::conj(at(r, c));
  return m;
}

Mat matmul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul shape mismatch");
  Mat m(x.rows, y.cols);
  for (size_t r = 0; r < x.rows; r++)
    for (size_t k = 0; k < x.cols; k++) {
      auto v = x.at(r, k);
      if (v == std::complex<double>{}) continue;
      for (size_t c = 0; c < y.cols; c++) m.at(r, c) += v * y.at(k, c);
    }
  return m;
}

Mat kron(const Mat& x, const Mat& y) {
  Mat m(x.rows * y.rows, x.cols * y.cols);
  for (size_t r1 = 0; r1 < x.rows; r1++)
    for (size_t c1 = 0; c1 < x.cols; c1++)
      for (size_t r2 = 0; r2 < y.rows; r2++)
        for (size_t c2 = 0; c2 < y.cols; c2++)
          m.at(r1 * y.rows + r2, c1 * y.cols + c2) = x.at(r1, c1) * y.at(r2, c2);
  return m;
}

Mat operator+(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("matrix sum shape mismatch");
  Mat m = x;
  for (size_t i = 0; i < m.a.size(); i++) m.a[i] += y.a[i];
  return m;
}

Mat scale(const Mat& x, std::complex<double> s) {
  Mat m = x;
  for (auto& v : m.a) v *= s;
  return m;
}

std::complex<double> trace(const Mat& x) {
  std::complex<double> t{};
  for (size_t i = 0; i < x.rows && i < x.cols; i++) t += x.at(i, i);
  return t;
}

double max_abs_diff(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) return HUGE_VAL;
  double d = 0;
  for (size_t i = 0; i < x.a.size(); i++) d = std::max(d, std::abs(x.a[i] - y.a[i]));
  return d;
}

bool is_unitary(const Mat& u, double tol) {
  if (u.rows != u.cols) return false;
  return max_abs_diff(matmul(u.dagger(), u), Mat::eye(u.rows)) <= tol;
}

Mat pauli_matrix(char p) {
  Mat m(2, 2);
  switch (p) {
    case 'I': m.at(0, 0) = 1; m.at(1, 1) = 1; break;
    case 'X': m.at(0, 1) = 1; m.at(1, 0) = 1; break;
    case 'Y': m.at(0, 1) = {0, -1}; m.at(1, 0) = {0, 1}; break;
    case 'Z': m.at(0, 0) = 1; m.at(1, 1) = -1; break;
    default: throw std::invalid_argument("bad Pauli character");
  }
  return m;
}

Mat clock_matrix(uint32_t M, uint32_t alpha) {
  Mat m(M, M);
  for (uint32_t x = 0; x < M; x++) {
    double th = 2.0 * std::numbers::pi * alpha * x / M;
    m.at(x, x) = {std::cos(th), std::sin(th)};
  }
  return m;
}

Mat random_unitary(size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  // Gram-Schmidt on Gaussian columns.
  std::vector<std::vector<std::complex<double>>> cols(dim,
      std::vector<std::complex<double>>(dim));
  for (auto& col : cols)
    for (auto& v : col) v = {g(rng), g(rng)};
  for (size_t i = 0; i < dim; i++) {
    for (size_t j = 0; j < i; j++) {
      std::complex<double> d{};
      for (size_t k = 0; k < dim; k++) d += std::conj(cols[j][k]) * cols[i][k];
      for (size_t k = 0; k < dim; k++) cols[i][k] -= d * cols[j][k];
    }
    double norm = 0;
    for (auto& v : cols[i]) norm += std::norm(v);
    norm = std::sqrt(norm);
    for (auto& v : cols[i]) v /= norm;
  }
  Mat u(dim, dim);
  for (size_t r = 0; r < dim; r++)
    for (size_t c = 0; c < dim; c++) u.at(r, c) = cols[c][r];
  return u;
}

std::vector<Mat> random_kraus_pair(size_t dim, std::mt19937_64& rng) {
  // Stinespring: a random unitary on dim*2 restricted to the ancilla-|0>
  // input block gives two Kraus operators that are complete by construction.
  Mat u = random_unitary(dim * 2, rng);
  Mat a0(dim, dim), a1(dim, dim);
  for (size_t r = 0; r < dim; r++)
    for (size_t c = 0; c < dim; c++) {
      a0.at(r, c) = u.at(r, c);
      a1.at(r, c) = u.at(dim + r, c);
    }
  return {a0, a1};
}

}  // namespace qect
