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

#ifndef QECT_DENSE_HPP
#define QECT_DENSE_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace qect {

// Small dense complex matrices, desk-scale only. Row-major.
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<std::complex<double>> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  std::complex<double>& at(size_t r, size_t c) { return a[r * cols + c]; }
  const std::complex<double>& at(size_t r, size_t c) const { return a[r * cols + c]; }

  static Mat eye(size_t n);
  Mat dagger() const;
};

Mat matmul(const Mat& x, const Mat& y);
Mat kron(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat scale(const Mat& x, std::complex<double> s);
std::complex<double> trace(const Mat& x);
double max_abs_diff(const Mat& x, const Mat& y);
bool is_unitary(const Mat& u, double tol = 1e-9);

/// 2x2 Pauli matrix for 'I','X','Y','Z'.
Mat pauli_matrix(char p);
/// The diagonal clock matrix Z_M^alpha on C^M.
Mat clock_matrix(uint32_t M, uint32_t alpha);

/// Haar-ish random unitary on `dim` dimensions (QR of a Gaussian matrix).
Mat random_unitary(size_t dim, std::mt19937_64& rng);
/// Random Kraus pair {A_0, A_1} with A_0^dag A_0 + A_1^dag A_1 = I.
std::vector<Mat> random_kraus_pair(size_t dim, std::mt19937_64& rng);

}  // namespace qect

#endif
