// SPDX-License-Identifier: Apache-2.0
//
// beamsim: hybrid beamforming simulation engine for large antenna arrays
// Copyright (C) 2026 The beamsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "beamsim/numerics/complex_matrix.hpp"
#include "beamsim/numerics/rng.hpp"

namespace testsupport {

using beamsim::ComplexMatrix;
using beamsim::cplx;

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  beamsim::SeededRng rng(seed, 99);
  ComplexMatrix a(rows, cols);
  for (auto& x : a.data()) x = rng.complex_gaussian();
  return a;
}

// Brute-force classical Jacobi on a dense real symmetric matrix. Kept separate
// from the library solvers so it can serve as an oracle.
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int iter = 0; iter < 10000; ++iter) {
    std::size_t p = 0, q = 1;
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::abs(a[i][j]) > best) best = std::abs(a[i][j]), p = i, q = j;
    if (best < 1e-14) break;
    const double theta = 0.5 * std::atan2(2 * a[p][q], a[q][q] - a[p][p]);
    const double c = std::cos(theta), s = std::sin(theta);
    for (std::size_t k = 0; k < n; ++k) {
      const double akp = a[k][p], akq = a[k][q];
      a[k][p] = c * akp - s * akq;
      a[k][q] = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double apk = a[p][k], aqk = a[q][k];
      a[p][k] = c * apk - s * aqk;
      a[q][k] = s * apk + c * aqk;
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Singular values via the real embedding [[Re, -Im], [Im, Re]] of A^H A, whose
// spectrum is that of A^H A with every eigenvalue doubled.
inline std::vector<double> oracle_singular_values(const ComplexMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<std::vector<cplx>> g(n, std::vector<cplx>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < a.rows(); ++r) g[i][j] += std::conj(a(r, i)) * a(r, j);
  std::vector<std::vector<double>> e(2 * n, std::vector<double>(2 * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      e[i][j] = e[i + n][j + n] = g[i][j].real();
      e[i][j + n] = -g[i][j].imag();
      e[i + n][j] = g[i][j].imag();
    }
  const auto ev = symmetric_eigenvalues(e);
  std::vector<double> out;
  for (std::size_t i = 0; i < 2 * n; i += 2) out.push_back(std::sqrt(std::max(0.0, ev[i])));
  return out;
}

// log2 |det(A)| by Gaussian elimination with partial pivoting.
inline double log2_abs_det(ComplexMatrix a) {
  const std::size_t n = a.rows();
  double acc = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
    acc += std::log2(std::abs(a(c, c)));
    for (std::size_t r = c + 1; r < n; ++r) {
      const cplx f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return acc;
}

inline double max_unitarity_error(const ComplexMatrix& q) {
  double worst = 0.0;
  for (std::size_t i = 0; i < q.cols(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) {
      cplx s = 0.0;
      for (std::size_t r = 0; r < q.rows(); ++r) s += std::conj(q(r, i)) * q(r, j);
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

}  // namespace testsupport
