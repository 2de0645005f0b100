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

#include "beamsim/numerics/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "beamsim/error.hpp"

namespace beamsim {

namespace {

constexpr int kMaxJacobiSweeps = 100;

double max_abs_entry(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.data()) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

ComplexMatrix inverse(const ComplexMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::Dimension, "inverse: matrix is not square");
  require_finite(a, "inverse");
  const std::size_t n = a.rows();
  ComplexMatrix lu = a;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const double scale = max_abs_entry(a);
  if (scale == 0.0) fail(ErrorKind::Singularity, "inverse: zero matrix");
  const double tiny = scale * static_cast<double>(n) * std::numeric_limits<double>::epsilon();

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(lu(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(lu(r, k)) > best) {
        best = std::abs(lu(r, k));
        pivot = r;
      }
    }
    if (best <= tiny) fail(ErrorKind::Singularity, "inverse: matrix is numerically singular");
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(pivot, c));
      std::swap(perm[k], perm[pivot]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      lu(r, k) /= lu(k, k);
      const cplx f = lu(r, k);
      for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= f * lu(k, c);
    }
  }

  ComplexMatrix inv(n, n);
  std::vector<cplx> x(n);
  for (std::size_t col = 0; col < n; ++col) {
    // Solve L U x = P e_col.
    for (std::size_t i = 0; i < n; ++i) {
      cplx acc = perm[i] == col ? cplx{1.0, 0.0} : cplx{};
      for (std::size_t j = 0; j < i; ++j) acc -= lu(i, j) * x[j];
      x[i] = acc;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      cplx acc = x[ii];
      for (std::size_t j = ii + 1; j < n; ++j) acc -= lu(ii, j) * x[j];
      x[ii] = acc / lu(ii, ii);
    }
    inv.set_column(col, x);
  }
  return inv;
}

ComplexMatrix cholesky(const ComplexMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::Dimension, "cholesky: matrix is not square");
  const std::size_t n = a.rows();
  ComplexMatrix l(n, n);
  const double floor = max_abs_entry(a) * static_cast<double>(n) *
                       std::numeric_limits<double>::epsilon();
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > floor)) fail(ErrorKind::Singularity, "cholesky: matrix is not positive definite");
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx acc = a(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * std::conj(l(j, k));
      l(i, j) = acc / ljj;
    }
  }
  return l;
}

ComplexMatrix forward_substitute(const ComplexMatrix& lower, const ComplexMatrix& b) {
  if (!lower.is_square() || lower.rows() != b.rows()) {
    fail(ErrorKind::Dimension, "forward_substitute: shape mismatch");
  }
  const std::size_t n = lower.rows();
  ComplexMatrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      cplx acc = b(i, c);
      for (std::size_t k = 0; k < i; ++k) acc -= lower(i, k) * x(k, c);
      x(i, c) = acc / lower(i, i);
    }
  }
  return x;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::Dimension, "hermitian_part: matrix is not square");
  ComplexMatrix h(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  }
  return h;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& input) {
  require_finite(input, "hermitian_eigen");
  ComplexMatrix a = hermitian_part(input);
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double total = a.frobenius_norm();

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
    }
    return std::sqrt(2.0 * s);
  };

  int sweep = 0;
  while (total > 0.0 && off_norm() > 1e-15 * total) {
    if (++sweep > kMaxJacobiSweeps) {
      fail(ErrorKind::Convergence, "hermitian_eigen: no convergence within sweep cap");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const cplx phase = a(p, q) / mag;  // e^{j phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx sp = s * std::conj(phase);  // s e^{-j phi}

        // A <- A Q
        for (std::size_t r = 0; r < n; ++r) {
          const cplx arp = a(r, p);
          const cplx arq = a(r, q);
          a(r, p) = c * arp - sp * arq;
          a(r, q) = s * arp + c * std::conj(phase) * arq;
        }
        // A <- Q^H A
        for (std::size_t col = 0; col < n; ++col) {
          const cplx apc = a(p, col);
          const cplx aqc = a(q, col);
          a(p, col) = c * apc - std::conj(sp) * aqc;
          a(q, col) = s * apc + c * phase * aqc;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t r = 0; r < n; ++r) {
          const cplx vrp = v(r, p);
          const cplx vrq = v(r, q);
          v(r, p) = c * vrp - sp * vrq;
          v(r, q) = s * vrp + c * std::conj(phase) * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });
  HermitianEigen out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  return hermitian_eigen(a).values;
}

double hermitian_condition_number(const ComplexMatrix& a) {
  const auto values = hermitian_eigenvalues(a);
  if (values.empty()) return 1.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (double v : values) {
    lo = std::min(lo, std::abs(v));
    hi = std::max(hi, std::abs(v));
  }
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

ComplexMatrix complete_orthonormal_basis(const ComplexMatrix& basis, std::size_t target_cols) {
  const std::size_t rows = basis.rows();
  if (target_cols > rows) {
    fail(ErrorKind::Dimension, "complete_orthonormal_basis: more columns than rows");
  }
  std::vector<std::vector<cplx>> cols;
  for (std::size_t c = 0; c < basis.cols(); ++c) cols.push_back(basis.column(c));
  for (std::size_t e = 0; e < rows && cols.size() < target_cols; ++e) {
    std::vector<cplx> cand(rows, cplx{});
    cand[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : cols) {
        const cplx proj = inner(q, cand);
        for (std::size_t r = 0; r < rows; ++r) cand[r] -= proj * q[r];
      }
    }
    const double nrm = norm2(cand);
    if (nrm < 1e-8) continue;
    for (auto& z : cand) z /= nrm;
    cols.push_back(std::move(cand));
  }
  if (cols.size() < target_cols) {
    fail(ErrorKind::Convergence, "complete_orthonormal_basis: could not extend basis");
  }
  ComplexMatrix out(rows, target_cols);
  for (std::size_t c = 0; c < target_cols; ++c) out.set_column(c, cols[c]);
  return out;
}

}  // namespace beamsim
