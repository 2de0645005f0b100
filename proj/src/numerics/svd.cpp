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

#include "beamsim/numerics/svd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "beamsim/error.hpp"
#include "beamsim/numerics/linalg.hpp"

namespace beamsim {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-12;
constexpr double kLanczosTol = 1e-11;
constexpr std::size_t kLanczosMinDim = 128;

// Column-major working copy so that column operations are contiguous.
struct Columns {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> data;

  cplx* col(std::size_t j) { return data.data() + j * rows; }
  const cplx* col(std::size_t j) const { return data.data() + j * rows; }
};

Columns to_columns(const ComplexMatrix& a) {
  Columns c{a.rows(), a.cols(), std::vector<cplx>(a.size())};
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.data[j * a.rows() + r] = a(r, j);
  }
  return c;
}

Columns identity_columns(std::size_t n) {
  Columns c{n, n, std::vector<cplx>(n * n)};
  for (std::size_t j = 0; j < n; ++j) c.data[j * n + j] = 1.0;
  return c;
}

// Triplets in no particular order. u columns belonging to (near) zero singular
// values are not meaningful and get replaced later.
struct RawSvd {
  std::vector<double> sigma;
  Columns u;  // rows x r
  Columns v;  // cols x r
};

RawSvd one_sided_jacobi(const ComplexMatrix& a) {
  Columns w = to_columns(a);
  const std::size_t m = w.rows;
  const std::size_t n = w.cols;
  Columns v = identity_columns(n);

  for (int sweep = 0;; ++sweep) {
    if (sweep >= kMaxSweeps) {
      fail(ErrorKind::Convergence, "thin_svd: one-sided Jacobi did not converge in " +
                                       std::to_string(kMaxSweeps) + " sweeps");
    }
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        cplx* ap = w.col(p);
        cplx* aq = w.col(q);
        double alpha = 0.0;
        double beta = 0.0;
        cplx c{};
        for (std::size_t r = 0; r < m; ++r) {
          alpha += std::norm(ap[r]);
          beta += std::norm(aq[r]);
          c += std::conj(ap[r]) * aq[r];
        }
        const double mag = std::abs(c);
        if (alpha == 0.0 || beta == 0.0 || mag <= kOffDiagonalTol * std::sqrt(alpha * beta)) {
          continue;
        }
        rotated = true;
        const cplx phase = c / mag;
        const double zeta = (beta - alpha) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;
        const cplx sp = sn * std::conj(phase);
        const cplx cq = cs * std::conj(phase);
        for (std::size_t r = 0; r < m; ++r) {
          const cplx x = ap[r];
          const cplx y = aq[r];
          ap[r] = cs * x - sp * y;
          aq[r] = sn * x + cq * y;
        }
        cplx* vp = v.col(p);
        cplx* vq = v.col(q);
        for (std::size_t r = 0; r < n; ++r) {
          const cplx x = vp[r];
          const cplx y = vq[r];
          vp[r] = cs * x - sp * y;
          vq[r] = sn * x + cq * y;
        }
      }
    }
    if (!rotated) break;
  }

  RawSvd out;
  out.sigma.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx* col = w.col(j);
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += std::norm(col[r]);
    s = std::sqrt(s);
    out.sigma[j] = s;
    if (s > 0.0) {
      for (std::size_t r = 0; r < m; ++r) col[r] /= s;
    }
  }
  out.u = std::move(w);
  out.v = std::move(v);
  return out;
}

std::vector<std::size_t> descending_order(const std::vector<double>& sigma) {
  std::vector<std::size_t> order(sigma.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });
  return order;
}

// Deterministic pseudo-random unit start vector (splitmix64).
std::vector<cplx> start_vector(std::size_t n) {
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  auto next = [&state] {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
  };
  std::vector<cplx> v(n);
  for (auto& z : v) z = cplx{next(), next()};
  const double nrm = norm2(v);
  for (auto& z : v) z /= nrm;
  return v;
}

// Two passes of classical Gram-Schmidt against the stored basis.
void reorthogonalize(std::vector<cplx>& x, const std::vector<std::vector<cplx>>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : basis) {
      const cplx proj = inner(q, x);
      for (std::size_t r = 0; r < x.size(); ++r) x[r] -= proj * q[r];
    }
  }
}

// Triplets from the k x (k+1) upper bidiagonal left when the recursion stops on
// a zero alpha. Works on the adjoint so the Jacobi kernel sees a tall matrix.
void invariant_block(const std::vector<double>& alphas, const std::vector<double>& betas,
                     const std::vector<std::vector<cplx>>& us,
                     const std::vector<std::vector<cplx>>& vs, std::size_t m, std::size_t rows,
                     std::size_t n, RawSvd& out) {
  const std::size_t k = alphas.size();
  ComplexMatrix ch(k + 1, k);
  for (std::size_t i = 0; i < k; ++i) {
    ch(i, i) = alphas[i];
    ch(i + 1, i) = betas[i];
  }
  RawSvd small = one_sided_jacobi(ch);
  const auto order = descending_order(small.sigma);
  out.sigma.assign(m, 0.0);
  out.u = Columns{rows, m, std::vector<cplx>(rows * m)};
  out.v = Columns{n, m, std::vector<cplx>(n * m)};
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t src = order[i];
    out.sigma[i] = small.sigma[src];
    const cplx* x = small.v.col(src);  // left vector of the block
    const cplx* y = small.u.col(src);  // right vector of the block
    cplx* uo = out.u.col(i);
    cplx* vo = out.v.col(i);
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t r = 0; r < rows; ++r) uo[r] += x[t] * us[t][r];
    for (std::size_t t = 0; t <= k; ++t)
      for (std::size_t r = 0; r < n; ++r) vo[r] += y[t] * vs[t][r];
  }
}

// Golub-Kahan-Lanczos bidiagonalization. Returns false when the recursion
// breaks down before m triplets are available; the caller then falls back to
// the full Jacobi path.
bool lanczos(const ComplexMatrix& a, std::size_t m, RawSvd& out) {
  const std::size_t rows = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::vector<cplx>> us;
  std::vector<std::vector<cplx>> vs;
  std::vector<double> alphas;
  std::vector<double> betas;
  vs.push_back(start_vector(n));
  const double scale = a.frobenius_norm();
  const double breakdown = scale * 1e-13;

  std::size_t next_check = std::min(n, std::max<std::size_t>(3 * m, 24));
  while (true) {
    const std::size_t j = alphas.size();
    std::vector<cplx> u = multiply(a, vs[j]);
    if (j > 0) {
      for (std::size_t r = 0; r < rows; ++r) u[r] -= betas[j - 1] * us[j - 1][r];
    }
    reorthogonalize(u, us);
    const double alpha = norm2(u);
    if (alpha <= breakdown) {
      // A v_j lies in span(us): the subspace is invariant and the k x (k+1)
      // block [B_k | beta_k e_k] carries exact triplets.
      if (j < m) return false;
      invariant_block(alphas, betas, us, vs, m, rows, n, out);
      return true;
    }
    for (auto& z : u) z /= alpha;
    us.push_back(std::move(u));
    alphas.push_back(alpha);

    std::vector<cplx> v = adjoint_multiply(a, us[j]);
    for (std::size_t r = 0; r < n; ++r) v[r] -= alpha * vs[j][r];
    reorthogonalize(v, vs);
    const double beta = norm2(v);
    betas.push_back(beta);
    const std::size_t k = alphas.size();
    const bool exhausted = beta <= breakdown || k == n;
    if (!exhausted) {
      for (auto& z : v) z /= beta;
      vs.push_back(std::move(v));
    }
    if (exhausted && k < m) return false;
    if (k < next_check && !exhausted) continue;

    ComplexMatrix b(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      b(i, i) = alphas[i];
      if (i + 1 < k) b(i, i + 1) = betas[i];
    }
    RawSvd small = one_sided_jacobi(b);
    const auto order = descending_order(small.sigma);
    const double sigma1 = small.sigma[order[0]];
    bool converged = true;
    if (!exhausted) {
      // Residual of triplet i is beta_k |e_k^T x_i|, with x_i the left vector of B.
      for (std::size_t i = 0; i < m; ++i) {
        const double resid = beta * std::abs(small.u.col(order[i])[k - 1]);
        if (resid > kLanczosTol * sigma1) {
          converged = false;
          break;
        }
      }
    }
    if (!converged) {
      next_check = std::min(n, next_check + std::max<std::size_t>(16, next_check / 2));
      continue;
    }

    out.sigma.assign(m, 0.0);
    out.u = Columns{rows, m, std::vector<cplx>(rows * m)};
    out.v = Columns{n, m, std::vector<cplx>(n * m)};
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t src = order[i];
      out.sigma[i] = small.sigma[src];
      const cplx* x = small.u.col(src);
      const cplx* y = small.v.col(src);
      cplx* uo = out.u.col(i);
      cplx* vo = out.v.col(i);
      for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t r = 0; r < rows; ++r) uo[r] += x[t] * us[t][r];
        for (std::size_t r = 0; r < n; ++r) vo[r] += y[t] * vs[t][r];
      }
      const double nu = norm2(std::span<const cplx>(uo, rows));
      const double nv = norm2(std::span<const cplx>(vo, n));
      if (nu > 0.0) for (std::size_t r = 0; r < rows; ++r) uo[r] /= nu;
      if (nv > 0.0) for (std::size_t r = 0; r < n; ++r) vo[r] /= nv;
    }
    return true;
  }
}

// Sorts, truncates to m, repairs left vectors of null singular values and
// returns (left, right) factors of the working matrix.
void finish(const RawSvd& raw, std::size_t m, ComplexMatrix& left, std::vector<double>& sigma,
            ComplexMatrix& right) {
  const auto order = descending_order(raw.sigma);
  const std::size_t rows = raw.u.rows;
  const std::size_t n = raw.v.rows;
  sigma.resize(m);
  const double sigma1 = raw.sigma.empty() ? 0.0 : raw.sigma[order[0]];
  const double null_floor = static_cast<double>(std::max(rows, n)) *
                            std::numeric_limits<double>::epsilon() * sigma1;
  std::size_t reliable = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sigma[i] = raw.sigma[order[i]];
    if (sigma[i] > null_floor) reliable = i + 1;
  }
  ComplexMatrix l(rows, reliable);
  right = ComplexMatrix(n, m);
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* uc = raw.u.col(order[i]);
    const cplx* vc = raw.v.col(order[i]);
    if (i < reliable) {
      for (std::size_t r = 0; r < rows; ++r) l(r, i) = uc[r];
    }
    for (std::size_t r = 0; r < n; ++r) right(r, i) = vc[r];
  }
  left = reliable < m ? complete_orthonormal_basis(l, m) : std::move(l);
}

void apply_gauge(ComplexMatrix& u, ComplexMatrix& v) {
  for (std::size_t c = 0; c < v.cols(); ++c) {
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t r = 0; r < v.rows(); ++r) {
      const double mag = std::abs(v(r, c));
      if (mag > best_mag) {
        best_mag = mag;
        best = r;
      }
    }
    if (best_mag <= 0.0) continue;
    const cplx rot = std::conj(v(best, c)) / best_mag;
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, c) *= rot;
    v(best, c) = best_mag;
    for (std::size_t r = 0; r < u.rows(); ++r) u(r, c) *= rot;
  }
}

}  // namespace

SvdResult thin_svd(const ComplexMatrix& a, std::size_t m, SvdMethod method) {
  const std::size_t min_dim = std::min(a.rows(), a.cols());
  if (m < 1 || m > min_dim) {
    fail(ErrorKind::Dimension, "thin_svd: m = " + std::to_string(m) + " outside [1, " +
                                   std::to_string(min_dim) + "]");
  }
  require_finite(a, "thin_svd");

  const bool transposed = a.rows() < a.cols();
  const ComplexMatrix work = transposed ? a.adjoint() : a;

  bool use_lanczos = method == SvdMethod::Lanczos ||
                     (method == SvdMethod::Auto && min_dim >= kLanczosMinDim && 4 * m <= min_dim);
  RawSvd raw;
  if (use_lanczos && !lanczos(work, m, raw)) use_lanczos = false;
  if (!use_lanczos) raw = one_sided_jacobi(work);

  SvdResult out;
  ComplexMatrix left;
  ComplexMatrix right;
  finish(raw, m, left, out.sigma, right);
  if (transposed) {
    out.u = std::move(right);
    out.v = std::move(left);
  } else {
    out.u = std::move(left);
    out.v = std::move(right);
  }
  apply_gauge(out.u, out.v);
  return out;
}

double condition_number(const ComplexMatrix& a) {
  const std::size_t n = std::min(a.rows(), a.cols());
  if (n == 0) return 1.0;
  const auto s = thin_svd(a, n, SvdMethod::Jacobi).sigma;
  if (s.back() == 0.0) return std::numeric_limits<double>::infinity();
  return s.front() / s.back();
}

}  // namespace beamsim
