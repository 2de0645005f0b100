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

#include "beamsim/rate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "beamsim/error.hpp"
#include "beamsim/numerics/linalg.hpp"

namespace beamsim {

namespace {

constexpr double kMaxNoiseCondition = 1e12;

void require_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) fail(ErrorKind::Domain, "rho must be positive and finite");
}

}  // namespace

double to_db(double linear) { return 10.0 * std::log10(linear); }
double from_db(double db) { return std::pow(10.0, db / 10.0); }

std::vector<double> waterfill(std::span<const double> gains, double rho, double budget) {
  require_rho(rho);
  if (!(budget > 0.0)) fail(ErrorKind::Domain, "waterfill: budget must be positive");
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    if (!(gains[i] >= 0.0) || !std::isfinite(gains[i])) {
      fail(ErrorKind::Domain, "waterfill: gains must be finite and nonnegative");
    }
    if (gains[i] > 0.0) order.push_back(i);
  }
  if (order.empty()) fail(ErrorKind::Domain, "waterfill: all gains are zero");
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return gains[a] > gains[b]; });

  // Largest active set whose weakest member still receives positive power.
  double inv_sum = 0.0;
  for (std::size_t i : order) inv_sum += 1.0 / (rho * gains[i]);
  std::size_t active = order.size();
  double mu = 0.0;
  for (; active > 0; --active) {
    mu = (budget + inv_sum) / static_cast<double>(active);
    const double weakest = 1.0 / (rho * gains[order[active - 1]]);
    if (mu - weakest > 0.0) break;
    inv_sum -= weakest;
  }
  std::vector<double> p(gains.size(), 0.0);
  for (std::size_t j = 0; j < active; ++j) {
    const std::size_t i = order[j];
    p[i] = mu - 1.0 / (rho * gains[i]);
  }
  return p;
}

RateReport capacity_from_sigma(std::span<const double> sigma, double rho) {
  std::vector<double> gains(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) gains[i] = sigma[i] * sigma[i];
  const auto p = waterfill(gains, rho, 1.0);
  RateReport r;
  r.rho_db = to_db(rho);
  r.per_stream.resize(gains.size());
  for (std::size_t i = 0; i < gains.size(); ++i) {
    r.per_stream[i] = std::log2(1.0 + rho * p[i] * gains[i]);
    r.rate_bits += r.per_stream[i];
  }
  return r;
}

RateReport capacity_p2p(const ChannelRealization& chan, std::size_t k, double rho) {
  const auto svd = channel_svd(chan, k);
  return capacity_from_sigma(svd.sigma, rho);
}

std::vector<double> effective_gains(const ChannelRealization& chan, const HybridBeamformer& bf) {
  const ComplexMatrix f = bf.precoder();
  const ComplexMatrix w = bf.combiner();
  const double scale = normalization_factor(f) * normalization_factor(w);
  const ComplexMatrix e = adjoint_times(w, chan.h * f);
  std::vector<double> g(e.cols());
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = std::norm(e(k, k)) / scale;
  return g;
}

RateReport achievable_rate(const ChannelRealization& chan, const HybridBeamformer& bf, double rho) {
  require_rho(rho);
  if (bf.multiuser()) fail(ErrorKind::Shape, "achievable_rate: beamformer has no combiner");
  const ComplexMatrix f = bf.precoder();
  const ComplexMatrix w = bf.combiner();
  if (f.rows() != chan.h.cols() || w.rows() != chan.h.rows() || f.cols() != w.cols() ||
      bf.power.size() != f.cols()) {
    fail(ErrorKind::Dimension, "achievable_rate: beamformer does not match the channel");
  }
  const std::size_t k = f.cols();
  const double gamma_t = normalization_factor(f);
  const double gamma_r = normalization_factor(w);

  const ComplexMatrix rn = (1.0 / gamma_r) * adjoint_times(w, w);
  const double cond = hermitian_condition_number(rn);
  if (!(cond <= kMaxNoiseCondition)) {
    fail(ErrorKind::Singularity, "achievable_rate: noise covariance is numerically singular");
  }

  ComplexMatrix e = adjoint_times(w, chan.h * f);
  for (std::size_t c = 0; c < k; ++c) {
    const double s = std::sqrt(bf.power[c]);
    for (std::size_t r = 0; r < k; ++r) e(r, c) *= s;
  }
  // S = rho / (gamma_t gamma_r) E P E^H, whitened by R_n = L L^H.
  const ComplexMatrix signal = (rho / (gamma_t * gamma_r)) * (e * e.adjoint());
  const ComplexMatrix l = cholesky(rn);
  const ComplexMatrix half = forward_substitute(l, signal);
  const ComplexMatrix whitened = hermitian_part(forward_substitute(l, half.adjoint()));

  RateReport r;
  r.rho_db = to_db(rho);
  r.noise_cov_condition = cond;
  r.per_stream.resize(k);
  const auto lambda = hermitian_eigenvalues(whitened);
  for (std::size_t i = 0; i < k; ++i) {
    r.per_stream[i] = std::log2(1.0 + std::max(0.0, lambda[i]));
    r.rate_bits += r.per_stream[i];
  }
  return r;
}

RateReport sum_rate_mu(const ChannelRealization& chan, const HybridBeamformer& bf, double rho) {
  require_rho(rho);
  if (!bf.multiuser()) fail(ErrorKind::Shape, "sum_rate_mu: beamformer has receive-side matrices");
  const ComplexMatrix f = bf.precoder();
  const std::size_t k = chan.h.rows();
  if (f.rows() != chan.h.cols() || f.cols() != k || bf.power.size() != k) {
    fail(ErrorKind::Dimension, "sum_rate_mu: beamformer does not match the channel");
  }
  const double gamma_t = normalization_factor(f);
  ComplexMatrix e = chan.h * f;
  e *= 1.0 / std::sqrt(gamma_t);
  RateReport r;
  r.rho_db = to_db(rho);
  r.per_stream.resize(k);
  for (std::size_t u = 0; u < k; ++u) {
    double interference = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != u) interference += rho * bf.power[j] * std::norm(e(u, j));
    }
    const double sinr = rho * bf.power[u] * std::norm(e(u, u)) / (1.0 + interference);
    r.per_stream[u] = std::log2(1.0 + sinr);
    r.rate_bits += r.per_stream[u];
  }
  return r;
}

}  // namespace beamsim
