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

#include "beamsim/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "beamsim/error.hpp"
#include "beamsim/numerics/special.hpp"

namespace beamsim {

namespace {

double log2_pi_over_4() { return std::log2(std::numbers::pi / 4.0); }

void require_beta(double beta_percent) {
  if (!(beta_percent >= 0.0 && beta_percent < 100.0)) {
    fail(ErrorKind::Domain, "beta_percent must lie in [0, 100), got " + std::to_string(beta_percent));
  }
}

}  // namespace

double gap_lemma3(std::size_t k) {
  if (k < 1) fail(ErrorKind::Domain, "gap_lemma3: k must be at least 1");
  return -2.0 * static_cast<double>(k) * log2_pi_over_4();
}

double gap_general(std::size_t k, std::size_t m) {
  if (k < 1 || m < k || m > 2 * k) {
    fail(ErrorKind::Dimension, "gap_general: need k <= m <= 2k");
  }
  return -2.0 * static_cast<double>(2 * k - m) * log2_pi_over_4();
}

double quant_gap_bound(std::size_t k, unsigned bits) {
  if (bits < 1) fail(ErrorKind::Domain, "quant_gap_bound: bits must be at least 1");
  const double c = std::cos(2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(bits) + 1));
  return -static_cast<double>(k) * std::log2(std::pow(c, 4));
}

double gap_multiuser(std::size_t k) {
  if (k < 1) fail(ErrorKind::Domain, "gap_multiuser: k must be at least 1");
  return -static_cast<double>(k) * log2_pi_over_4();
}

double alpha_from_beta(double beta_percent) {
  require_beta(beta_percent);
  return std::sqrt(-std::log1p(-beta_percent / 100.0));
}

double expected_v_tilde(double alpha) {
  if (!(alpha >= 0.0)) fail(ErrorKind::Domain, "expected_v_tilde: alpha must be nonnegative");
  const double half_root_pi = std::sqrt(std::numbers::pi) / 2.0;
  return half_root_pi + alpha * std::exp(-alpha * alpha) - half_root_pi * erf(alpha);
}

double gap_selection(std::size_t k, double beta_percent) {
  if (k < 1) fail(ErrorKind::Domain, "gap_selection: k must be at least 1");
  require_beta(beta_percent);
  const double kk = static_cast<double>(k);
  const double kept = 1.0 - beta_percent / 100.0;
  return 2.0 * kk * std::log2(kept) -
         4.0 * kk * std::log2(expected_v_tilde(alpha_from_beta(beta_percent)));
}

double rf_power_consumption(const PowerModelParams& p) {
  if (p.p_ps_mw < 0.0 || p.p_s_mw < 0.0 || p.beta_percent < 0.0 || p.beta_percent > 100.0) {
    fail(ErrorKind::Domain, "rf_power_consumption: invalid parameters");
  }
  const double per_element = (1.0 - p.beta_percent / 100.0) * p.p_ps_mw + p.p_s_mw;
  return static_cast<double>(p.m * p.n_t) * per_element / 1000.0;
}

}  // namespace beamsim
