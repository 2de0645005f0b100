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

#include <cmath>
#include <numbers>

#include "doctest.h"

#include "beamsim/analytic.hpp"
#include "beamsim/error.hpp"

using namespace beamsim;

namespace {

// Composite Simpson rule for the truncated Rayleigh moment, integrand 2 v^2 exp(-v^2).
double v_tilde_quadrature(double alpha) {
  const double hi = 12.0;
  const int n = 20000;
  const double h = (hi - alpha) / n;
  auto f = [](double v) { return 2.0 * v * v * std::exp(-v * v); };
  double s = f(alpha) + f(hi);
  for (int i = 1; i < n; ++i) s += f(alpha + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

double selection_oracle(double k, double beta) {
  const double alpha = std::sqrt(-std::log(1.0 - beta / 100.0));
  return -k * std::log2(std::pow(v_tilde_quadrature(alpha), 4) / std::pow(1.0 - beta / 100.0, 2));
}

}  // namespace

TEST_CASE("closed-form gaps") {
  CHECK(gap_lemma3(4) == doctest::Approx(2.7880).epsilon(1e-4));
  CHECK(gap_lemma3(1) == doctest::Approx(0.6970).epsilon(1e-4));
  CHECK_THROWS_AS(gap_lemma3(0), Error);
  CHECK(gap_general(3, 5) == doctest::Approx(0.6970).epsilon(1e-4));
  CHECK(gap_general(3, 6) == 0.0);
  CHECK(gap_general(4, 4) == gap_lemma3(4));
  CHECK_THROWS_AS(gap_general(3, 2), Error);
  CHECK(gap_multiuser(4) == doctest::Approx(1.394).epsilon(1e-3));
  CHECK(gap_multiuser(1) == doctest::Approx(0.3485).epsilon(1e-3));
  for (std::size_t k = 1; k < 8; ++k) CHECK(2 * gap_multiuser(k) == doctest::Approx(gap_lemma3(k)));
}

TEST_CASE("quantization bound") {
  CHECK(quant_gap_bound(4, 3) == doctest::Approx(1.828).epsilon(1e-3));
  CHECK(quant_gap_bound(4, 2) == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(quant_gap_bound(4, 14) <= 1e-4);
  for (unsigned b = 1; b < 12; ++b) CHECK(quant_gap_bound(4, b + 1) < quant_gap_bound(4, b));
  CHECK_THROWS_AS(quant_gap_bound(4, 0), Error);
}

TEST_CASE("selection threshold and truncated moment") {
  CHECK(alpha_from_beta(0.0) == 0.0);
  CHECK(alpha_from_beta(50.0) == doctest::Approx(0.83255).epsilon(1e-5));
  CHECK(alpha_from_beta(25.0) == doctest::Approx(0.53636).epsilon(1e-5));
  CHECK_THROWS_AS(alpha_from_beta(100.0), Error);
  CHECK(expected_v_tilde(0.0) == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-12));
  CHECK(expected_v_tilde(6.0) <= 1e-7);
  CHECK(expected_v_tilde(0.83255) == doctest::Approx(0.62812).epsilon(1e-5));
  for (double a : {0.0, 0.3, 0.83255, 1.5, 2.5})
    CHECK(expected_v_tilde(a) == doctest::Approx(v_tilde_quadrature(a)).epsilon(1e-9));
}

TEST_CASE("selection gap") {
  CHECK(gap_selection(4, 0.0) == doctest::Approx(gap_lemma3(4)).epsilon(1e-14));
  CHECK(gap_selection(4, 25.0) == doctest::Approx(1.8473).epsilon(1e-4));
  CHECK(gap_selection(4, 50.0) == doctest::Approx(2.7344).epsilon(1e-4));
  for (double beta : {10.0, 25.0, 40.0, 60.0})
    CHECK(gap_selection(4, beta) == doctest::Approx(selection_oracle(4, beta)).epsilon(1e-8));
  CHECK(gap_selection(4, 25.0) < gap_selection(4, 0.0));
}

TEST_CASE("power model") {
  CHECK(rf_power_consumption({111.0, 1.0, 4, 64, 50.0}) == doctest::Approx(14.464).epsilon(1e-14));
  CHECK(rf_power_consumption({111.0, 0.0, 4, 64, 0.0}) == doctest::Approx(28.416).epsilon(1e-14));
  CHECK(rf_power_consumption({111.0, 1.0, 4, 64, 100.0}) == doctest::Approx(0.256).epsilon(1e-14));
  CHECK(predicted_rate(40.0, 2.788) == doctest::Approx(37.212));
  CHECK(predicted_rate(12.5, 0.0) == 12.5);
}
