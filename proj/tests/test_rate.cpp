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
#include <numeric>

#include "doctest.h"
#include "support.hpp"

#include "beamsim/beamform.hpp"
#include "beamsim/channel.hpp"
#include "beamsim/error.hpp"
#include "beamsim/rate.hpp"

using namespace beamsim;

TEST_CASE("waterfill examples") {
  const auto eq = waterfill(std::vector<double>{2.0, 2.0, 2.0}, 1.0);
  for (double p : eq) CHECK(p == doctest::Approx(1.0 / 3));
  const auto two = waterfill(std::vector<double>{4.0, 1.0}, 1.0);
  CHECK(two[0] == doctest::Approx(0.875));
  CHECK(two[1] == doctest::Approx(0.125));
  const auto off = waterfill(std::vector<double>{100.0, 1e-4}, 0.01);
  CHECK(off[0] == doctest::Approx(1.0));
  CHECK(off[1] == 0.0);
  CHECK_THROWS_AS(waterfill(std::vector<double>{0.0, 0.0}, 1.0), Error);
}

TEST_CASE("waterfill satisfies KKT") {
  SeededRng rng(8, 0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> g(6);
    for (auto& x : g) x = rng.uniform(0.01, 10.0);
    const double rho = rng.uniform(0.1, 100.0);
    const auto p = waterfill(g, rho, 2.0);
    CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-12));
    double level = -1.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(p[i] >= 0.0);
      const double w = p[i] + 1.0 / (rho * g[i]);
      if (p[i] > 0.0) {
        if (level < 0.0) level = w;
        CHECK(w == doctest::Approx(level).epsilon(1e-10));
      }
    }
    for (std::size_t i = 0; i < g.size(); ++i)
      if (p[i] == 0.0) CHECK(1.0 / (rho * g[i]) >= level - 1e-10);
  }
}

TEST_CASE("capacity from singular values") {
  CHECK(capacity_from_sigma(std::vector<double>{1.0}, 1.0).rate_bits == doctest::Approx(1.0));
  CHECK(capacity_from_sigma(std::vector<double>{2.0, 1.0}, 1.0).rate_bits ==
        doctest::Approx(std::log2(4.5) + std::log2(1.125)).epsilon(1e-12));
  CHECK(from_db(to_db(37.0)) == doctest::Approx(37.0));
}

TEST_CASE("achievable rate equals an LU log-det oracle") {
  SeededRng rng(14, 0);
  const auto chan = draw_channel(ChannelModel{ChannelKind::Rayleigh, 12, 10}, rng);
  const double rho = from_db(25.0);
  const auto bf = hybrid_lemma2(chan, 3, rho);
  const auto report = achievable_rate(chan, bf, rho);

  // log2 det(Rn + S) - log2 det(Rn), with S = rho/(Gt Gr) W^H H F P F^H H^H W.
  const ComplexMatrix f = bf.precoder();
  const ComplexMatrix w = bf.combiner();
  const ComplexMatrix eff = w.adjoint() * chan.h * f;
  ComplexMatrix p(3, 3);
  for (std::size_t i = 0; i < 3; ++i) p(i, i) = bf.power[i];
  const ComplexMatrix rn = adjoint_times(w, w) * (1.0 / bf.gamma_r);
  const ComplexMatrix signal = eff * p * eff.adjoint() * (rho / (bf.gamma_t * bf.gamma_r));
  const double oracle = testsupport::log2_abs_det(rn + signal) - testsupport::log2_abs_det(rn);
  CHECK(report.rate_bits == doctest::Approx(oracle).epsilon(1e-10));
  CHECK(report.per_stream.size() == 3);
}

TEST_CASE("sum rate matches a scalar loop") {
  SeededRng rng(15, 0);
  const auto chan = draw_channel(ChannelModel{ChannelKind::Rayleigh, 8, 4}, rng);
  HybridBeamformer bf;
  bf.f_rf = testsupport::random_matrix(8, 4, 3);
  bf.f_b = ComplexMatrix::identity(4);
  bf.power = {0.25, 0.25, 0.25, 0.25};
  bf.gamma_t = normalization_factor(bf.f_rf);
  bf.active_mask = Mask(8, 4);
  bf.digital = true;
  const double rho = 30.0;
  double oracle = 0.0;
  const ComplexMatrix e = chan.h * bf.precoder();
  for (std::size_t u = 0; u < 4; ++u) {
    double interference = 1.0;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != u) interference += rho * 0.25 * std::norm(e(u, j)) / bf.gamma_t;
    oracle += std::log2(1.0 + rho * 0.25 * std::norm(e(u, u)) / bf.gamma_t / interference);
  }
  CHECK(sum_rate_mu(chan, bf, rho).rate_bits == doctest::Approx(oracle).epsilon(1e-12));

  auto dead = chan;
  for (std::size_t c = 0; c < 8; ++c) dead.h(2, c) = 0.0;
  const auto r = sum_rate_mu(dead, bf, rho);
  CHECK(r.per_stream[2] == 0.0);
}
