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
#include "support.hpp"

#include "beamsim/beamform.hpp"
#include "beamsim/channel.hpp"
#include "beamsim/error.hpp"
#include "beamsim/rate.hpp"

using namespace beamsim;

namespace {

ChannelRealization rayleigh(std::size_t n_t, std::size_t n_r, std::uint64_t seed) {
  SeededRng rng(seed, 0);
  return draw_channel(ChannelModel{ChannelKind::Rayleigh, n_t, n_r}, rng);
}

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("digital svd beamformer achieves capacity") {
  const auto chan = rayleigh(16, 16, 3);
  const double rho = from_db(20.0);
  const auto bf = digital_svd_beamformer(chan, 4, rho);
  CHECK(bf.digital);
  CHECK(invariant_violations(bf).empty());
  CHECK(achievable_rate(chan, bf, rho).rate_bits ==
        doctest::Approx(capacity_p2p(chan, 4, rho).rate_bits).epsilon(1e-12));
}

TEST_CASE("lemma2 rf columns are phase matched to V") {
  const auto chan = rayleigh(32, 32, 4);
  const auto svd = channel_svd(chan, 4);
  const auto bf = hybrid_lemma2(chan, svd, 4, 1.0);
  CHECK(invariant_violations(bf).empty());
  for (std::size_t r = 0; r < 32; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      CHECK(std::abs(std::abs(bf.f_rf(r, c)) - 1.0) < 1e-12);
      CHECK(std::abs(std::arg(bf.f_rf(r, c) * std::conj(svd.v(r, c)))) < 1e-9);
    }
}

TEST_CASE("real positive V column gives all-ones rf column") {
  ComplexMatrix h(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) h(i, j) = 1.0 + 0.1 * (i == j);
  ChannelRealization chan{h, ChannelModel{ChannelKind::Rayleigh, 4, 4}, {}};
  const auto bf = hybrid_lemma2(chan, 1, 1.0);
  for (std::size_t r = 0; r < 4; ++r) CHECK(std::abs(bf.f_rf(r, 0) - cplx{1.0, 0.0}) < 1e-12);
}

TEST_CASE("double rf factorization is exact") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto chan = rayleigh(16, 16, seed);
    const auto svd = channel_svd(chan, 2);
    const auto bf = hybrid_double_rf(chan, svd, 2, 10.0);
    CHECK(bf.rf_chains() == 4);
    CHECK(max_abs_difference(bf.precoder(), svd.v.leading_columns(2)) <= 1e-10);
    CHECK(achievable_rate(chan, bf, 10.0).rate_bits ==
          doctest::Approx(capacity_p2p(chan, 2, 10.0).rate_bits).epsilon(1e-12));
  }
}

TEST_CASE("mixed scheme boundaries") {
  const auto chan = rayleigh(24, 24, 8);
  const double rho = 100.0;
  const auto a = hybrid_mixed(chan, 3, 3, rho);
  const auto b = hybrid_lemma2(chan, 3, rho);
  CHECK(a.f_rf == b.f_rf);
  CHECK(a.f_b == b.f_b);
  const auto c = hybrid_mixed(chan, 3, 6, rho);
  const auto d = hybrid_double_rf(chan, 3, rho);
  CHECK(c.f_rf == d.f_rf);
  CHECK(c.f_b == d.f_b);
  const auto e = hybrid_mixed(chan, 3, 5, rho);
  CHECK(e.rf_chains() == 5);
  CHECK(invariant_violations(e).empty());
  CHECK_THROWS_AS(hybrid_mixed(chan, 3, 7, rho), Error);
}

TEST_CASE("phase quantization picks the circularly nearest level") {
  CHECK(quantize_phase(0.3 * kPi, 2) == doctest::Approx(kPi / 2));
  CHECK(quantize_phase(1.9 * kPi, 2) == doctest::Approx(0.0));
  CHECK(quantize_phase(-0.1 * kPi, 2) == doctest::Approx(0.0));
  CHECK(quantize_phase(0.26 * kPi, 1) == doctest::Approx(0.0));
  // The non-circular metric sends 1.9 pi to the top level instead.
  CHECK(quantize_phase(1.9 * kPi, 2, PhaseMetric::Absolute) == doctest::Approx(1.5 * kPi));
}

TEST_CASE("fine quantization approaches the analog rate") {
  const auto chan = rayleigh(32, 32, 12);
  const double rho = from_db(34.0);
  const auto analog = hybrid_lemma2(chan, 4, rho);
  const auto fine = quantize_rf(chan, analog, PhaseResolution::digital(14), rho);
  CHECK(std::abs(achievable_rate(chan, fine, rho).rate_bits - achievable_rate(chan, analog, rho).rate_bits) <
        1e-3);
  const auto coarse = quantize_rf(chan, analog, PhaseResolution::digital(1), rho);
  for (auto v : coarse.f_rf.data()) {
    CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
    CHECK(std::abs(v.imag()) < 1e-12);
  }
}

TEST_CASE("selection policy") {
  const auto chan = rayleigh(64, 64, 13);
  const double rho = from_db(34.0);
  const auto zero = select_phase_shifters(chan, 4, rho, SelectionPolicy{0.0});
  const auto plain = hybrid_lemma2(chan, 4, rho);
  CHECK(zero.f_rf == plain.f_rf);
  CHECK(zero.f_b == plain.f_b);
  CHECK(zero.inactive_fraction() == 0.0);
  CHECK(SelectionPolicy{50.0}.alpha() == doctest::Approx(std::sqrt(std::log(2.0))).epsilon(1e-12));

  double frac = 0.0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto c = rayleigh(64, 64, 1000 + s);
    const auto bf = select_phase_shifters(c, 4, rho, SelectionPolicy{50.0});
    CHECK(invariant_violations(bf).empty());
    for (std::size_t r = 0; r < 64; ++r)
      for (std::size_t k = 0; k < 4; ++k)
        if (!bf.active_mask(r, k)) CHECK(bf.f_rf(r, k) == cplx{0.0, 0.0});
    frac += bf.inactive_fraction();
  }
  CHECK(std::abs(frac / 100 - 0.5) <= 0.03);
}

TEST_CASE("multiuser zero forcing") {
  SeededRng rng(31, 0);
  const auto chan = draw_channel(ChannelModel{ChannelKind::Rayleigh, 4, 4}, rng);
  const double rho = 50.0;
  const auto zf = mu_zf_digital(chan, 4, rho);
  CHECK(zf.multiuser());
  const ComplexMatrix e = chan.h * zf.precoder();
  CHECK(max_abs_difference(e * (1.0 / e(0, 0)), ComplexMatrix::identity(4)) < 1e-9);
  const double expected = 4 * std::log2(1.0 + rho / (4 * zf.gamma_t));
  CHECK(sum_rate_mu(chan, zf, rho).rate_bits == doctest::Approx(expected).epsilon(1e-10));

  ComplexMatrix u = testsupport::random_matrix(4, 4, 2);
  const auto q = thin_svd(u, 4);
  ChannelRealization unitary{q.u, ChannelModel{ChannelKind::Rayleigh, 4, 4}, {}};
  const auto zu = mu_zf_digital(unitary, 4, rho);
  CHECK(zu.gamma_t == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(max_abs_difference(zu.precoder(), q.u.adjoint()) < 1e-10);

  SeededRng r2(32, 0);
  const auto wide = draw_channel(ChannelModel{ChannelKind::Rayleigh, 64, 4}, r2);
  const auto hyb = mu_zf_hybrid(wide, 4, rho);
  CHECK(hyb.rf_chains() == 4);
  CHECK(invariant_violations(hyb).empty());
  CHECK_THROWS_AS(hyb.combiner(), Error);
}

TEST_CASE("gauge invariance of the channel svd") {
  const auto chan = rayleigh(16, 16, 40);
  const auto svd = channel_svd(chan, 4);
  auto twisted = svd;
  for (std::size_t c = 0; c < 4; ++c) {
    const cplx ph = std::polar(1.0, 0.7 + c);
    for (std::size_t r = 0; r < 16; ++r) {
      twisted.v(r, c) *= ph;
      twisted.u(r, c) *= ph;
    }
  }
  const double rho = from_db(30.0);
  CHECK(achievable_rate(chan, hybrid_lemma2(chan, svd, 4, rho), rho).rate_bits ==
        doctest::Approx(achievable_rate(chan, hybrid_lemma2(chan, twisted, 4, rho), rho).rate_bits)
            .epsilon(1e-10));
}
