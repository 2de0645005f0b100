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

#include "beamsim/beamform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "beamsim/analytic.hpp"
#include "beamsim/error.hpp"
#include "beamsim/numerics/linalg.hpp"
#include "beamsim/rate.hpp"

namespace beamsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxZfCondition = 1e12;

void require_rank(const SvdResult& svd, std::size_t k) {
  if (k < 1 || svd.sigma.size() < k) {
    fail(ErrorKind::Dimension, "beamformer: k = " + std::to_string(k) + " exceeds available triplets");
  }
  if (!(svd.sigma[k - 1] > 1e-9 * svd.sigma[0])) {
    fail(ErrorKind::Rank, "beamformer: channel has effective rank below k = " + std::to_string(k));
  }
}

void require_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) fail(ErrorKind::Domain, "rho must be positive and finite");
}

ComplexMatrix phase_matched(const ComplexMatrix& x, std::size_t k) {
  ComplexMatrix out(x.rows(), k);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < k; ++c) out(r, c) = std::polar(1.0, std::arg(x(r, c)));
  }
  return out;
}

// Pair columns e^{j(angle +- acos|x|)} for stream `src` of x, written at dst and dst + 1.
void write_pair(const ComplexMatrix& x, std::size_t src, ComplexMatrix& rf, std::size_t dst) {
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const double angle = std::arg(x(r, src));
    const double spread = std::acos(std::min(1.0, std::abs(x(r, src))));
    rf(r, dst) = std::polar(1.0, angle + spread);
    rf(r, dst + 1) = std::polar(1.0, angle - spread);
  }
}

void set_power_from_gains(const ChannelRealization& chan, HybridBeamformer& bf, double rho) {
  bf.gamma_t = normalization_factor(bf.precoder());
  bf.gamma_r = normalization_factor(bf.combiner());
  const auto gains = effective_gains(chan, bf);
  bf.power = waterfill(gains, rho, 1.0);
}

void finish_zf_hybrid(const ChannelRealization& chan, HybridBeamformer& bf) {
  const std::size_t k = chan.h.rows();
  const ComplexMatrix hf = chan.h * bf.f_rf;
  if (!(condition_number(hf) <= kMaxZfCondition)) {
    fail(ErrorKind::Singularity, "mu_zf_hybrid: H F_RF is numerically singular");
  }
  bf.f_b = inverse(hf);
  bf.gamma_t = normalization_factor(bf.precoder());
  bf.gamma_r = 1.0;
  bf.power.assign(k, 1.0 / static_cast<double>(k));
}

void require_multiuser_shape(const ChannelRealization& chan, std::size_t k, const char* what) {
  if (chan.h.rows() != k) {
    fail(ErrorKind::Shape, std::string(what) + ": channel must have one row per user (K = " +
                               std::to_string(k) + ")");
  }
  if (k < 1 || k > chan.h.cols()) {
    fail(ErrorKind::Dimension, std::string(what) + ": need 1 <= K <= N_t");
  }
}

}  // namespace

ComplexMatrix HybridBeamformer::combiner() const {
  if (!w_rf || !w_b) fail(ErrorKind::Shape, "multiuser beamformer has no combiner");
  return *w_rf * *w_b;
}

double HybridBeamformer::inactive_fraction() const {
  const double total = static_cast<double>(active_mask.rows() * active_mask.cols() +
                                           rx_active_mask.rows() * rx_active_mask.cols());
  if (total == 0.0) return 0.0;
  const double active =
      static_cast<double>(active_mask.count_active() + rx_active_mask.count_active());
  return (total - active) / total;
}

std::vector<std::string> invariant_violations(const HybridBeamformer& bf) {
  std::vector<std::string> out;
  const std::size_t k = bf.streams();
  auto check_rf = [&](const ComplexMatrix& rf, const Mask& mask, const char* name) {
    if (mask.rows() != rf.rows() || mask.cols() != rf.cols()) {
      out.push_back(std::string(name) + ": mask shape differs from matrix shape");
      return;
    }
    if (bf.digital) return;
    for (std::size_t r = 0; r < rf.rows(); ++r) {
      for (std::size_t c = 0; c < rf.cols(); ++c) {
        const double mag = std::abs(rf(r, c));
        if (mask(r, c) ? std::abs(mag - 1.0) > 1e-12 : mag != 0.0) {
          out.push_back(std::string(name) + ": entry (" + std::to_string(r) + ", " +
                        std::to_string(c) + ") has magnitude " + std::to_string(mag));
          return;
        }
      }
    }
  };
  if (bf.f_rf.cols() != bf.f_b.rows()) out.push_back("f_rf and f_b do not chain");
  check_rf(bf.f_rf, bf.active_mask, "f_rf");
  if (bf.w_rf) {
    if (!bf.w_b || bf.w_rf->cols() != bf.w_b->rows()) out.push_back("w_rf and w_b do not chain");
    check_rf(*bf.w_rf, bf.rx_active_mask, "w_rf");
  }
  if (bf.power.size() != k) out.push_back("power length differs from stream count");
  double total = 0.0;
  for (double p : bf.power) {
    if (!(p >= 0.0)) out.push_back("negative power entry");
    total += p;
  }
  if (total > 1.0 + 1e-12) out.push_back("power exceeds unit budget: " + std::to_string(total));
  if (out.empty()) {
    const double gt = normalization_factor(bf.precoder());
    if (std::abs(gt - bf.gamma_t) > 1e-10 * std::abs(gt)) out.push_back("gamma_t mismatch");
    if (bf.w_rf) {
      const double gr = normalization_factor(bf.combiner());
      if (std::abs(gr - bf.gamma_r) > 1e-10 * std::abs(gr)) out.push_back("gamma_r mismatch");
    }
  }
  return out;
}

PhaseResolution PhaseResolution::digital(unsigned bits) {
  if (bits < 1 || bits > 16) fail(ErrorKind::Domain, "phase resolution: bits must lie in [1, 16]");
  return {PhaseKind::Digital, bits};
}

double SelectionPolicy::alpha() const { return alpha_from_beta(beta_percent); }

double quantize_phase(double phase, unsigned bits, PhaseMetric metric) {
  if (bits < 1 || bits > 16) fail(ErrorKind::Domain, "quantize_phase: bits must lie in [1, 16]");
  const std::size_t points = std::size_t{1} << bits;
  const double step = kTwoPi / static_cast<double>(points);
  if (metric == PhaseMetric::Absolute) {
    const double q = phase / step;
    if (q <= 0.0) return 0.0;
    const double lo = std::floor(q);
    const double idx = (q - lo) <= 0.5 ? lo : lo + 1.0;
    return std::min(idx, static_cast<double>(points - 1)) * step;
  }
  double t = std::fmod(phase, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  const double q = t / step;
  const double lo = std::floor(q);
  auto idx = static_cast<std::size_t>((q - lo) <= 0.5 ? lo : lo + 1.0);
  return static_cast<double>(idx % points) * step;
}

double normalization_factor(const ComplexMatrix& x) {
  if (x.cols() == 0) fail(ErrorKind::Dimension, "normalization_factor: no columns");
  return x.squared_norm() / static_cast<double>(x.cols());
}

HybridBeamformer digital_svd_beamformer(const ChannelRealization& chan, std::size_t k, double rho) {
  return digital_svd_beamformer(chan, channel_svd(chan, k), k, rho);
}

HybridBeamformer digital_svd_beamformer(const ChannelRealization& chan, const SvdResult& svd,
                                        std::size_t k, double rho) {
  require_rho(rho);
  require_rank(svd, k);
  HybridBeamformer bf;
  bf.digital = true;
  bf.f_rf = svd.v.leading_columns(k);
  bf.f_b = ComplexMatrix::identity(k);
  bf.w_rf = svd.u.leading_columns(k);
  bf.w_b = ComplexMatrix::identity(k);
  bf.active_mask = Mask(chan.h.cols(), k);
  bf.rx_active_mask = Mask(chan.h.rows(), k);
  bf.gamma_t = normalization_factor(bf.f_rf);
  bf.gamma_r = normalization_factor(*bf.w_rf);
  std::vector<double> gains(k);
  for (std::size_t i = 0; i < k; ++i) gains[i] = svd.sigma[i] * svd.sigma[i];
  bf.power = waterfill(gains, rho, 1.0);
  return bf;
}

HybridBeamformer hybrid_lemma2(const ChannelRealization& chan, std::size_t k, double rho) {
  return hybrid_lemma2(chan, channel_svd(chan, k), k, rho);
}

HybridBeamformer hybrid_lemma2(const ChannelRealization& chan, const SvdResult& svd, std::size_t k,
                               double rho) {
  require_rho(rho);
  require_rank(svd, k);
  HybridBeamformer bf;
  bf.f_rf = phase_matched(svd.v, k);
  bf.f_b = ComplexMatrix::identity(k);
  bf.w_rf = phase_matched(svd.u, k);
  bf.w_b = ComplexMatrix::identity(k);
  bf.active_mask = Mask(chan.h.cols(), k);
  bf.rx_active_mask = Mask(chan.h.rows(), k);
  set_power_from_gains(chan, bf, rho);
  return bf;
}

HybridBeamformer hybrid_double_rf(const ChannelRealization& chan, std::size_t k, double rho) {
  return hybrid_double_rf(chan, channel_svd(chan, k), k, rho);
}

HybridBeamformer hybrid_double_rf(const ChannelRealization& chan, const SvdResult& svd,
                                  std::size_t k, double rho) {
  require_rho(rho);
  require_rank(svd, k);
  HybridBeamformer bf;
  bf.f_rf = ComplexMatrix(chan.h.cols(), 2 * k);
  ComplexMatrix w_rf(chan.h.rows(), 2 * k);
  ComplexMatrix base(2 * k, k);
  for (std::size_t s = 0; s < k; ++s) {
    write_pair(svd.v, s, bf.f_rf, 2 * s);
    write_pair(svd.u, s, w_rf, 2 * s);
    base(2 * s, s) = 0.5;
    base(2 * s + 1, s) = 0.5;
  }
  bf.f_b = base;
  bf.w_rf = std::move(w_rf);
  bf.w_b = std::move(base);
  bf.active_mask = Mask(chan.h.cols(), 2 * k);
  bf.rx_active_mask = Mask(chan.h.rows(), 2 * k);
  set_power_from_gains(chan, bf, rho);
  return bf;
}

HybridBeamformer hybrid_mixed(const ChannelRealization& chan, std::size_t k, std::size_t m,
                              double rho) {
  return hybrid_mixed(chan, channel_svd(chan, k), k, m, rho);
}

HybridBeamformer hybrid_mixed(const ChannelRealization& chan, const SvdResult& svd, std::size_t k,
                              std::size_t m, double rho) {
  if (k < 1 || m < k || m > 2 * k) {
    fail(ErrorKind::Dimension, "hybrid_mixed: need k <= m <= 2k, got k = " + std::to_string(k) +
                                   ", m = " + std::to_string(m));
  }
  if (m == k) return hybrid_lemma2(chan, svd, k, rho);
  if (m == 2 * k) return hybrid_double_rf(chan, svd, k, rho);
  require_rho(rho);
  require_rank(svd, k);

  // Pair blocks carry sqrt(N)/2 so that every stream's precoder column has
  // the same norm as a phase-matched column.
  const std::size_t pairs = m - k;
  auto build = [&](const ComplexMatrix& x, ComplexMatrix& rf, ComplexMatrix& base) {
    const double pair_gain = std::sqrt(static_cast<double>(x.rows())) / 2.0;
    rf = ComplexMatrix(x.rows(), m);
    base = ComplexMatrix(m, k);
    std::size_t col = 0;
    for (std::size_t s = 0; s < pairs; ++s, col += 2) {
      write_pair(x, s, rf, col);
      base(col, s) = pair_gain;
      base(col + 1, s) = pair_gain;
    }
    for (std::size_t s = pairs; s < k; ++s, ++col) {
      for (std::size_t r = 0; r < x.rows(); ++r) rf(r, col) = std::polar(1.0, std::arg(x(r, s)));
      base(col, s) = 1.0;
    }
  };
  HybridBeamformer bf;
  ComplexMatrix w_rf;
  ComplexMatrix w_b;
  build(svd.v, bf.f_rf, bf.f_b);
  build(svd.u, w_rf, w_b);
  bf.w_rf = std::move(w_rf);
  bf.w_b = std::move(w_b);
  bf.active_mask = Mask(chan.h.cols(), m);
  bf.rx_active_mask = Mask(chan.h.rows(), m);
  set_power_from_gains(chan, bf, rho);
  return bf;
}

HybridBeamformer quantize_rf(const ChannelRealization& chan, const HybridBeamformer& bf,
                             const PhaseResolution& res, double rho, PhaseMetric metric) {
  require_rho(rho);
  if (res.kind != PhaseKind::Digital) {
    fail(ErrorKind::Domain, "quantize_rf: resolution must be digital");
  }
  if (bf.digital) fail(ErrorKind::Domain, "quantize_rf: fully digital beamformer has no RF phases");
  auto round_all = [&](ComplexMatrix& rf, const Mask& mask) {
    for (std::size_t r = 0; r < rf.rows(); ++r) {
      for (std::size_t c = 0; c < rf.cols(); ++c) {
        if (!mask(r, c)) continue;
        rf(r, c) = std::polar(1.0, quantize_phase(std::arg(rf(r, c)), res.bits, metric));
      }
    }
  };
  HybridBeamformer out = bf;
  round_all(out.f_rf, out.active_mask);
  if (out.multiuser()) {
    finish_zf_hybrid(chan, out);
    return out;
  }
  round_all(*out.w_rf, out.rx_active_mask);
  set_power_from_gains(chan, out, rho);
  return out;
}

HybridBeamformer select_phase_shifters(const ChannelRealization& chan, std::size_t k, double rho,
                                       const SelectionPolicy& policy) {
  return select_phase_shifters(chan, channel_svd(chan, k), k, rho, policy);
}

HybridBeamformer select_phase_shifters(const ChannelRealization& chan, const SvdResult& svd,
                                       std::size_t k, double rho, const SelectionPolicy& policy) {
  require_rho(rho);
  require_rank(svd, k);
  const double alpha = policy.alpha();
  auto build = [&](const ComplexMatrix& x, ComplexMatrix& rf, Mask& mask, const char* side) {
    const double scale = std::sqrt(static_cast<double>(x.rows()));
    rf = ComplexMatrix(x.rows(), k);
    mask = Mask(x.rows(), k);
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t r = 0; r < x.rows(); ++r) {
        if (scale * std::abs(x(r, c)) <= alpha) {
          mask.set(r, c, false);
        } else {
          rf(r, c) = std::polar(1.0, std::arg(x(r, c)));
        }
      }
      if (mask.count_active_in_column(c) == 0) {
        fail(ErrorKind::DegenerateColumn, std::string("select_phase_shifters: ") + side +
                                              " column " + std::to_string(c) +
                                              " has no active phase shifter");
      }
    }
  };
  HybridBeamformer bf;
  ComplexMatrix w_rf;
  build(svd.v, bf.f_rf, bf.active_mask, "transmit");
  build(svd.u, w_rf, bf.rx_active_mask, "receive");
  bf.f_b = ComplexMatrix::identity(k);
  bf.w_rf = std::move(w_rf);
  bf.w_b = ComplexMatrix::identity(k);
  set_power_from_gains(chan, bf, rho);
  return bf;
}

HybridBeamformer mu_zf_hybrid(const ChannelRealization& chan, std::size_t k, double rho) {
  require_rho(rho);
  require_multiuser_shape(chan, k, "mu_zf_hybrid");
  const SvdResult svd = thin_svd(chan.h, k);
  require_rank(svd, k);
  HybridBeamformer bf;
  bf.f_rf = phase_matched(svd.v, k);
  bf.active_mask = Mask(chan.h.cols(), k);
  finish_zf_hybrid(chan, bf);
  return bf;
}

HybridBeamformer mu_zf_digital(const ChannelRealization& chan, std::size_t k, double rho) {
  require_rho(rho);
  require_multiuser_shape(chan, k, "mu_zf_digital");
  if (!(condition_number(chan.h) <= kMaxZfCondition)) {
    fail(ErrorKind::Singularity, "mu_zf_digital: channel is numerically singular");
  }
  HybridBeamformer bf;
  bf.digital = true;
  bf.f_rf = chan.h.adjoint() * inverse(chan.h * chan.h.adjoint());
  bf.f_b = ComplexMatrix::identity(k);
  bf.active_mask = Mask(chan.h.cols(), k);
  bf.gamma_t = normalization_factor(bf.f_rf);
  bf.gamma_r = 1.0;
  bf.power.assign(k, 1.0 / static_cast<double>(k));
  return bf;
}

}  // namespace beamsim
