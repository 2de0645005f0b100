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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "beamsim/channel.hpp"
#include "beamsim/numerics/complex_matrix.hpp"
#include "beamsim/numerics/svd.hpp"

namespace beamsim {

/// Hybrid precoder/combiner pair with its normalization and power allocation.
///
/// Multiuser beamformers carry no receive-side matrices. Fully digital
/// beamformers set `digital` and store the unconstrained precoder in f_rf with
/// f_b = I, which waives the unit-modulus check.
struct HybridBeamformer {
  ComplexMatrix f_rf;  // N_t x M
  ComplexMatrix f_b;   // M x K
  std::optional<ComplexMatrix> w_rf;
  std::optional<ComplexMatrix> w_b;
  std::vector<double> power;  // fractions of the unit budget, length K
  double gamma_t = 1.0;
  double gamma_r = 1.0;
  Mask active_mask;     // N_t x M
  Mask rx_active_mask;  // N_r x M, empty in multiuser mode
  bool digital = false;

  std::size_t streams() const noexcept { return f_b.cols(); }
  std::size_t rf_chains() const noexcept { return f_rf.cols(); }
  bool multiuser() const noexcept { return !w_rf.has_value(); }

  ComplexMatrix precoder() const { return f_rf * f_b; }
  ComplexMatrix combiner() const;

  // Fraction of inactive phase shifters over both ends.
  double inactive_fraction() const;
};

// Empty when every invariant holds; otherwise one message per violation.
std::vector<std::string> invariant_violations(const HybridBeamformer& bf);

enum class PhaseKind { Analog, Digital };

struct PhaseResolution {
  PhaseKind kind = PhaseKind::Analog;
  unsigned bits = 0;

  static PhaseResolution analog() { return {}; }
  static PhaseResolution digital(unsigned bits);
};

struct SelectionPolicy {
  double beta_percent = 0.0;

  double alpha() const;
};

// Distance used when rounding phases to the grid. Absolute compares raw
// principal-value angles without wrapping and exists for fault injection.
enum class PhaseMetric { Circular, Absolute };

// Nearest grid angle in [0, 2pi) for a 2^bits point grid.
double quantize_phase(double phase, unsigned bits, PhaseMetric metric = PhaseMetric::Circular);

// tr(X^H X) / cols.
double normalization_factor(const ComplexMatrix& x);

HybridBeamformer digital_svd_beamformer(const ChannelRealization& chan, std::size_t k, double rho);
HybridBeamformer digital_svd_beamformer(const ChannelRealization& chan, const SvdResult& svd,
                                        std::size_t k, double rho);

HybridBeamformer hybrid_lemma2(const ChannelRealization& chan, std::size_t k, double rho);
HybridBeamformer hybrid_lemma2(const ChannelRealization& chan, const SvdResult& svd, std::size_t k,
                               double rho);

HybridBeamformer hybrid_double_rf(const ChannelRealization& chan, std::size_t k, double rho);
HybridBeamformer hybrid_double_rf(const ChannelRealization& chan, const SvdResult& svd,
                                  std::size_t k, double rho);

HybridBeamformer hybrid_mixed(const ChannelRealization& chan, std::size_t k, std::size_t m,
                              double rho);
HybridBeamformer hybrid_mixed(const ChannelRealization& chan, const SvdResult& svd, std::size_t k,
                              std::size_t m, double rho);

// Rounds every active RF phase to the B-bit grid, then recomputes the
// normalizations and power allocation on the given channel.
HybridBeamformer quantize_rf(const ChannelRealization& chan, const HybridBeamformer& bf,
                             const PhaseResolution& res, double rho,
                             PhaseMetric metric = PhaseMetric::Circular);

HybridBeamformer select_phase_shifters(const ChannelRealization& chan, std::size_t k, double rho,
                                       const SelectionPolicy& policy);
HybridBeamformer select_phase_shifters(const ChannelRealization& chan, const SvdResult& svd,
                                       std::size_t k, double rho, const SelectionPolicy& policy);

// Multiuser downlink: chan.h is K x N_t, one row per single-antenna user.
HybridBeamformer mu_zf_hybrid(const ChannelRealization& chan, std::size_t k, double rho);
HybridBeamformer mu_zf_digital(const ChannelRealization& chan, std::size_t k, double rho);

}  // namespace beamsim
