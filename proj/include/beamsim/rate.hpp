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
#include <span>
#include <vector>

#include "beamsim/beamform.hpp"
#include "beamsim/channel.hpp"

namespace beamsim {

struct RateReport {
  double rate_bits = 0.0;
  std::vector<double> per_stream;
  double rho_db = 0.0;
  double noise_cov_condition = 1.0;
};

/// Sum-power waterfilling: P_k = max(0, mu - 1/(rho g_k)) with sum P_k = budget.
/// Zero gains receive no power. Throws Domain when no gain is positive.
std::vector<double> waterfill(std::span<const double> gains, double rho, double budget = 1.0);

double to_db(double linear);
double from_db(double db);

RateReport capacity_from_sigma(std::span<const double> sigma, double rho);
RateReport capacity_p2p(const ChannelRealization& chan, std::size_t k, double rho);

// Per-stream gains |(W^H H F)_kk|^2 / (gamma_t gamma_r) of a point-to-point beamformer.
std::vector<double> effective_gains(const ChannelRealization& chan, const HybridBeamformer& bf);

/// Log-det rate with the combiner-induced noise covariance. Throws
/// Singularity when that covariance has condition number above 1e12 and
/// Shape for multiuser beamformers.
RateReport achievable_rate(const ChannelRealization& chan, const HybridBeamformer& bf, double rho);

// Sum rate with per-user decoding, interference treated as noise.
RateReport sum_rate_mu(const ChannelRealization& chan, const HybridBeamformer& bf, double rho);

}  // namespace beamsim
