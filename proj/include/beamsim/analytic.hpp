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

namespace beamsim {

struct PowerModelParams {
  double p_ps_mw = 0.0;  // per phase shifter
  double p_s_mw = 0.0;   // per switch
  std::size_t m = 0;
  std::size_t n_t = 0;
  double beta_percent = 0.0;
};

// Rate gap of phase-matched RF beamforming with M = K streams.
double gap_lemma3(std::size_t k);
// Rate gap with K <= M <= 2K RF chains.
double gap_general(std::size_t k, std::size_t m);
// Upper bound on the loss from B-bit phase shifters.
double quant_gap_bound(std::size_t k, unsigned bits);
// Gap of multiuser ZF hybrid precoding to digital ZF.
double gap_multiuser(std::size_t k);

// Selection threshold for a percentage of disabled phase shifters.
double alpha_from_beta(double beta_percent);
// Mean of a unit Rayleigh(1/sqrt(2)) magnitude truncated to zero below alpha.
double expected_v_tilde(double alpha);
// Rate gap when beta percent of the phase shifters are turned off. Logs are base 2.
double gap_selection(std::size_t k, double beta_percent);

// Total RF network power in watts.
double rf_power_consumption(const PowerModelParams& params);

inline double predicted_rate(double capacity, double gap) { return capacity - gap; }

}  // namespace beamsim
