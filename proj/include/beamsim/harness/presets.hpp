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
#include <cstdint>
#include <string>
#include <vector>

#include "beamsim/harness/config.hpp"

namespace beamsim {

const std::vector<std::string>& figure_ids();

// Ready-to-run configs for a figure. Throws Config for an unknown id.
std::vector<ExperimentConfig> figure_preset(const std::string& id, std::size_t trials = 500,
                                            std::uint64_t seed = 1);

// Pooled sqrt(N) |V_{n,k}| samples for the leading singular vectors of
// N x N Rayleigh channels, compared with the Rayleigh(1/sqrt(2)) law.
struct DistributionStudy {
  std::size_t n = 0;
  std::vector<double> samples;
  double ks_statistic = 0.0;
};

DistributionStudy distribution_study(std::size_t n, std::size_t trials, std::uint64_t seed,
                                     std::size_t columns = 4);

// Histogram against the reference density, one block per study.
std::string format_distribution_csv(const std::vector<DistributionStudy>& studies,
                                    std::size_t bins = 40);

}  // namespace beamsim
