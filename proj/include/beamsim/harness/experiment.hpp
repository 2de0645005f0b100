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

#include "beamsim/beamform.hpp"
#include "beamsim/harness/config.hpp"

namespace beamsim {

struct TrialRecord {
  std::size_t trial_index = 0;
  double capacity_bits = 0.0;
  double rate_bits = 0.0;
  double gap_bits = 0.0;
  double inactive_fraction = 0.0;
  double gamma_t = 0.0;
  // Rate of the unquantized phase-matched beamformer on the same channel
  // (quantized scheme only, otherwise NaN).
  double reference_rate_bits = 0.0;
  bool degenerate = false;
  std::string degenerate_reason;
};

struct Moments {
  double mean = 0.0;
  double std_error = 0.0;
};

struct SummaryStats {
  Moments capacity;
  Moments rate;
  Moments gap;
  Moments inactive_fraction;
  Moments gamma_t;
  std::size_t trial_count = 0;  // non-degenerate trials
  std::size_t excluded_count = 0;
  std::optional<double> analytic_gap;
  // mean capacity minus the analytic gap; may be negative at low SNR.
  std::optional<double> analytic_rate;
};

struct PointResult {
  ExperimentConfig config;  // sweep applied, sweep field cleared
  std::optional<std::string> sweep_param;
  std::optional<double> sweep_value;
  SummaryStats summary;
  std::vector<TrialRecord> trials;  // ordered by trial_index
};

struct RunOptions {
  std::size_t workers = 0;  // 0 selects the hardware concurrency
  PhaseMetric quantization_metric = PhaseMetric::Circular;
};

// One trial on stream (master_seed, trial_index). Degenerate outcomes are
// flagged rather than thrown.
TrialRecord run_trial(const ExperimentConfig& config, std::size_t trial_index,
                      const RunOptions& options = {});

SummaryStats summarize(const ExperimentConfig& config, const std::vector<TrialRecord>& trials);

// Closed-form gap for the configured scheme, if one exists.
std::optional<double> analytic_gap(const ExperimentConfig& config);

// Runs every sweep point (or the single configured point). Results do not
// depend on the worker count.
std::vector<PointResult> run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

}  // namespace beamsim
