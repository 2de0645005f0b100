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

#include <optional>
#include <string>
#include <vector>

#include "beamsim/harness/experiment.hpp"

namespace beamsim {

struct CsvRow {
  std::string experiment;
  std::string sweep_param;
  std::optional<double> sweep_value;
  std::string scheme;
  std::size_t n_t = 0;
  std::size_t n_r = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  double rho_db = 0.0;
  std::size_t trials = 0;
  double mean_rate = 0.0;
  double std_err = 0.0;
  std::optional<double> analytic_rate;
  double mean_gap = 0.0;
  double inactive_fraction = 0.0;
  std::size_t excluded = 0;
};

const std::vector<std::string>& csv_columns();

std::vector<CsvRow> csv_rows(const std::vector<PointResult>& results);

std::string format_csv(const std::vector<CsvRow>& rows);
// Throws Io when the file cannot be written.
void write_csv(const std::vector<CsvRow>& rows, const std::string& path);
void write_text(const std::string& text, const std::string& path);

// Per-trial records of one sweep point.
std::string format_trials_csv(const PointResult& point);

std::string format_number(double x);

}  // namespace beamsim
