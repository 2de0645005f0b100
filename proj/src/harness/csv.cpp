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

#include "beamsim/harness/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "beamsim/error.hpp"

namespace beamsim {

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "experiment", "sweep_param", "sweep_value", "scheme",        "n_t",
      "n_r",        "k",           "m",           "rho_db",        "trials",
      "mean_rate",  "std_err",     "analytic_rate", "mean_gap",    "inactive_fraction",
      "excluded"};
  return cols;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::vector<CsvRow> csv_rows(const std::vector<PointResult>& results) {
  std::vector<CsvRow> rows;
  for (const auto& p : results) {
    CsvRow r;
    r.experiment = p.config.name;
    r.sweep_param = p.sweep_param.value_or("");
    r.sweep_value = p.sweep_value;
    r.scheme = p.config.scheme.label();
    r.n_t = p.config.channel.n_t;
    r.n_r = p.config.channel.n_r;
    r.k = p.config.k;
    r.m = p.config.m;
    r.rho_db = p.config.rho_db;
    r.trials = p.config.trials;
    r.mean_rate = p.summary.rate.mean;
    r.std_err = p.summary.rate.std_error;
    r.analytic_rate = p.summary.analytic_rate;
    r.mean_gap = p.summary.gap.mean;
    r.inactive_fraction = p.summary.inactive_fraction.mean;
    r.excluded = p.summary.excluded_count;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string format_csv(const std::vector<CsvRow>& rows) {
  std::ostringstream out;
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << "\n";
  for (const auto& r : rows) {
    out << r.experiment << ',' << r.sweep_param << ','
        << (r.sweep_value ? format_number(*r.sweep_value) : "") << ',' << r.scheme << ',' << r.n_t
        << ',' << r.n_r << ',' << r.k << ',' << r.m << ',' << format_number(r.rho_db) << ','
        << r.trials << ',' << format_number(r.mean_rate) << ',' << format_number(r.std_err) << ','
        << (r.analytic_rate ? format_number(*r.analytic_rate) : "") << ','
        << format_number(r.mean_gap) << ',' << format_number(r.inactive_fraction) << ','
        << r.excluded << "\n";
  }
  return out.str();
}

void write_text(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) fail(ErrorKind::Io, "failed writing '" + path + "'");
}

void write_csv(const std::vector<CsvRow>& rows, const std::string& path) {
  write_text(format_csv(rows), path);
}

std::string format_trials_csv(const PointResult& point) {
  std::ostringstream out;
  out << "trial_index,capacity_bits,rate_bits,gap_bits,inactive_fraction,gamma_t,degenerate\n";
  for (const auto& t : point.trials) {
    out << t.trial_index << ',' << format_number(t.capacity_bits) << ','
        << format_number(t.rate_bits) << ',' << format_number(t.gap_bits) << ','
        << format_number(t.inactive_fraction) << ',' << format_number(t.gamma_t) << ','
        << (t.degenerate ? 1 : 0) << "\n";
  }
  return out.str();
}

}  // namespace beamsim
