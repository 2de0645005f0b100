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

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "beamsim/error.hpp"
#include "beamsim/harness/config.hpp"
#include "beamsim/harness/csv.hpp"
#include "beamsim/harness/experiment.hpp"
#include "beamsim/harness/presets.hpp"
#include "beamsim/harness/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("BEAMSIM_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos) {
    beamsim::fail(beamsim::ErrorKind::Config, "BEAMSIM_SEED must be a nonnegative integer");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    beamsim::fail(beamsim::ErrorKind::Config, "BEAMSIM_SEED is out of range");
  }
}

std::vector<double> parse_values(const std::string& list) {
  std::vector<double> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    const auto rest = item.find_first_not_of(" \t", used);
    if (used == 0 || rest != std::string::npos) {
      beamsim::fail(beamsim::ErrorKind::Config, "--values: '" + item + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.empty()) beamsim::fail(beamsim::ErrorKind::Config, "--values: empty list");
  return out;
}

void emit(const std::vector<beamsim::PointResult>& results, const std::string& out_path) {
  const auto rows = beamsim::csv_rows(results);
  if (out_path.empty() || out_path == "-") {
    std::cout << beamsim::format_csv(rows);
  } else {
    beamsim::write_csv(rows, out_path);
    std::cerr << "wrote " << rows.size() << " rows to " << out_path << "\n";
  }
}

void report_points(const std::vector<beamsim::PointResult>& results) {
  for (const auto& p : results) {
    std::cerr << p.config.name << " " << p.config.scheme.label();
    if (p.sweep_param) std::cerr << " " << *p.sweep_param << "=" << beamsim::format_number(*p.sweep_value);
    std::cerr << ": rate " << beamsim::format_number(p.summary.rate.mean) << " +- "
              << beamsim::format_number(p.summary.rate.std_error) << ", gap "
              << beamsim::format_number(p.summary.gap.mean);
    if (p.summary.excluded_count > 0) std::cerr << ", excluded " << p.summary.excluded_count;
    std::cerr << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"beamsim: hybrid beamforming Monte-Carlo simulator"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t workers = 0;
  app.add_option("--workers", workers, "Worker threads (0 = all cores)");

  std::string config_path;
  std::string out_path;

  auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
  run->add_option("config", config_path, "Config file (JSON)")->required();
  run->add_option("--out", out_path, "CSV output path (default: stdout)");

  std::string sweep_param;
  std::string sweep_values;
  auto* sweep = app.add_subcommand("sweep", "Run a config over one parameter axis");
  sweep->add_option("config", config_path, "Config file (JSON)")->required();
  sweep->add_option("--param", sweep_param, "Parameter name")->required();
  sweep->add_option("--values", sweep_values, "Comma-separated values")->required();
  sweep->add_option("--out", out_path, "CSV output path (default: stdout)");

  std::string figure_id;
  std::size_t figure_trials = 500;
  std::optional<std::uint64_t> seed_flag;
  std::string out_dir = ".";
  auto* figure = app.add_subcommand("figure", "Reproduce a figure preset as CSV");
  figure->add_option("id", figure_id, "Figure id")
      ->required()
      ->check(CLI::IsMember(beamsim::figure_ids()));
  figure->add_option("--trials", figure_trials, "Trials per point")->check(CLI::PositiveNumber);
  figure->add_option("--seed", seed_flag, "Master seed");
  figure->add_option("--out", out_dir, "Output directory");

  bool strict = false;
  std::string json_path;
  std::optional<std::string> fault;
  auto* val = app.add_subcommand("validate", "Run the invariant and property suite");
  val->add_flag("--strict", strict, "Include the large Monte-Carlo checks");
  val->add_option("--seed", seed_flag, "Master seed");
  val->add_option("--json", json_path, "Write the machine-readable report here");
  val->add_option("--inject-fault", fault, "Deliberately break one component")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    const beamsim::RunOptions options{workers, beamsim::PhaseMetric::Circular};
    if (run->parsed() || sweep->parsed()) {
      beamsim::ExperimentConfig cfg = beamsim::parse_config(config_path);
      if (auto s = env_seed()) cfg.master_seed = *s;
      if (sweep->parsed()) {
        cfg.sweep = beamsim::SweepAxis{sweep_param, parse_values(sweep_values)};
        cfg.validate();
      }
      const auto results = beamsim::run_experiment(cfg, options);
      report_points(results);
      emit(results, out_path);
      return kExitOk;
    }
    if (figure->parsed()) {
      const std::uint64_t seed = seed_flag ? *seed_flag : env_seed().value_or(1);
      std::error_code ec;
      std::filesystem::create_directories(out_dir, ec);
      if (ec) beamsim::fail(beamsim::ErrorKind::Io, "cannot create '" + out_dir + "': " + ec.message());
      std::vector<beamsim::PointResult> all;
      for (const auto& cfg : beamsim::figure_preset(figure_id, figure_trials, seed)) {
        auto results = beamsim::run_experiment(cfg, options);
        report_points(results);
        for (auto& r : results) all.push_back(std::move(r));
      }
      const auto dir = std::filesystem::path(out_dir);
      emit(all, (dir / (figure_id + ".csv")).string());
      if (figure_id == "fig2") {
        std::vector<beamsim::DistributionStudy> studies;
        for (std::size_t n : {16u, 64u}) {
          studies.push_back(beamsim::distribution_study(n, figure_trials, seed));
          std::cerr << "N = " << n << ": KS distance " << studies.back().ks_statistic << "\n";
        }
        const auto path = (dir / "fig2_distribution.csv").string();
        beamsim::write_text(beamsim::format_distribution_csv(studies), path);
        std::cerr << "wrote " << path << "\n";
      }
      return kExitOk;
    }
    if (val->parsed()) {
      beamsim::ValidateOptions vo;
      vo.strict = strict;
      vo.seed = seed_flag ? *seed_flag : env_seed().value_or(vo.seed);
      vo.inject_fault = fault;
      const auto report = beamsim::validate(vo);
      for (const auto& c : report.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  measured="
                  << beamsim::format_number(c.measured) << " threshold="
                  << beamsim::format_number(c.threshold);
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
      }
      std::cout << report.checks.size() - report.failures() << "/" << report.checks.size()
                << " checks passed\n";
      if (!json_path.empty()) beamsim::write_text(report.to_json(), json_path);
      return report.passed() ? kExitOk : kExitValidation;
    }
  } catch (const beamsim::Error& e) {
    std::cerr << "beamsim: " << e.what() << "\n";
    switch (e.kind()) {
      case beamsim::ErrorKind::Io: return kExitIo;
      case beamsim::ErrorKind::Config: return kExitConfig;
      default: return kExitValidation;
    }
  } catch (const std::exception& e) {
    std::cerr << "beamsim: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
