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

#include "beamsim/harness/presets.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "beamsim/channel.hpp"
#include "beamsim/error.hpp"
#include "beamsim/harness/csv.hpp"
#include "beamsim/numerics/special.hpp"
#include "beamsim/numerics/stats.hpp"

namespace beamsim {

namespace {

const std::vector<double> kAntennaCounts = {8, 16, 32, 64, 128, 256, 512};
const std::vector<double> kSnrGrid = {0, 10, 20, 30, 34, 40};
const double kRayleighScale = 1.0 / std::sqrt(2.0);

ExperimentConfig base(const std::string& id, std::size_t trials, std::uint64_t seed) {
  ExperimentConfig c;
  c.name = id;
  c.channel.kind = ChannelKind::Rayleigh;
  c.channel.n_t = 64;
  c.channel.n_r = 64;
  c.k = 4;
  c.m = 4;
  c.rho_db = 34.0;
  c.trials = trials;
  c.master_seed = seed;
  return c;
}

std::vector<ExperimentConfig> antenna_sweep(const std::string& id, ChannelKind kind,
                                            std::size_t trials, std::uint64_t seed) {
  std::vector<ExperimentConfig> out;
  for (double n : kAntennaCounts) {
    ExperimentConfig c = base(id, trials, seed);
    c.channel.kind = kind;
    if (kind == ChannelKind::Geometric) c.channel.l_paths = 5;
    c.scheme.kind = SchemeKind::Lemma2;
    c.sweep = SweepAxis{"n", {n}};
    out.push_back(c);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"fig2", "fig3", "fig4", "fig7",
                                               "fig8", "fig9", "fig10"};
  return ids;
}

std::vector<ExperimentConfig> figure_preset(const std::string& id, std::size_t trials,
                                            std::uint64_t seed) {
  std::vector<ExperimentConfig> out;
  if (id == "fig2") {
    for (std::size_t n : {16u, 64u}) {
      ExperimentConfig c = base(id, trials, seed);
      c.channel.n_t = c.channel.n_r = n;
      c.scheme.kind = SchemeKind::Digital;
      out.push_back(c);
    }
  } else if (id == "fig3") {
    out = antenna_sweep(id, ChannelKind::Rayleigh, trials, seed);
  } else if (id == "fig4") {
    out = antenna_sweep(id, ChannelKind::Geometric, trials, seed);
  } else if (id == "fig7") {
    ExperimentConfig analog = base(id, trials, seed);
    analog.scheme.kind = SchemeKind::Lemma2;
    analog.sweep = SweepAxis{"rho_db", kSnrGrid};
    out.push_back(analog);
    for (unsigned bits : {1u, 2u, 3u, 4u}) {
      ExperimentConfig c = analog;
      c.scheme = Scheme{SchemeKind::Quantized, bits, 0.0};
      out.push_back(c);
    }
  } else if (id == "fig8") {
    for (SchemeKind kind : {SchemeKind::MuZfDigital, SchemeKind::MuZfHybrid}) {
      ExperimentConfig c = base(id, trials, seed);
      c.channel.n_r = c.k;
      c.scheme.kind = kind;
      c.sweep = SweepAxis{"rho_db", kSnrGrid};
      out.push_back(c);
    }
  } else if (id == "fig9") {
    for (std::size_t n : {16u, 64u}) {
      ExperimentConfig c = base(id, trials, seed);
      c.channel.n_t = c.channel.n_r = n;
      c.scheme = Scheme{SchemeKind::Selection, 0, 0.0};
      c.sweep = SweepAxis{"beta_percent", {0, 10, 20, 25, 30, 40, 50, 60, 70}};
      out.push_back(c);
    }
  } else if (id == "fig10") {
    ExperimentConfig digital = base(id, trials, seed);
    digital.scheme.kind = SchemeKind::Digital;
    digital.sweep = SweepAxis{"rho_db", kSnrGrid};
    ExperimentConfig analog = digital;
    analog.scheme.kind = SchemeKind::Lemma2;
    ExperimentConfig selected = digital;
    selected.scheme = Scheme{SchemeKind::Selection, 0, 25.0};
    out = {digital, analog, selected};
  } else {
    fail(ErrorKind::Config, "unknown figure id '" + id + "'");
  }
  for (const auto& c : out) c.validate();
  return out;
}

DistributionStudy distribution_study(std::size_t n, std::size_t trials, std::uint64_t seed,
                                     std::size_t columns) {
  DistributionStudy study;
  study.n = n;
  ChannelModel model;
  model.n_t = model.n_r = n;
  const std::size_t k = std::min(columns, n);
  const double scale = std::sqrt(static_cast<double>(n));
  for (std::size_t t = 0; t < trials; ++t) {
    SeededRng rng(seed, t);
    const auto chan = draw_channel(model, rng);
    const auto svd = thin_svd(chan.h, k);
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t r = 0; r < n; ++r) study.samples.push_back(scale * std::abs(svd.v(r, c)));
    }
  }
  study.ks_statistic =
      ks_statistic(study.samples, [](double x) { return rayleigh_cdf(x, kRayleighScale); });
  return study;
}

std::string format_distribution_csv(const std::vector<DistributionStudy>& studies, std::size_t bins) {
  std::ostringstream out;
  out << "n,bin_lo,bin_hi,empirical_density,rayleigh_density,ks_statistic\n";
  const double top = 3.0;
  const double width = top / static_cast<double>(bins);
  for (const auto& s : studies) {
    std::vector<std::size_t> counts(bins, 0);
    for (double x : s.samples) {
      const auto b = static_cast<std::size_t>(x / width);
      if (b < bins) ++counts[b];
    }
    for (std::size_t b = 0; b < bins; ++b) {
      const double lo = width * static_cast<double>(b);
      const double hi = lo + width;
      const double empirical =
          static_cast<double>(counts[b]) / (static_cast<double>(s.samples.size()) * width);
      const double reference =
          (rayleigh_cdf(hi, kRayleighScale) - rayleigh_cdf(lo, kRayleighScale)) / width;
      out << s.n << ',' << format_number(lo) << ',' << format_number(hi) << ','
          << format_number(empirical) << ',' << format_number(reference) << ','
          << format_number(s.ks_statistic) << "\n";
    }
  }
  return out.str();
}

}  // namespace beamsim
