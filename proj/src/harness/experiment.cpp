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

#include "beamsim/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "beamsim/analytic.hpp"
#include "beamsim/channel.hpp"
#include "beamsim/error.hpp"
#include "beamsim/numerics/stats.hpp"
#include "beamsim/rate.hpp"

namespace beamsim {

namespace {

bool is_degenerate_kind(ErrorKind kind) {
  return kind == ErrorKind::Rank || kind == ErrorKind::Singularity ||
         kind == ErrorKind::DegenerateColumn;
}

HybridBeamformer build_p2p(const ExperimentConfig& c, const ChannelRealization& chan,
                           const SvdResult& svd, double rho) {
  switch (c.scheme.kind) {
    case SchemeKind::Digital: return digital_svd_beamformer(chan, svd, c.k, rho);
    case SchemeKind::Lemma2: return hybrid_lemma2(chan, svd, c.k, rho);
    case SchemeKind::DoubleRf: return hybrid_double_rf(chan, svd, c.k, rho);
    case SchemeKind::Mixed: return hybrid_mixed(chan, svd, c.k, c.m, rho);
    case SchemeKind::Selection:
      return select_phase_shifters(chan, svd, c.k, rho, SelectionPolicy{c.scheme.beta_percent});
    default: break;
  }
  fail(ErrorKind::Config, "scheme " + c.scheme.label() + " is not point-to-point");
}

Moments moments(const std::vector<double>& x) {
  return {mean(x), std_error(x)};
}

}  // namespace

TrialRecord run_trial(const ExperimentConfig& c, std::size_t trial_index, const RunOptions& options) {
  TrialRecord rec;
  rec.trial_index = trial_index;
  rec.reference_rate_bits = std::numeric_limits<double>::quiet_NaN();
  const double rho = from_db(c.rho_db);
  SeededRng rng(c.master_seed, trial_index);
  const ChannelRealization chan = draw_channel(c.channel, rng);
  try {
    if (c.scheme.multiuser()) {
      const HybridBeamformer zf = mu_zf_digital(chan, c.k, rho);
      rec.capacity_bits = sum_rate_mu(chan, zf, rho).rate_bits;
      if (c.scheme.kind == SchemeKind::MuZfDigital) {
        rec.rate_bits = rec.capacity_bits;
        rec.gamma_t = zf.gamma_t;
      } else {
        const HybridBeamformer bf = mu_zf_hybrid(chan, c.k, rho);
        rec.rate_bits = sum_rate_mu(chan, bf, rho).rate_bits;
        rec.gamma_t = bf.gamma_t;
      }
    } else {
      const SvdResult svd = channel_svd(chan, c.k);
      rec.capacity_bits = capacity_from_sigma(svd.sigma, rho).rate_bits;
      HybridBeamformer bf;
      if (c.scheme.kind == SchemeKind::Quantized) {
        const HybridBeamformer analog = hybrid_lemma2(chan, svd, c.k, rho);
        rec.reference_rate_bits = achievable_rate(chan, analog, rho).rate_bits;
        bf = quantize_rf(chan, analog, PhaseResolution::digital(c.scheme.bits), rho,
                         options.quantization_metric);
      } else {
        bf = build_p2p(c, chan, svd, rho);
      }
      rec.rate_bits = achievable_rate(chan, bf, rho).rate_bits;
      rec.gamma_t = bf.gamma_t;
      rec.inactive_fraction = bf.inactive_fraction();
    }
    rec.gap_bits = rec.capacity_bits - rec.rate_bits;
  } catch (const Error& e) {
    if (!is_degenerate_kind(e.kind())) throw;
    rec.degenerate = true;
    rec.degenerate_reason = e.what();
    rec.capacity_bits = rec.rate_bits = rec.gap_bits = 0.0;
  }
  return rec;
}

std::optional<double> analytic_gap(const ExperimentConfig& c) {
  const bool rayleigh = c.channel.kind == ChannelKind::Rayleigh;
  switch (c.scheme.kind) {
    case SchemeKind::Digital:
    case SchemeKind::DoubleRf:
    case SchemeKind::MuZfDigital: return 0.0;
    case SchemeKind::Lemma2: return rayleigh ? gap_lemma3(c.k) : 0.0;
    case SchemeKind::Mixed: return rayleigh ? gap_general(c.k, c.m) : 0.0;
    case SchemeKind::Quantized:
      return (rayleigh ? gap_lemma3(c.k) : 0.0) + quant_gap_bound(c.k, c.scheme.bits);
    case SchemeKind::Selection:
      if (!rayleigh) return std::nullopt;
      return gap_selection(c.k, c.scheme.beta_percent);
    case SchemeKind::MuZfHybrid: return gap_multiuser(c.k);
  }
  return std::nullopt;
}

SummaryStats summarize(const ExperimentConfig& c, const std::vector<TrialRecord>& trials) {
  std::vector<double> cap, rate, gap, inactive, gamma;
  SummaryStats s;
  for (const auto& t : trials) {
    if (t.degenerate) {
      ++s.excluded_count;
      continue;
    }
    cap.push_back(t.capacity_bits);
    rate.push_back(t.rate_bits);
    gap.push_back(t.gap_bits);
    inactive.push_back(t.inactive_fraction);
    gamma.push_back(t.gamma_t);
  }
  s.trial_count = rate.size();
  s.capacity = moments(cap);
  s.rate = moments(rate);
  s.gap = moments(gap);
  s.inactive_fraction = moments(inactive);
  s.gamma_t = moments(gamma);
  s.analytic_gap = analytic_gap(c);
  if (s.analytic_gap && s.trial_count > 0) s.analytic_rate = predicted_rate(s.capacity.mean, *s.analytic_gap);
  return s;
}

std::vector<PointResult> run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  config.validate();
  std::vector<PointResult> results;
  std::vector<std::pair<std::optional<std::string>, std::optional<double>>> points;
  if (config.sweep) {
    for (double v : config.sweep->values) points.emplace_back(config.sweep->param, v);
  } else {
    points.emplace_back(std::nullopt, std::nullopt);
  }

  std::size_t workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  for (const auto& [param, value] : points) {
    PointResult pr;
    pr.config = param ? apply_param(config, *param, *value) : config;
    pr.config.sweep.reset();
    pr.sweep_param = param;
    pr.sweep_value = value;
    pr.trials.resize(pr.config.trials);

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= pr.trials.size()) return;
        try {
          pr.trials[i] = run_trial(pr.config, i, options);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          next.store(pr.trials.size());
          return;
        }
      }
    };
    const std::size_t n_threads = std::min(workers, pr.trials.size());
    if (n_threads <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    pr.summary = summarize(pr.config, pr.trials);
    results.push_back(std::move(pr));
  }
  return results;
}

}  // namespace beamsim
