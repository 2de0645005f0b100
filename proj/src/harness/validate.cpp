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

#include "beamsim/harness/validate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "json.hpp"

#include "beamsim/analytic.hpp"
#include "beamsim/beamform.hpp"
#include "beamsim/channel.hpp"
#include "beamsim/error.hpp"
#include "beamsim/harness/experiment.hpp"
#include "beamsim/harness/presets.hpp"
#include "beamsim/numerics/linalg.hpp"
#include "beamsim/numerics/special.hpp"
#include "beamsim/numerics/stats.hpp"
#include "beamsim/numerics/svd.hpp"
#include "beamsim/rate.hpp"

namespace beamsim {

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix random_matrix(SeededRng& rng, std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols, sample_complex_gaussian(rng, rows * cols));
}

std::size_t random_size(SeededRng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.next_u64() % (hi - lo + 1));
}

ComplexMatrix reconstruct(const SvdResult& s) {
  ComplexMatrix us = s.u;
  for (std::size_t r = 0; r < us.rows(); ++r) {
    for (std::size_t c = 0; c < us.cols(); ++c) us(r, c) *= s.sigma[c];
  }
  return us * s.v.adjoint();
}

ChannelRealization rayleigh(SeededRng& rng, std::size_t n_r, std::size_t n_t) {
  ChannelModel m;
  m.n_t = n_t;
  m.n_r = n_r;
  return draw_channel(m, rng);
}

class Suite {
 public:
  explicit Suite(ValidationReport& report) : report_(report) {}

  // Passes when measured <= threshold.
  void at_most(const std::string& name, double measured, double threshold,
               const std::string& detail = {}) {
    add(name, measured <= threshold, measured, threshold, detail);
  }
  void at_least(const std::string& name, double measured, double threshold,
                const std::string& detail = {}) {
    add(name, measured >= threshold, measured, threshold, detail);
  }
  void add(const std::string& name, bool passed, double measured, double threshold,
           const std::string& detail) {
    report_.checks.push_back({name, passed && std::isfinite(measured), measured, threshold, detail});
  }
  // Runs body, turning an escaped exception into a failed check.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, std::nan(""), 0.0, std::string("exception: ") + e.what());
    }
  }

 private:
  ValidationReport& report_;
};

void svd_checks(Suite& suite, std::uint64_t seed) {
  SeededRng rng(seed, 101);
  double unitarity = 0.0;
  double recon_full = 0.0;
  double recon_trunc = 0.0;  // residual / bound, must stay <= 1
  double ordering = 0.0;     // count of violations
  for (int i = 0; i < 200; ++i) {
    const std::size_t rows = random_size(rng, 2, 16);
    const std::size_t cols = random_size(rng, 2, 16);
    const ComplexMatrix a = random_matrix(rng, rows, cols);
    const std::size_t n = std::min(rows, cols);
    const SvdResult full = thin_svd(a, n);
    unitarity = std::max({unitarity,
                          max_abs_difference(adjoint_times(full.u, full.u), ComplexMatrix::identity(n)),
                          max_abs_difference(adjoint_times(full.v, full.v), ComplexMatrix::identity(n))});
    recon_full = std::max(recon_full, (a - reconstruct(full)).frobenius_norm() / a.frobenius_norm());
    for (std::size_t j = 0; j < n; ++j) {
      if (full.sigma[j] < 0.0 || (j > 0 && full.sigma[j] > full.sigma[j - 1])) ordering += 1.0;
    }
    if (n > 1) {
      const std::size_t m = random_size(rng, 1, n - 1);
      const SvdResult part = thin_svd(a, m);
      const double bound = full.sigma[m] * (1.0 + 1e-8) * std::sqrt(static_cast<double>(n));
      recon_trunc = std::max(recon_trunc, (a - reconstruct(part)).frobenius_norm() / bound);
    }
  }
  suite.at_most("svd.unitarity", unitarity, 1e-10, "max |X^H X - I| over 200 random shapes");
  suite.at_most("svd.reconstruction_full", recon_full, 1e-8, "relative Frobenius residual");
  suite.at_most("svd.reconstruction_truncated", recon_trunc, 1.0, "residual / (sigma_{m+1} sqrt(min dim))");
  suite.at_most("svd.ordering", ordering, 0.0, "descending, nonnegative singular values");

  double oracle = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t cols = random_size(rng, 2, 12);
    const std::size_t rows = cols + random_size(rng, 2, 4);
    const ComplexMatrix a = random_matrix(rng, rows, cols);
    const SvdResult s = thin_svd(a, cols);
    const auto lambda = hermitian_eigenvalues(adjoint_times(a, a));
    for (std::size_t j = 0; j < cols; ++j) {
      oracle = std::max(oracle, std::abs(std::sqrt(std::max(0.0, lambda[j])) - s.sigma[j]) / s.sigma[j]);
    }
  }
  suite.at_most("svd.oracle_equivalence", oracle, 1e-8,
                "relative deviation from sqrt(eig(A^H A)) over 100 random matrices");
}

void erf_checks(Suite& suite) {
  double series = 0.0;
  double term = 1.0;  // x = 1
  for (int n = 0; n < 40; ++n) {
    if (n > 0) term *= -1.0 / n;
    series += term / (2.0 * n + 1.0);
  }
  series *= 2.0 / std::sqrt(kPi);
  suite.at_most("erf.series_at_1", std::abs(erf(1.0) - series), 1e-7);
  double asym = 0.0;
  double monotone = 0.0;
  double prev = -2.0;
  for (int i = 0; i <= 10000; ++i) {
    const double x = -6.0 + 12.0 * i / 10000.0;
    asym = std::max(asym, std::abs(erf(-x) + erf(x)));
    const double y = erf(x);
    if (y < prev || y < -1.0 || y > 1.0) monotone += 1.0;
    prev = y;
  }
  suite.at_most("erf.odd_symmetry", asym, 0.0);
  suite.at_most("erf.monotone_bounded", monotone, 0.0, "violations on a 10^4-point grid");
  suite.at_most("erf.saturation_at_6", std::abs(1.0 - erf(6.0)), 1e-7);
}

void rng_checks(Suite& suite, std::uint64_t seed) {
  SeededRng rng(seed, 201);
  const auto z = sample_complex_gaussian(rng, 100000);
  std::vector<double> power, re, mag;
  for (const auto& v : z) {
    power.push_back(std::norm(v));
    re.push_back(v.real());
    mag.push_back(std::abs(v));
  }
  suite.at_most("rng.mean_power", std::abs(mean(power) - 1.0), 0.01, "|mean |z|^2 - 1|");
  suite.at_most("rng.ks_real_part",
                ks_statistic(re, [](double x) { return normal_cdf(x, 0.0, std::sqrt(0.5)); }), 0.01);
  suite.at_most("rng.rayleigh_mean_magnitude",
                std::abs(mean(mag) / (std::sqrt(kPi) / 2.0) - 1.0), 0.01);
  SeededRng a(seed, 7);
  SeededRng b(seed, 7);
  suite.at_most("rng.determinism",
                sample_complex_gaussian(a, 64) == sample_complex_gaussian(b, 64) ? 0.0 : 1.0, 0.0);
}

void waterfill_checks(Suite& suite, std::uint64_t seed) {
  SeededRng rng(seed, 301);
  double kkt = 0.0;
  double budget = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = random_size(rng, 1, 8);
    std::vector<double> g(k);
    for (auto& x : g) x = std::pow(10.0, rng.uniform(-2.0, 1.0));
    const double rho = std::pow(10.0, rng.uniform(-1.0, 4.0));
    const auto p = waterfill(g, rho, 1.0);
    double level = 0.0;
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      sum += p[j];
      if (p[j] > 0.0) level = std::max(level, p[j] + 1.0 / (rho * g[j]));
    }
    for (std::size_t j = 0; j < k; ++j) {
      const double floor = 1.0 / (rho * g[j]);
      const double resid = p[j] > 0.0 ? std::abs(p[j] + floor - level) : std::max(0.0, level - floor);
      kkt = std::max(kkt, resid / std::max(1.0, level));
    }
    budget = std::max(budget, std::abs(sum - 1.0));
  }
  suite.at_most("waterfill.kkt_residual", kkt, 1e-9, "1000 random instances");
  suite.at_most("waterfill.budget", budget, 1e-12);
}

void beamform_checks(Suite& suite, std::uint64_t seed) {
  const double rho = from_db(34.0);
  SeededRng rng(seed, 401);

  double phase_opt = 0.0;  // count of candidates beating phase matching
  double frob_opt = 0.0;
  for (int inst = 0; inst < 5; ++inst) {
    const auto chan = rayleigh(rng, 16, 16);
    const auto svd = channel_svd(chan, 4);
    const auto bf = hybrid_lemma2(chan, svd, 4, rho);
    const double n = 16.0;
    for (std::size_t c = 0; c < 4; ++c) {
      const auto v = svd.v.column(c);
      const auto f = bf.f_rf.column(c);
      const double best = std::abs(inner(v, f));
      double best_dist = 0.0;
      for (std::size_t r = 0; r < v.size(); ++r) best_dist += std::norm(f[r] / std::sqrt(n) - v[r]);
      for (int t = 0; t < 1000; ++t) {
        std::vector<cplx> g(v.size());
        for (auto& x : g) x = std::polar(1.0, rng.uniform(0.0, 2.0 * kPi));
        if (std::abs(inner(v, g)) > best + 1e-12) phase_opt += 1.0;
        double dist = 0.0;
        for (std::size_t r = 0; r < v.size(); ++r) dist += std::norm(g[r] / std::sqrt(n) - v[r]);
        if (dist < best_dist - 1e-12) frob_opt += 1.0;
      }
    }
  }
  suite.at_most("beamform.phase_matching_optimality", phase_opt, 0.0,
                "random unit-modulus candidates beating |v^H f| (5 channels x 4 columns x 1000)");
  suite.at_most("beamform.frobenius_objective", frob_opt, 0.0,
                "random candidates closer to v than the phase-matched column");

  double gauge = 0.0;
  double exact_rate = 0.0;
  double exact_fact = 0.0;
  double invariants = 0.0;
  for (int inst = 0; inst < 100; ++inst) {
    const auto chan = rayleigh(rng, 16, 16);
    const auto svd = channel_svd(chan, 2);
    const double cap = capacity_from_sigma(svd.sigma, rho).rate_bits;
    const auto dbl = hybrid_double_rf(chan, svd, 2, rho);
    exact_rate = std::max(exact_rate, std::abs(achievable_rate(chan, dbl, rho).rate_bits - cap));
    exact_fact = std::max(exact_fact, max_abs_difference(dbl.precoder(), svd.v.leading_columns(2)));
    if (inst < 20) {
      SvdResult rotated = svd;
      for (std::size_t c = 0; c < 2; ++c) {
        const cplx ph = std::polar(1.0, rng.uniform(0.0, 2.0 * kPi));
        for (std::size_t r = 0; r < 16; ++r) {
          rotated.v(r, c) *= ph;
          rotated.u(r, c) *= ph;
        }
      }
      const auto l1 = hybrid_lemma2(chan, svd, 2, rho);
      const auto l2 = hybrid_lemma2(chan, rotated, 2, rho);
      const auto d2 = hybrid_double_rf(chan, rotated, 2, rho);
      gauge = std::max({gauge,
                        std::abs(achievable_rate(chan, l1, rho).rate_bits -
                                 achievable_rate(chan, l2, rho).rate_bits),
                        std::abs(achievable_rate(chan, dbl, rho).rate_bits -
                                 achievable_rate(chan, d2, rho).rate_bits)});
      invariants += static_cast<double>(invariant_violations(l1).size() +
                                        invariant_violations(dbl).size());
    }
  }
  suite.at_most("beamform.gauge_invariance", gauge, 1e-9, "bits/s/Hz");
  suite.at_most("beamform.double_rf_rate", exact_rate, 1e-9, "|R - C| over 100 channels");
  suite.at_most("beamform.double_rf_factorization", exact_fact, 1e-10, "max |F_RF F_B - V|");
  suite.at_most("beamform.invariants", invariants, 0.0, "HybridBeamformer invariant violations");
}

void analytic_checks(Suite& suite) {
  double web = 0.0;
  for (std::size_t k = 1; k <= 8; ++k) {
    web = std::max({web, std::abs(gap_general(k, k) - gap_lemma3(k)), std::abs(gap_general(k, 2 * k)),
                    std::abs(gap_selection(k, 0.0) - gap_lemma3(k)),
                    std::abs(2.0 * gap_multiuser(k) - gap_lemma3(k))});
  }
  suite.at_most("analytic.consistency_web", web, 1e-12);
  const PowerModelParams full{111.0, 0.0, 4, 64, 0.0};
  const PowerModelParams half{111.0, 1.0, 4, 64, 50.0};
  suite.at_most("analytic.power_model",
                std::max(std::abs(rf_power_consumption(full) - 28.416),
                         std::abs(rf_power_consumption(half) - 14.464)),
                1e-12, "watts");
}

void quantization_check(Suite& suite, const ValidateOptions& opt, std::size_t trials) {
  RunOptions run;
  if (opt.inject_fault && *opt.inject_fault == "quantization-absolute") {
    run.quantization_metric = PhaseMetric::Absolute;
  }
  for (unsigned bits : {2u, 3u, 4u}) {
    ExperimentConfig c;
    c.name = "validate";
    c.channel.n_t = c.channel.n_r = 64;
    c.k = c.m = 4;
    c.rho_db = 34.0;
    c.scheme = Scheme{SchemeKind::Quantized, bits, 0.0};
    c.trials = trials;
    c.master_seed = opt.seed;
    const auto result = run_experiment(c, run);
    std::vector<double> loss;
    for (const auto& t : result.front().trials) {
      if (!t.degenerate) loss.push_back(t.reference_rate_bits - t.rate_bits);
    }
    suite.at_most("quantization.bound_b" + std::to_string(bits), mean(loss),
                  quant_gap_bound(4, bits) + 0.5, "mean(R_C - R_D) at N = 64");
  }
}

void harness_checks(Suite& suite, std::uint64_t seed) {
  ExperimentConfig c;
  c.channel.n_t = c.channel.n_r = 16;
  c.k = c.m = 2;
  c.trials = 8;
  c.master_seed = seed;
  c.scheme.kind = SchemeKind::Digital;
  const auto a = run_experiment(c, RunOptions{1, PhaseMetric::Circular});
  const auto b = run_experiment(c, RunOptions{3, PhaseMetric::Circular});
  c.scheme.kind = SchemeKind::DoubleRf;
  c.m = 4;
  const auto d = run_experiment(c, RunOptions{2, PhaseMetric::Circular});
  double diff = 0.0;
  for (std::size_t i = 0; i < a[0].trials.size(); ++i) {
    if (a[0].trials[i].rate_bits != b[0].trials[i].rate_bits) diff += 1.0;
  }
  suite.at_most("harness.worker_independence", diff, 0.0, "trials differing between 1 and 3 workers");
  suite.at_most("harness.digital_equals_double_rf",
                std::abs(a[0].summary.rate.mean - d[0].summary.rate.mean), 1e-9);
}

void strict_checks(Suite& suite, std::uint64_t seed) {
  auto run_one = [&](ExperimentConfig c) { return run_experiment(c).front(); };
  ExperimentConfig base;
  base.channel.n_t = base.channel.n_r = 64;
  base.k = base.m = 4;
  base.rho_db = 34.0;
  base.trials = 500;
  base.master_seed = seed;

  ExperimentConfig l2 = base;
  l2.scheme.kind = SchemeKind::Lemma2;
  const auto r0 = run_one(l2);
  suite.at_most("strict.lemma2_gap_n64", std::abs(r0.summary.gap.mean - gap_lemma3(4)), 0.3);
  std::vector<double> rates;
  for (const auto& t : r0.trials) rates.push_back(t.rate_bits);
  // Independent trials: the lag-1 estimate has standard error about 1/sqrt(n).
  suite.at_most("strict.trial_autocorrelation", std::abs(lag1_autocorrelation(rates)),
                5.0 / std::sqrt(static_cast<double>(rates.size())));

  ExperimentConfig sel = base;
  sel.scheme = Scheme{SchemeKind::Selection, 0, 25.0};
  const auto r25 = run_one(sel);
  suite.at_least("strict.selection_beta25_gain", r25.summary.rate.mean - r0.summary.rate.mean,
                 r25.summary.rate.std_error, "mean R(25) - mean R(0) vs one std_error");
  sel.scheme.beta_percent = 50.0;
  const auto r50 = run_one(sel);
  suite.at_most("strict.selection_inactive_beta50", std::abs(r50.summary.inactive_fraction.mean - 0.5),
                0.03);

  ExperimentConfig mu = base;
  mu.channel.n_r = 4;
  mu.scheme.kind = SchemeKind::MuZfHybrid;
  const auto rm = run_one(mu);
  suite.at_most("strict.multiuser_gap", std::abs(rm.summary.gap.mean - 1.4), 0.3);
  mu.scheme.kind = SchemeKind::MuZfDigital;
  const auto rd = run_one(mu);
  suite.at_most("strict.zf_gamma", std::abs(rd.summary.gamma_t.mean * 60.0 - 1.0), 0.1,
                "relative deviation of mean gamma_t from 1/60");

  suite.at_most("strict.distribution_ks_n256", distribution_study(256, 40, seed).ks_statistic, 0.05);

  SeededRng rng(seed, 501);
  double energy = 0.0;
  ChannelModel geo;
  geo.kind = ChannelKind::Geometric;
  geo.n_t = geo.n_r = 64;
  geo.l_paths = 5;
  for (int t = 0; t < 500; ++t) energy += draw_channel(geo, rng).h.squared_norm() / (64.0 * 64.0);
  suite.at_most("strict.geometric_energy", std::abs(energy / 500.0 - 1.0), 0.1);
}

}  // namespace

bool ValidationReport::passed() const { return failures() == 0; }

std::size_t ValidationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::string ValidationReport::to_json() const {
  nlohmann::json doc;
  doc["seed"] = seed;
  doc["strict"] = strict;
  doc["passed"] = passed();
  doc["failures"] = failures();
  auto& arr = doc["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{{"name", c.name}, {"passed", c.passed}, {"threshold", c.threshold}};
    if (std::isfinite(c.measured)) {
      j["measured"] = c.measured;
    } else {
      j["measured"] = nullptr;
    }
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

ValidationReport validate(const ValidateOptions& options) {
  if (options.inject_fault && *options.inject_fault != "quantization-absolute") {
    fail(ErrorKind::Config, "unknown fault '" + *options.inject_fault + "'");
  }
  ValidationReport report;
  report.seed = options.seed;
  report.strict = options.strict;
  Suite suite(report);
  const std::uint64_t seed = options.seed;
  suite.guarded("svd", [&] { svd_checks(suite, seed); });
  suite.guarded("erf", [&] { erf_checks(suite); });
  suite.guarded("rng", [&] { rng_checks(suite, seed); });
  suite.guarded("waterfill", [&] { waterfill_checks(suite, seed); });
  suite.guarded("beamform", [&] { beamform_checks(suite, seed); });
  suite.guarded("analytic", [&] { analytic_checks(suite); });
  suite.guarded("distribution", [&] {
    suite.at_most("distribution.ks_n64", distribution_study(64, 200, seed).ks_statistic, 0.08);
  });
  suite.guarded("quantization", [&] { quantization_check(suite, options, options.strict ? 500 : 100); });
  suite.guarded("harness", [&] { harness_checks(suite, seed); });
  if (options.strict) suite.guarded("strict", [&] { strict_checks(suite, seed); });
  return report;
}

}  // namespace beamsim
