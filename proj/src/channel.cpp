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

#include "beamsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "beamsim/error.hpp"

namespace beamsim {

void ChannelModel::validate() const {
  if (n_t < 1 || n_r < 1) fail(ErrorKind::Domain, "channel: n_t and n_r must be at least 1");
  if (!(spacing_over_wavelength > 0.0) || !std::isfinite(spacing_over_wavelength)) {
    fail(ErrorKind::Domain, "channel: spacing_over_wavelength must be positive");
  }
  if (kind == ChannelKind::Geometric && (l_paths < 1 || l_paths > std::min(n_t, n_r))) {
    fail(ErrorKind::Domain, "channel: l_paths must lie in [1, min(n_t, n_r)], got " +
                                std::to_string(l_paths));
  }
}

std::vector<cplx> steering_vector(double phi, std::size_t n, double spacing_over_wavelength) {
  if (!(phi >= 0.0 && phi <= std::numbers::pi)) {
    fail(ErrorKind::Domain, "steering_vector: phi must lie in [0, pi]");
  }
  if (n < 1) fail(ErrorKind::Domain, "steering_vector: n must be at least 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const double step = 2.0 * std::numbers::pi * spacing_over_wavelength * std::cos(phi);
  std::vector<cplx> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = scale * std::polar(1.0, step * static_cast<double>(i));
  return a;
}

ChannelRealization make_geometric_channel(const ChannelModel& model, std::vector<Path> paths) {
  model.validate();
  if (paths.size() != model.l_paths) {
    fail(ErrorKind::Dimension, "make_geometric_channel: expected " + std::to_string(model.l_paths) +
                                   " paths, got " + std::to_string(paths.size()));
  }
  std::stable_sort(paths.begin(), paths.end(),
                   [](const Path& a, const Path& b) { return std::abs(a.beta) > std::abs(b.beta); });
  ChannelRealization out;
  out.model = model;
  out.h = ComplexMatrix(model.n_r, model.n_t);
  const double gain = std::sqrt(static_cast<double>(model.n_t * model.n_r) /
                                static_cast<double>(model.l_paths));
  for (const auto& p : paths) {
    const auto ar = steering_vector(p.phi_r, model.n_r, model.spacing_over_wavelength);
    const auto at = steering_vector(p.phi_t, model.n_t, model.spacing_over_wavelength);
    for (std::size_t r = 0; r < model.n_r; ++r) {
      const cplx left = gain * p.beta * ar[r];
      for (std::size_t c = 0; c < model.n_t; ++c) out.h(r, c) += left * std::conj(at[c]);
    }
  }
  out.paths = std::move(paths);
  return out;
}

ChannelRealization draw_channel(const ChannelModel& model, SeededRng& rng) {
  model.validate();
  if (model.kind == ChannelKind::Rayleigh) {
    ChannelRealization out;
    out.model = model;
    out.h = ComplexMatrix(model.n_r, model.n_t, sample_complex_gaussian(rng, model.n_r * model.n_t));
    return out;
  }
  std::vector<Path> paths(model.l_paths);
  for (auto& p : paths) {
    p.beta = rng.complex_gaussian();
    p.phi_t = rng.uniform(0.0, std::numbers::pi);
    p.phi_r = rng.uniform(0.0, std::numbers::pi);
  }
  return make_geometric_channel(model, std::move(paths));
}

SvdResult channel_svd(const ChannelRealization& chan, std::size_t k) {
  SvdResult s = thin_svd(chan.h, k);
  if (!(s.sigma[k - 1] > 1e-9 * s.sigma[0])) {
    fail(ErrorKind::Rank, "channel has effective rank below k = " + std::to_string(k));
  }
  return s;
}

}  // namespace beamsim
