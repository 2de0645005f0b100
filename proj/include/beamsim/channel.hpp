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
#include <vector>

#include "beamsim/numerics/complex_matrix.hpp"
#include "beamsim/numerics/rng.hpp"
#include "beamsim/numerics/svd.hpp"

namespace beamsim {

enum class ChannelKind { Rayleigh, Geometric };

struct ChannelModel {
  ChannelKind kind = ChannelKind::Rayleigh;
  std::size_t n_t = 1;
  std::size_t n_r = 1;
  std::size_t l_paths = 1;  // Geometric only
  double spacing_over_wavelength = 0.5;

  // Throws Domain on invalid sizes.
  void validate() const;
};

struct Path {
  cplx beta;
  double phi_t;  // radians in [0, pi]
  double phi_r;
};

struct ChannelRealization {
  ComplexMatrix h;  // n_r x n_t
  ChannelModel model;
  std::vector<Path> paths;  // Geometric only, descending |beta|
};

// Unit-norm uniform linear array response toward phi.
std::vector<cplx> steering_vector(double phi, std::size_t n, double spacing_over_wavelength = 0.5);

ChannelRealization draw_channel(const ChannelModel& model, SeededRng& rng);

// Assembles the multipath matrix from explicit paths (sorted on the way in).
ChannelRealization make_geometric_channel(const ChannelModel& model, std::vector<Path> paths);

// Leading k singular triplets of the channel. Throws Rank when sigma_k does
// not exceed 1e-9 sigma_1.
SvdResult channel_svd(const ChannelRealization& chan, std::size_t k);

}  // namespace beamsim
