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

#include "beamsim/numerics/special.hpp"

#include <algorithm>
#include <cmath>

#include "beamsim/error.hpp"

namespace beamsim {

double erf(double x) {
  if (!std::isfinite(x)) fail(ErrorKind::Domain, "erf: non-finite argument");
  const double y = std::clamp(std::erf(std::abs(x)), 0.0, 1.0);
  return x < 0.0 ? -y : y;
}

double normal_cdf(double x, double mean, double stddev) {
  return 0.5 * (1.0 + erf((x - mean) / (stddev * std::sqrt(2.0))));
}

double rayleigh_cdf(double x, double sigma) {
  if (x <= 0.0) return 0.0;
  return -std::expm1(-x * x / (2.0 * sigma * sigma));
}

}  // namespace beamsim
