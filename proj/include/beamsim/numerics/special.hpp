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

namespace beamsim {

// Error function. Odd symmetry is exact and the result lies in [-1, 1].
double erf(double x);

// CDF of a normal distribution with the given mean and standard deviation.
double normal_cdf(double x, double mean, double stddev);

// CDF of a Rayleigh distribution with scale sigma.
double rayleigh_cdf(double x, double sigma);

}  // namespace beamsim
