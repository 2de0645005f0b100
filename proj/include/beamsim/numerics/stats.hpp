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

#include <functional>
#include <span>

namespace beamsim {

// Sup-norm distance between the empirical CDF of samples and cdf.
// Throws EmptyInput on an empty sample.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

double mean(std::span<const double> x);
// Sample standard deviation divided by sqrt(n); zero for fewer than two values.
double std_error(std::span<const double> x);
double lag1_autocorrelation(std::span<const double> x);

}  // namespace beamsim
