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
#include <vector>

#include "beamsim/numerics/complex_matrix.hpp"

namespace beamsim {

struct SvdResult {
  ComplexMatrix u;             // rows x m
  std::vector<double> sigma;   // descending
  ComplexMatrix v;             // cols x m
};

enum class SvdMethod {
  Auto,     // Lanczos front end for large matrices with few requested triplets
  Jacobi,   // one-sided Jacobi on the full matrix
  Lanczos,  // Golub-Kahan-Lanczos with full reorthogonalization
};

/// Leading m singular triplets of a, sorted by descending singular value.
///
/// Each column of v is rotated so that its largest-magnitude entry is real and
/// nonnegative, and the matching column of u carries the same phase. Throws
/// Dimension if m is out of range and Convergence if the sweep cap is hit.
SvdResult thin_svd(const ComplexMatrix& a, std::size_t m, SvdMethod method = SvdMethod::Auto);

// Ratio of extreme singular values; infinity when the smallest is zero.
double condition_number(const ComplexMatrix& a);

}  // namespace beamsim
