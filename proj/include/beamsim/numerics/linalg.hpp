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

#include <vector>

#include "beamsim/numerics/complex_matrix.hpp"

namespace beamsim {

// Inverse by LU with partial pivoting. Throws Singularity when a pivot
// vanishes relative to the matrix scale.
ComplexMatrix inverse(const ComplexMatrix& a);

// Lower-triangular L with a = L L^H. Throws Singularity if a is not
// numerically positive definite.
ComplexMatrix cholesky(const ComplexMatrix& a);

// Solves L X = B for lower-triangular L.
ComplexMatrix forward_substitute(const ComplexMatrix& lower, const ComplexMatrix& b);

// (a + a^H) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& a);

struct HermitianEigen {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // columns paired with values
};

/// Cyclic two-sided complex Jacobi on a Hermitian matrix. Only the Hermitian
/// part of the input is used.
HermitianEigen hermitian_eigen(const ComplexMatrix& a);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

// Ratio of extreme eigenvalue magnitudes of a Hermitian matrix; infinity when
// the smallest is zero.
double hermitian_condition_number(const ComplexMatrix& a);

// Appends orthonormal columns to `basis` (rows x k, orthonormal columns) until
// it has `target_cols` columns. Candidates are the canonical basis vectors.
ComplexMatrix complete_orthonormal_basis(const ComplexMatrix& basis, std::size_t target_cols);

}  // namespace beamsim
