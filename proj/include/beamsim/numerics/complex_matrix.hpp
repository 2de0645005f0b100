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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace beamsim {

using cplx = std::complex<double>;

// Dense complex matrix stored in row-major order.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> row_major);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> row_major);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::span<const cplx> values);
  static ComplexMatrix from_columns(const std::vector<std::vector<cplx>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  std::vector<cplx> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const cplx> values);
  std::vector<cplx> row(std::size_t r) const;

  // Columns [first, first + count).
  ComplexMatrix leading_columns(std::size_t count) const;
  ComplexMatrix column_block(std::size_t first, std::size_t count) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  double frobenius_norm() const;
  double squared_norm() const;
  cplx trace() const;
  bool is_finite() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scale);
  ComplexMatrix& operator*=(double scale);

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, cplx scale);
ComplexMatrix operator*(cplx scale, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, double scale);
ComplexMatrix operator*(double scale, ComplexMatrix a);

// a^H * b without forming the adjoint.
ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<cplx> multiply(const ComplexMatrix& a, std::span<const cplx> x);
std::vector<cplx> adjoint_multiply(const ComplexMatrix& a, std::span<const cplx> x);

// Conjugate-linear in the first argument: sum conj(a_i) * b_i.
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm2(std::span<const cplx> v);

// Largest absolute entrywise difference; matrices must share a shape.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

void require_finite(const ComplexMatrix& m, const char* what);

// Row-major boolean mask marking active phase shifters.
class Mask {
 public:
  Mask() = default;
  Mask(std::size_t rows, std::size_t cols, bool value = true)
      : rows_(rows), cols_(cols), bits_(rows * cols, value ? 1 : 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator()(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool value) { bits_[r * cols_ + c] = value ? 1 : 0; }
  std::size_t count_active() const;
  std::size_t count_active_in_column(std::size_t c) const;

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace beamsim
