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

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "support.hpp"

#include "beamsim/error.hpp"
#include "beamsim/numerics/linalg.hpp"
#include "beamsim/numerics/rng.hpp"
#include "beamsim/numerics/special.hpp"
#include "beamsim/numerics/stats.hpp"
#include "beamsim/numerics/svd.hpp"

using namespace beamsim;
using testsupport::random_matrix;

namespace {

ComplexMatrix reconstruct(const SvdResult& s) {
  ComplexMatrix us = s.u;
  for (std::size_t r = 0; r < us.rows(); ++r)
    for (std::size_t c = 0; c < us.cols(); ++c) us(r, c) *= s.sigma[c];
  return us * s.v.adjoint();
}

double erf_series(double x) {
  double term = x, sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x * x / n;
    sum += term / (2 * n + 1);
  }
  return 2.0 / std::sqrt(std::numbers::pi) * sum;
}

}  // namespace

TEST_CASE("matrix products and adjoint") {
  const ComplexMatrix a(2, 2, {cplx{1, 1}, 2.0, 0.0, cplx{0, -1}});
  const ComplexMatrix b = a * ComplexMatrix::identity(2);
  CHECK(b == a);
  const ComplexMatrix ah = a.adjoint();
  CHECK(ah(0, 0) == cplx{1, -1});
  CHECK(ah(0, 1) == 0.0);
  CHECK(ah(1, 0) == 2.0);
  CHECK(max_abs_difference(adjoint_times(a, a), ah * a) < 1e-15);
  CHECK_THROWS_AS(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), Error);
}

TEST_CASE("inverse and cholesky") {
  const ComplexMatrix a = random_matrix(6, 6, 4);
  CHECK(max_abs_difference(a * inverse(a), ComplexMatrix::identity(6)) < 1e-12);
  const ComplexMatrix g = adjoint_times(a, a) + ComplexMatrix::identity(6);
  const ComplexMatrix l = cholesky(g);
  CHECK(max_abs_difference(l * l.adjoint(), g) < 1e-12);
  CHECK(l(0, 1) == 0.0);
  CHECK_THROWS_AS(inverse(ComplexMatrix(3, 3)), Error);
}

TEST_CASE("hermitian eigen agrees with the real-embedding oracle") {
  const ComplexMatrix a = random_matrix(7, 5, 11);
  const auto ev = hermitian_eigenvalues(adjoint_times(a, a));
  const auto sv = testsupport::oracle_singular_values(a);
  REQUIRE(ev.size() == sv.size());
  for (std::size_t i = 0; i < ev.size(); ++i) CHECK(ev[i] == doctest::Approx(sv[i] * sv[i]).epsilon(1e-9));
  const auto full = hermitian_eigen(adjoint_times(a, a));
  CHECK(testsupport::max_unitarity_error(full.vectors) < 1e-12);
}

TEST_CASE("svd of identity and diagonal") {
  const auto s = thin_svd(ComplexMatrix::identity(3), 2);
  CHECK(s.sigma == std::vector<double>{1.0, 1.0});
  CHECK(testsupport::max_unitarity_error(s.u) < 1e-14);
  const std::vector<double> d{3.0, 2.0, 1.0};
  const auto sd = thin_svd(ComplexMatrix::diagonal(std::span<const double>(d)), 3);
  for (int i = 0; i < 3; ++i) CHECK(sd.sigma[i] == doctest::Approx(d[i]).epsilon(1e-14));
}

TEST_CASE("svd matches the independent oracle") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ComplexMatrix a = random_matrix(8, 6, seed);
    const auto s = thin_svd(a, 6);
    const auto oracle = testsupport::oracle_singular_values(a);
    for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(s.sigma[i] - oracle[i]) <= 1e-8 * oracle[i]);
    CHECK(max_abs_difference(reconstruct(s), a) < 1e-12);
    CHECK(testsupport::max_unitarity_error(s.u) < 1e-12);
    CHECK(testsupport::max_unitarity_error(s.v) < 1e-12);
  }
}

TEST_CASE("svd handles wide and rank-deficient input") {
  const ComplexMatrix a = random_matrix(4, 9, 5);
  const auto s = thin_svd(a, 4);
  CHECK(s.u.rows() == 4);
  CHECK(s.v.rows() == 9);
  CHECK(max_abs_difference(reconstruct(s), a) < 1e-12);

  ComplexMatrix r(5, 5);
  const auto x = random_matrix(5, 1, 8);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) r(i, j) = x(i, 0) * std::conj(x(j, 0));
  const auto sr = thin_svd(r, 3);
  CHECK(sr.sigma[1] <= 1e-12 * sr.sigma[0]);
  CHECK(testsupport::max_unitarity_error(sr.u) < 1e-12);
}

TEST_CASE("lanczos and jacobi paths agree") {
  const ComplexMatrix a = random_matrix(160, 160, 21);
  const auto j = thin_svd(a, 4, SvdMethod::Jacobi);
  const auto l = thin_svd(a, 4, SvdMethod::Lanczos);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(j.sigma[i] - l.sigma[i]) < 1e-9 * j.sigma[0]);
  // Same gauge convention, so the vectors coincide too.
  CHECK(max_abs_difference(j.v, l.v) < 1e-8);
  CHECK(testsupport::max_unitarity_error(l.u) < 1e-10);
}

TEST_CASE("svd rejects bad input") {
  CHECK_THROWS_AS(thin_svd(ComplexMatrix(3, 3), 4), Error);
  ComplexMatrix bad = ComplexMatrix::identity(2);
  bad(0, 1) = std::nan("");
  CHECK_THROWS_AS(thin_svd(bad, 1), Error);
}

TEST_CASE("erf against the Maclaurin series") {
  CHECK(beamsim::erf(0.0) == 0.0);
  CHECK(beamsim::erf(1.0) == doctest::Approx(0.8427008).epsilon(1e-7));
  for (double x = -3.0; x <= 3.0; x += 0.125) CHECK(std::abs(beamsim::erf(x) - erf_series(x)) < 1e-12);
  CHECK(std::abs(beamsim::erf(6.0) - 1.0) <= 1e-7);
  CHECK(beamsim::erf(-2.5) == -beamsim::erf(2.5));
  CHECK(normal_cdf(0.0, 0.0, 1.0) == 0.5);
  CHECK(rayleigh_cdf(0.0, 1.0) == 0.0);
}

TEST_CASE("complex gaussian sampler") {
  SeededRng rng(42, 0);
  const auto z = sample_complex_gaussian(rng, 100000);
  double power = 0.0;
  std::vector<double> re;
  for (auto v : z) {
    power += std::norm(v);
    re.push_back(v.real());
  }
  CHECK(power / z.size() >= 0.99);
  CHECK(power / z.size() <= 1.01);
  const double sd = std::sqrt(0.5);
  CHECK(ks_statistic(re, [&](double x) { return normal_cdf(x, 0.0, sd); }) <= 0.01);

  SeededRng a(42, 0), b(42, 0), c(42, 1);
  const auto za = sample_complex_gaussian(a, 16);
  CHECK(za == sample_complex_gaussian(b, 16));
  CHECK(za != sample_complex_gaussian(c, 16));
  CHECK_THROWS_AS(sample_complex_gaussian(a, 0), Error);
}

TEST_CASE("ks statistic edge cases") {
  const std::size_t n = 99;
  std::vector<double> q;
  for (std::size_t k = 1; k <= n; ++k) q.push_back(static_cast<double>(k) / (n + 1));
  CHECK(ks_statistic(q, [](double x) { return x; }) <= 1.0 / (n + 1) + 1.0 / n);
  const std::vector<double> zeros(50, 0.0);
  CHECK(ks_statistic(zeros, [](double x) { return rayleigh_cdf(x, 1.0); }) == doctest::Approx(1.0));

  SeededRng rng(3, 0);
  std::vector<double> mags;
  for (int i = 0; i < 10000; ++i) mags.push_back(std::abs(rng.complex_gaussian()));
  CHECK(ks_statistic(mags, [](double x) { return rayleigh_cdf(x, std::sqrt(0.5)); }) <= 0.02);
}

TEST_CASE("moments") {
  const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
  CHECK(mean(x) == 2.5);
  CHECK(std_error(x) == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
}

TEST_CASE("lanczos on a low-rank matrix") {
  // Rank 5: the recursion hits an invariant subspace after five steps.
  const ComplexMatrix x = random_matrix(200, 5, 31);
  const ComplexMatrix y = random_matrix(5, 180, 32);
  const ComplexMatrix a = x * y;
  const auto j = thin_svd(a, 4, SvdMethod::Jacobi);
  const auto l = thin_svd(a, 4, SvdMethod::Lanczos);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(j.sigma[i] - l.sigma[i]) < 1e-10 * j.sigma[0]);
  CHECK(max_abs_difference(j.v, l.v) < 1e-8);
  CHECK(testsupport::max_unitarity_error(l.u) < 1e-10);
  CHECK(testsupport::max_unitarity_error(l.v) < 1e-10);
}
