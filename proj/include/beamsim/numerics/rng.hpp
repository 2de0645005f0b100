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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "beamsim/numerics/complex_matrix.hpp"

namespace beamsim {

/// Counter-based generator (Philox4x32-10) keyed by the master seed, with the
/// stream id in the upper counter words. Sequences depend only on
/// (master_seed, stream_id) and are identical on every platform.
class SeededRng {
 public:
  SeededRng(std::uint64_t master_seed, std::uint64_t stream_id)
      : seed_(master_seed), stream_(stream_id) {}

  std::uint64_t master_seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_; }

  // Fresh generator on another stream of the same seed.
  SeededRng with_stream(std::uint64_t stream_id) const { return {seed_, stream_id}; }

  std::uint64_t next_u64();
  // Uniform on (0, 1].
  double uniform();
  double uniform(double lo, double hi);
  // CN(0, 1): independent real and imaginary parts with variance 1/2.
  cplx complex_gaussian();

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  std::size_t buffered_ = 0;
};

std::vector<cplx> sample_complex_gaussian(SeededRng& rng, std::size_t n);

}  // namespace beamsim
