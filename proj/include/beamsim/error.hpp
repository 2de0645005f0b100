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

#include <stdexcept>
#include <string>
#include <string_view>

namespace beamsim {

enum class ErrorKind {
  Dimension,
  Convergence,
  Domain,
  Rank,
  Singularity,
  DegenerateColumn,
  Shape,
  EmptyInput,
  Config,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a classified failure. Operations throw this for every
/// documented error path; callers switch on kind() rather than parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace beamsim
