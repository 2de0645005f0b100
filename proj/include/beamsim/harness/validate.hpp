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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace beamsim {

struct ValidationCheck {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::uint64_t seed = 0;
  bool strict = false;
  std::vector<ValidationCheck> checks;

  bool passed() const;
  std::size_t failures() const;
  std::string to_json() const;
};

struct ValidateOptions {
  bool strict = false;  // adds the larger Monte-Carlo checks
  std::uint64_t seed = 2026;
  // "quantization-absolute" rounds phases without wrapping, which must trip
  // the quantization bound check.
  std::optional<std::string> inject_fault;
};

ValidationReport validate(const ValidateOptions& options = {});

}  // namespace beamsim
