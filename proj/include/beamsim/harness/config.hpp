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

#include "beamsim/channel.hpp"

namespace beamsim {

enum class SchemeKind {
  Digital,
  Lemma2,
  DoubleRf,
  Mixed,
  Quantized,
  Selection,
  MuZfHybrid,
  MuZfDigital,
};

struct Scheme {
  SchemeKind kind = SchemeKind::Lemma2;
  unsigned bits = 0;          // Quantized
  double beta_percent = 0.0;  // Selection

  bool multiuser() const noexcept {
    return kind == SchemeKind::MuZfHybrid || kind == SchemeKind::MuZfDigital;
  }
  // Stable identifier used in configs and CSV output, e.g. "quantized:3".
  std::string label() const;
};

std::string to_string(SchemeKind kind);
SchemeKind scheme_kind_from_string(const std::string& name);

struct SweepAxis {
  std::string param;
  std::vector<double> values;
};

struct ExperimentConfig {
  std::string name = "experiment";
  ChannelModel channel;
  std::size_t k = 4;
  std::size_t m = 4;
  double rho_db = 34.0;
  Scheme scheme;
  std::size_t trials = 500;
  std::uint64_t master_seed = 1;
  std::optional<SweepAxis> sweep;

  // Throws Config naming the offending field.
  void validate() const;
};

// Names accepted by apply_param and by sweep.param.
const std::vector<std::string>& sweep_parameters();

// Copy of config with one parameter overridden. "n" sets n_t and, for
// point-to-point schemes, n_r as well. Throws Config on an unknown name or an
// out-of-domain value.
ExperimentConfig apply_param(const ExperimentConfig& config, const std::string& param, double value);

// JSON text with sections mirroring the field names. Unknown keys are errors.
ExperimentConfig parse_config_text(const std::string& text, const std::string& source = "<string>");
ExperimentConfig parse_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& config);

}  // namespace beamsim
