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

#include "beamsim/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "beamsim/error.hpp"

namespace beamsim {

namespace {

using nlohmann::json;

struct SchemeName {
  SchemeKind kind;
  const char* name;
};

constexpr SchemeName kSchemeNames[] = {
    {SchemeKind::Digital, "digital"},          {SchemeKind::Lemma2, "lemma2"},
    {SchemeKind::DoubleRf, "double_rf"},       {SchemeKind::Mixed, "mixed"},
    {SchemeKind::Quantized, "quantized"},      {SchemeKind::Selection, "selection"},
    {SchemeKind::MuZfHybrid, "mu_zf_hybrid"},  {SchemeKind::MuZfDigital, "mu_zf_digital"},
};

[[noreturn]] void config_error(const std::string& field, const std::string& message) {
  fail(ErrorKind::Config, "field '" + field + "': " + message);
}

std::size_t default_m(const Scheme& scheme, std::size_t k) {
  if (scheme.kind == SchemeKind::DoubleRf) return 2 * k;
  return k;
}

void validate_point(const ExperimentConfig& c) {
  if (c.trials < 1) config_error("trials", "must be at least 1");
  if (c.k < 1) config_error("k", "must be at least 1");
  if (!std::isfinite(c.rho_db)) config_error("rho_db", "must be finite");
  try {
    c.channel.validate();
  } catch (const Error& e) {
    config_error("channel", e.what());
  }
  if (c.scheme.multiuser()) {
    if (c.channel.kind != ChannelKind::Rayleigh) {
      config_error("channel.kind", "multiuser schemes use the rayleigh model");
    }
    if (c.channel.n_r != c.k) config_error("channel.n_r", "must equal k (one row per user)");
    if (c.k > c.channel.n_t) config_error("k", "must not exceed channel.n_t");
  } else if (c.k > std::min(c.channel.n_t, c.channel.n_r)) {
    config_error("k", "must not exceed min(n_t, n_r)");
  }
  switch (c.scheme.kind) {
    case SchemeKind::Mixed:
      if (c.m < c.k || c.m > 2 * c.k) config_error("m", "mixed scheme needs k <= m <= 2k");
      break;
    case SchemeKind::DoubleRf:
      if (c.m != 2 * c.k) config_error("m", "double_rf uses m = 2k");
      break;
    default:
      if (c.m != c.k) config_error("m", "scheme " + c.scheme.label() + " uses m = k");
  }
  if (c.scheme.kind == SchemeKind::Quantized && (c.scheme.bits < 1 || c.scheme.bits > 16)) {
    config_error("bits", "must lie in [1, 16]");
  }
  if (c.scheme.kind == SchemeKind::Selection &&
      !(c.scheme.beta_percent >= 0.0 && c.scheme.beta_percent < 100.0)) {
    config_error("beta_percent", "must lie in [0, 100)");
  }
}

std::size_t as_count(const std::string& field, double value) {
  if (!(value >= 0.0) || value != std::floor(value) || value > 1e12) {
    config_error(field, "expected a nonnegative integer, got " + std::to_string(value));
  }
  return static_cast<std::size_t>(value);
}

// 1-based line of the first occurrence of "key" in the source text.
std::size_t line_of(const std::string& text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  if (pos == std::string::npos) return 0;
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

class Reader {
 public:
  Reader(const std::string& text, std::string source) : text_(text), source_(std::move(source)) {}

  [[noreturn]] void error(const std::string& field, const std::string& message) const {
    const auto leaf = field.substr(field.rfind('.') == std::string::npos ? 0 : field.rfind('.') + 1);
    const std::size_t line = line_of(text_, leaf);
    std::string where = source_;
    if (line > 0) where += ":" + std::to_string(line);
    fail(ErrorKind::Config, where + ": field '" + field + "': " + message);
  }

  void reject_unknown(const json& obj, const std::string& prefix,
                      std::initializer_list<const char*> allowed) const {
    for (const auto& [key, value] : obj.items()) {
      (void)value;
      const bool ok = std::any_of(allowed.begin(), allowed.end(),
                                  [&key](const char* a) { return key == a; });
      if (!ok) error(prefix + key, "unknown key");
    }
  }

  double number(const json& v, const std::string& field) const {
    if (!v.is_number()) error(field, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) error(field, "expected a finite number");
    return x;
  }

  std::size_t count(const json& v, const std::string& field) const {
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
      error(field, "expected a nonnegative integer");
    }
    if (v.is_number_integer() && v.get<long long>() < 0) error(field, "expected a nonnegative integer");
    return v.get<std::size_t>();
  }

  std::string string(const json& v, const std::string& field) const {
    if (!v.is_string()) error(field, "expected a string");
    return v.get<std::string>();
  }

 private:
  const std::string& text_;
  std::string source_;
};

}  // namespace

std::string to_string(SchemeKind kind) {
  for (const auto& s : kSchemeNames) {
    if (s.kind == kind) return s.name;
  }
  return "unknown";
}

SchemeKind scheme_kind_from_string(const std::string& name) {
  for (const auto& s : kSchemeNames) {
    if (name == s.name) return s.kind;
  }
  fail(ErrorKind::Config, "unknown scheme '" + name + "'");
}

std::string Scheme::label() const {
  std::ostringstream out;
  out << to_string(kind);
  if (kind == SchemeKind::Quantized) out << ":" << bits;
  if (kind == SchemeKind::Selection) out << ":" << beta_percent;
  return out.str();
}

const std::vector<std::string>& sweep_parameters() {
  static const std::vector<std::string> names = {
      "n", "n_t", "n_r", "k", "m", "rho_db", "bits", "beta_percent", "l_paths", "trials",
      "spacing_over_wavelength"};
  return names;
}

void ExperimentConfig::validate() const {
  validate_point(*this);
  if (!sweep) return;
  const auto& names = sweep_parameters();
  if (std::find(names.begin(), names.end(), sweep->param) == names.end()) {
    config_error("sweep.param", "unknown parameter '" + sweep->param + "'");
  }
  if (sweep->values.empty()) config_error("sweep.values", "must not be empty");
  for (double v : sweep->values) (void)apply_param(*this, sweep->param, v);
}

ExperimentConfig apply_param(const ExperimentConfig& config, const std::string& param, double value) {
  ExperimentConfig c = config;
  c.sweep.reset();
  const bool follow_m = c.scheme.kind != SchemeKind::Mixed;
  if (param == "n") {
    c.channel.n_t = as_count(param, value);
    if (!c.scheme.multiuser()) c.channel.n_r = c.channel.n_t;
  } else if (param == "n_t") {
    c.channel.n_t = as_count(param, value);
  } else if (param == "n_r") {
    c.channel.n_r = as_count(param, value);
  } else if (param == "k") {
    c.k = as_count(param, value);
    if (follow_m) c.m = default_m(c.scheme, c.k);
    if (c.scheme.multiuser()) c.channel.n_r = c.k;
  } else if (param == "m") {
    c.m = as_count(param, value);
  } else if (param == "rho_db") {
    c.rho_db = value;
  } else if (param == "bits") {
    c.scheme.bits = static_cast<unsigned>(as_count(param, value));
  } else if (param == "beta_percent") {
    c.scheme.beta_percent = value;
  } else if (param == "l_paths") {
    c.channel.l_paths = as_count(param, value);
  } else if (param == "trials") {
    c.trials = as_count(param, value);
  } else if (param == "spacing_over_wavelength") {
    c.channel.spacing_over_wavelength = value;
  } else {
    config_error("sweep.param", "unknown parameter '" + param + "'");
  }
  try {
    validate_point(c);
  } catch (const Error& e) {
    fail(ErrorKind::Config, "sweep value " + param + " = " + std::to_string(value) + ": " + e.what());
  }
  return c;
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Config, source + ": malformed config: " + e.what());
  }
  const Reader rd(text, source);
  if (!doc.is_object()) rd.error("<root>", "expected an object");
  rd.reject_unknown(doc, "", {"name", "channel", "k", "m", "rho_db", "scheme", "bits",
                              "beta_percent", "trials", "master_seed", "sweep"});

  ExperimentConfig c;
  if (doc.contains("name")) c.name = rd.string(doc["name"], "name");
  if (!doc.contains("scheme")) rd.error("scheme", "missing");
  try {
    c.scheme.kind = scheme_kind_from_string(rd.string(doc["scheme"], "scheme"));
  } catch (const Error&) {
    rd.error("scheme", "unknown scheme '" + doc["scheme"].get<std::string>() + "'");
  }
  if (doc.contains("bits")) c.scheme.bits = static_cast<unsigned>(rd.count(doc["bits"], "bits"));
  if (doc.contains("beta_percent")) c.scheme.beta_percent = rd.number(doc["beta_percent"], "beta_percent");
  if (c.scheme.kind == SchemeKind::Quantized && !doc.contains("bits")) rd.error("bits", "required by quantized");

  if (!doc.contains("channel")) rd.error("channel", "missing");
  const json& ch = doc["channel"];
  if (!ch.is_object()) rd.error("channel", "expected an object");
  rd.reject_unknown(ch, "channel.", {"kind", "n_t", "n_r", "l_paths", "spacing_over_wavelength"});
  if (ch.contains("kind")) {
    const std::string kind = rd.string(ch["kind"], "channel.kind");
    if (kind == "rayleigh") {
      c.channel.kind = ChannelKind::Rayleigh;
    } else if (kind == "geometric") {
      c.channel.kind = ChannelKind::Geometric;
      c.channel.l_paths = 5;
    } else {
      rd.error("channel.kind", "expected 'rayleigh' or 'geometric'");
    }
  }
  if (!ch.contains("n_t")) rd.error("channel.n_t", "missing");
  c.channel.n_t = rd.count(ch["n_t"], "channel.n_t");
  if (doc.contains("k")) c.k = rd.count(doc["k"], "k");
  if (ch.contains("n_r")) {
    c.channel.n_r = rd.count(ch["n_r"], "channel.n_r");
  } else {
    c.channel.n_r = c.scheme.multiuser() ? c.k : c.channel.n_t;
  }
  if (ch.contains("l_paths")) c.channel.l_paths = rd.count(ch["l_paths"], "channel.l_paths");
  if (ch.contains("spacing_over_wavelength")) {
    c.channel.spacing_over_wavelength =
        rd.number(ch["spacing_over_wavelength"], "channel.spacing_over_wavelength");
  }

  c.m = doc.contains("m") ? rd.count(doc["m"], "m") : default_m(c.scheme, c.k);
  if (doc.contains("trials")) c.trials = rd.count(doc["trials"], "trials");
  if (doc.contains("master_seed")) {
    const json& s = doc["master_seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      rd.error("master_seed", "expected a nonnegative 64-bit integer");
    }
    c.master_seed = s.get<std::uint64_t>();
  }

  if (doc.contains("rho_db")) {
    const json& r = doc["rho_db"];
    if (r.is_array()) {
      SweepAxis axis{"rho_db", {}};
      for (std::size_t i = 0; i < r.size(); ++i) {
        axis.values.push_back(rd.number(r[i], "rho_db[" + std::to_string(i) + "]"));
      }
      if (axis.values.empty()) rd.error("rho_db", "sweep list must not be empty");
      c.rho_db = axis.values.front();
      c.sweep = std::move(axis);
    } else {
      c.rho_db = rd.number(r, "rho_db");
    }
  }

  if (doc.contains("sweep")) {
    if (c.sweep) rd.error("sweep", "rho_db is already a sweep list");
    const json& sw = doc["sweep"];
    if (!sw.is_object()) rd.error("sweep", "expected an object");
    rd.reject_unknown(sw, "sweep.", {"param", "values"});
    if (!sw.contains("param") || !sw.contains("values")) rd.error("sweep", "needs param and values");
    SweepAxis axis;
    axis.param = rd.string(sw["param"], "sweep.param");
    if (!sw["values"].is_array()) rd.error("sweep.values", "expected a list of numbers");
    for (std::size_t i = 0; i < sw["values"].size(); ++i) {
      axis.values.push_back(rd.number(sw["values"][i], "sweep.values[" + std::to_string(i) + "]"));
    }
    c.sweep = std::move(axis);
  }

  try {
    c.validate();
  } catch (const Error& e) {
    fail(ErrorKind::Config, source + ": " + e.what());
  }
  return c;
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot read config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::string serialize_config(const ExperimentConfig& c) {
  json doc;
  doc["name"] = c.name;
  json ch;
  ch["kind"] = c.channel.kind == ChannelKind::Rayleigh ? "rayleigh" : "geometric";
  ch["n_t"] = c.channel.n_t;
  ch["n_r"] = c.channel.n_r;
  ch["l_paths"] = c.channel.l_paths;
  ch["spacing_over_wavelength"] = c.channel.spacing_over_wavelength;
  doc["channel"] = ch;
  doc["k"] = c.k;
  doc["m"] = c.m;
  doc["rho_db"] = c.rho_db;
  doc["scheme"] = to_string(c.scheme.kind);
  if (c.scheme.kind == SchemeKind::Quantized) doc["bits"] = c.scheme.bits;
  if (c.scheme.kind == SchemeKind::Selection) doc["beta_percent"] = c.scheme.beta_percent;
  doc["trials"] = c.trials;
  doc["master_seed"] = c.master_seed;
  if (c.sweep) doc["sweep"] = json{{"param", c.sweep->param}, {"values", c.sweep->values}};
  return doc.dump(2) + "\n";
}

}  // namespace beamsim
