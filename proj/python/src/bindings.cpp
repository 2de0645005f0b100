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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "beamsim/analytic.hpp"
#include "beamsim/beamform.hpp"
#include "beamsim/channel.hpp"
#include "beamsim/error.hpp"
#include "beamsim/harness/config.hpp"
#include "beamsim/harness/csv.hpp"
#include "beamsim/harness/experiment.hpp"
#include "beamsim/harness/validate.hpp"
#include "beamsim/numerics/special.hpp"
#include "beamsim/numerics/svd.hpp"
#include "beamsim/rate.hpp"

namespace py = pybind11;
using namespace beamsim;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2) throw py::value_error("expected a 2-D array");
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  return ComplexMatrix(rows, cols, std::vector<cplx>(a.data(), a.data() + a.size()));
}

py::array_t<cplx> to_array(const ComplexMatrix& m) {
  py::array_t<cplx> out({m.rows(), m.cols()});
  std::copy(m.data().begin(), m.data().end(), out.mutable_data());
  return out;
}

py::array_t<bool> mask_array(const Mask& m) {
  py::array_t<bool> out({m.rows(), m.cols()});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) view(r, c) = m(r, c);
  return out;
}

ChannelKind channel_kind(const std::string& name) {
  if (name == "rayleigh") return ChannelKind::Rayleigh;
  if (name == "geometric") return ChannelKind::Geometric;
  throw py::value_error("channel kind must be 'rayleigh' or 'geometric'");
}

ChannelRealization channel_from_array(const CArray& h) {
  ChannelRealization chan;
  chan.h = to_matrix(h);
  chan.model.n_r = chan.h.rows();
  chan.model.n_t = chan.h.cols();
  return chan;
}

py::dict rate_dict(const RateReport& r) {
  py::dict d;
  d["rate_bits"] = r.rate_bits;
  d["per_stream"] = r.per_stream;
  d["rho_db"] = r.rho_db;
  d["noise_cov_condition"] = r.noise_cov_condition;
  return d;
}

py::dict moments_dict(const Moments& m) {
  py::dict d;
  d["mean"] = m.mean;
  d["std_error"] = m.std_error;
  return d;
}

py::dict point_dict(const PointResult& p) {
  py::dict d;
  d["name"] = p.config.name;
  d["scheme"] = p.config.scheme.label();
  d["sweep_param"] = p.sweep_param;
  d["sweep_value"] = p.sweep_value;
  d["capacity"] = moments_dict(p.summary.capacity);
  d["rate"] = moments_dict(p.summary.rate);
  d["gap"] = moments_dict(p.summary.gap);
  d["inactive_fraction"] = moments_dict(p.summary.inactive_fraction);
  d["gamma_t"] = moments_dict(p.summary.gamma_t);
  d["trial_count"] = p.summary.trial_count;
  d["excluded_count"] = p.summary.excluded_count;
  d["analytic_gap"] = p.summary.analytic_gap;
  d["analytic_rate"] = p.summary.analytic_rate;
  return d;
}

}  // namespace

PYBIND11_MODULE(_beamsim, m) {
  m.doc() = "Hybrid beamforming simulator core";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::object(py::exception<Error>(m, "BeamsimError", PyExc_RuntimeError)); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error_type.get_stored();
      py::object err = type(e.what());
      err.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(type.ptr(), err.ptr());
    }
  });

  m.def(
      "thin_svd",
      [](const CArray& a, std::size_t rank, const std::string& method) {
        SvdMethod how = SvdMethod::Auto;
        if (method == "jacobi") how = SvdMethod::Jacobi;
        else if (method == "lanczos") how = SvdMethod::Lanczos;
        else if (method != "auto") throw py::value_error("method must be auto, jacobi or lanczos");
        const SvdResult s = thin_svd(to_matrix(a), rank, how);
        return py::make_tuple(to_array(s.u), s.sigma, to_array(s.v));
      },
      py::arg("a"), py::arg("rank"), py::arg("method") = "auto");

  m.def("erf", &beamsim::erf, py::arg("x"));
  m.def("normal_cdf", &normal_cdf, py::arg("x"), py::arg("mean") = 0.0, py::arg("sd") = 1.0);
  m.def("from_db", &from_db);
  m.def("to_db", &to_db);
  m.def(
      "waterfill",
      [](const std::vector<double>& gains, double rho, double budget) {
        return waterfill(gains, rho, budget);
      },
      py::arg("gains"), py::arg("rho"), py::arg("budget") = 1.0);

  py::class_<ChannelRealization>(m, "Channel")
      .def(py::init(&channel_from_array), py::arg("h"))
      .def_property_readonly("h", [](const ChannelRealization& c) { return to_array(c.h); })
      .def_property_readonly("n_t", [](const ChannelRealization& c) { return c.h.cols(); })
      .def_property_readonly("n_r", [](const ChannelRealization& c) { return c.h.rows(); })
      .def_property_readonly("paths", [](const ChannelRealization& c) {
        py::list out;
        for (const auto& p : c.paths) out.append(py::make_tuple(p.beta, p.phi_t, p.phi_r));
        return out;
      });

  m.def(
      "draw_channel",
      [](const std::string& kind, std::size_t n_t, std::size_t n_r, std::uint64_t seed,
         std::uint64_t stream, std::size_t l_paths, double spacing) {
        ChannelModel model{channel_kind(kind), n_t, n_r, l_paths, spacing};
        SeededRng rng(seed, stream);
        return draw_channel(model, rng);
      },
      py::arg("kind"), py::arg("n_t"), py::arg("n_r"), py::arg("seed"), py::arg("stream") = 0,
      py::arg("l_paths") = 5, py::arg("spacing") = 0.5);

  py::class_<HybridBeamformer>(m, "HybridBeamformer")
      .def_property_readonly("f_rf", [](const HybridBeamformer& b) { return to_array(b.f_rf); })
      .def_property_readonly("f_b", [](const HybridBeamformer& b) { return to_array(b.f_b); })
      .def_property_readonly("w_rf", [](const HybridBeamformer& b) -> py::object {
        return b.w_rf ? py::object(to_array(*b.w_rf)) : py::none();
      })
      .def_property_readonly("w_b", [](const HybridBeamformer& b) -> py::object {
        return b.w_b ? py::object(to_array(*b.w_b)) : py::none();
      })
      .def_property_readonly("active_mask", [](const HybridBeamformer& b) { return mask_array(b.active_mask); })
      .def_readonly("power", &HybridBeamformer::power)
      .def_readonly("gamma_t", &HybridBeamformer::gamma_t)
      .def_readonly("gamma_r", &HybridBeamformer::gamma_r)
      .def_readonly("digital", &HybridBeamformer::digital)
      .def_property_readonly("streams", &HybridBeamformer::streams)
      .def_property_readonly("rf_chains", &HybridBeamformer::rf_chains)
      .def_property_readonly("multiuser", &HybridBeamformer::multiuser)
      .def_property_readonly("inactive_fraction", &HybridBeamformer::inactive_fraction)
      .def("precoder", [](const HybridBeamformer& b) { return to_array(b.precoder()); })
      .def("combiner", [](const HybridBeamformer& b) { return to_array(b.combiner()); })
      .def("violations", &invariant_violations);

  using Builder = HybridBeamformer (*)(const ChannelRealization&, std::size_t, double);
  m.def("digital_svd", static_cast<Builder>(&digital_svd_beamformer), py::arg("channel"), py::arg("k"), py::arg("rho"));
  m.def("hybrid_lemma2", static_cast<Builder>(&hybrid_lemma2), py::arg("channel"), py::arg("k"), py::arg("rho"));
  m.def("hybrid_double_rf", static_cast<Builder>(&hybrid_double_rf), py::arg("channel"), py::arg("k"), py::arg("rho"));
  m.def("mu_zf_hybrid", &mu_zf_hybrid, py::arg("channel"), py::arg("k"), py::arg("rho"));
  m.def("mu_zf_digital", &mu_zf_digital, py::arg("channel"), py::arg("k"), py::arg("rho"));
  m.def(
      "hybrid_mixed",
      [](const ChannelRealization& c, std::size_t k, std::size_t rf, double rho) {
        return hybrid_mixed(c, k, rf, rho);
      },
      py::arg("channel"), py::arg("k"), py::arg("m"), py::arg("rho"));
  m.def(
      "quantize_rf",
      [](const ChannelRealization& c, const HybridBeamformer& bf, unsigned bits, double rho) {
        return quantize_rf(c, bf, PhaseResolution::digital(bits), rho);
      },
      py::arg("channel"), py::arg("beamformer"), py::arg("bits"), py::arg("rho"));
  m.def(
      "select_phase_shifters",
      [](const ChannelRealization& c, std::size_t k, double rho, double beta_percent) {
        return select_phase_shifters(c, k, rho, SelectionPolicy{beta_percent});
      },
      py::arg("channel"), py::arg("k"), py::arg("rho"), py::arg("beta_percent"));

  m.def(
      "achievable_rate",
      [](const ChannelRealization& c, const HybridBeamformer& bf, double rho) {
        return rate_dict(achievable_rate(c, bf, rho));
      },
      py::arg("channel"), py::arg("beamformer"), py::arg("rho"));
  m.def(
      "sum_rate_mu",
      [](const ChannelRealization& c, const HybridBeamformer& bf, double rho) {
        return rate_dict(sum_rate_mu(c, bf, rho));
      },
      py::arg("channel"), py::arg("beamformer"), py::arg("rho"));
  m.def(
      "capacity",
      [](const ChannelRealization& c, std::size_t k, double rho) { return rate_dict(capacity_p2p(c, k, rho)); },
      py::arg("channel"), py::arg("k"), py::arg("rho"));

  m.def("gap_lemma3", &gap_lemma3, py::arg("k"));
  m.def("gap_general", &gap_general, py::arg("k"), py::arg("m"));
  m.def("quant_gap_bound", &quant_gap_bound, py::arg("k"), py::arg("bits"));
  m.def("gap_multiuser", &gap_multiuser, py::arg("k"));
  m.def("gap_selection", &gap_selection, py::arg("k"), py::arg("beta_percent"));
  m.def("alpha_from_beta", &alpha_from_beta, py::arg("beta_percent"));
  m.def(
      "rf_power_consumption",
      [](double p_ps_mw, double p_s_mw, std::size_t rf, std::size_t n_t, double beta_percent) {
        return rf_power_consumption(PowerModelParams{p_ps_mw, p_s_mw, rf, n_t, beta_percent});
      },
      py::arg("p_ps_mw"), py::arg("p_s_mw"), py::arg("m"), py::arg("n_t"), py::arg("beta_percent"));

  m.def(
      "run_config",
      [](const std::string& text, std::size_t workers) {
        const ExperimentConfig cfg = parse_config_text(text);
        std::vector<PointResult> results;
        {
          py::gil_scoped_release release;
          results = run_experiment(cfg, RunOptions{workers, PhaseMetric::Circular});
        }
        py::list out;
        for (const auto& p : results) out.append(point_dict(p));
        return out;
      },
      py::arg("config_json"), py::arg("workers") = 1);
  m.def(
      "validate_json",
      [](bool strict, std::uint64_t seed) {
        ValidateOptions vo;
        vo.strict = strict;
        vo.seed = seed;
        py::gil_scoped_release release;
        return validate(vo).to_json();
      },
      py::arg("strict") = false, py::arg("seed") = 2026);
}
