# SPDX-License-Identifier: Apache-2.0
#
# beamsim: hybrid beamforming simulation engine for large antenna arrays
# Copyright (C) 2026 The beamsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

import math

import numpy as np
import pytest

import beamsim


def test_svd_matches_numpy():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((12, 7)) + 1j * rng.standard_normal((12, 7))
    u, s, v = beamsim.thin_svd(a, 7)
    np.testing.assert_allclose(s, np.linalg.svd(a, compute_uv=False), rtol=1e-10)
    np.testing.assert_allclose(u @ np.diag(s) @ v.conj().T, a, atol=1e-10)


def test_erf_matches_math():
    for x in (-3.0, -0.4, 0.0, 0.7, 2.5):
        assert beamsim.erf(x) == pytest.approx(math.erf(x), abs=1e-12)


def test_double_rf_reaches_capacity():
    chan = beamsim.draw_channel("rayleigh", 32, 32, seed=7)
    rho = beamsim.from_db(20.0)
    bf = beamsim.hybrid_double_rf(chan, 4, rho)
    assert bf.violations() == []
    rate = beamsim.achievable_rate(chan, bf, rho)["rate_bits"]
    assert rate == pytest.approx(beamsim.capacity(chan, 4, rho)["rate_bits"], abs=1e-9)


def test_channel_from_array_roundtrip():
    h = np.arange(6, dtype=complex).reshape(2, 3)
    chan = beamsim.Channel(h)
    assert (chan.n_r, chan.n_t) == (2, 3)
    np.testing.assert_array_equal(chan.h, h)


def test_analytic_values():
    assert beamsim.gap_lemma3(1) == pytest.approx(2 * math.log2(4 / math.pi), rel=1e-12)
    assert beamsim.quant_gap_bound(4, 2) == pytest.approx(8.0, rel=1e-12)


def test_errors_carry_kind():
    chan = beamsim.draw_channel("rayleigh", 8, 8, seed=1)
    with pytest.raises(beamsim.BeamsimError) as info:
        beamsim.hybrid_lemma2(chan, 9, 1.0)
    assert info.value.kind


def test_run_config():
    points = beamsim.run({"name": "smoke", "scheme": "lemma2", "channel": {"n_t": 16},
                          "k": 2, "trials": 20, "rho_db": [0, 10]})
    assert [p["sweep_value"] for p in points] == [0.0, 10.0]
    assert all(p["trial_count"] == 20 for p in points)
    assert points[1]["rate"]["mean"] > points[0]["rate"]["mean"]


def test_bad_config_is_rejected():
    with pytest.raises(beamsim.BeamsimError):
        beamsim.run({"scheme": "lemma2", "bogus": 1})
