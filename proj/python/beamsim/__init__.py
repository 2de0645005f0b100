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

"""Hybrid beamforming simulator."""

import json as _json

from ._beamsim import *  # noqa: F401,F403
from ._beamsim import BeamsimError, run_config, validate_json


def run(config, workers=1):
    """Run an experiment given a config dict or JSON string; returns one dict per point."""
    text = config if isinstance(config, str) else _json.dumps(config)
    return run_config(text, workers)


def validate(strict=False, seed=2026):
    """Run the validation suite and return the parsed report."""
    return _json.loads(validate_json(strict, seed))


__all__ = ["BeamsimError", "run", "validate"]
