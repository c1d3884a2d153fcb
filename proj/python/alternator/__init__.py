# Copyright 2026 The Alternator Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Pulse-level compiler and simulator for a globally driven spin chain."""

from ._core import (
    AlternatorError,
    FrequencySet,
    canonical_decompose,
    cluster_state,
    compile_circuit,
    compile_iqp,
    find_time,
    residuals,
    schedule_unitary,
    simulate,
    unitary_distance,
)

__all__ = [
    "AlternatorError",
    "FrequencySet",
    "canonical_decompose",
    "cluster_state",
    "compile_circuit",
    "compile_iqp",
    "find_time",
    "residuals",
    "schedule_unitary",
    "simulate",
    "unitary_distance",
]
