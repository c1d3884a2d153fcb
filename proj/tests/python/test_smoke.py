# Copyright 2026 The Alternator Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import cmath
import math

import numpy as np
import pytest

import alternator

CLUSTER = "qubits 6\ninit zero\nlayer had_all\nlayer cz ab\nlayer cz ba\n"


def test_find_time_meets_tolerance():
    result = alternator.find_time([math.pi / 2, 0.0, 0.0, 0.0], 0.2)
    assert result["solver"] == "LATTICE"
    assert max(result["residuals"]) < 0.05
    again = alternator.residuals([math.pi / 2, 0.0, 0.0, 0.0], result["time"])
    assert again == pytest.approx(result["residuals"], abs=1e-12)


def test_frequency_set_validation():
    freqs = alternator.FrequencySet()
    assert freqs.as_tuple() == pytest.approx((1.0, math.sqrt(2), math.sqrt(3), math.sqrt(5)))
    with pytest.raises(alternator.AlternatorError):
        alternator.FrequencySet(1.0, 1.0, 2.0, 3.0)


def test_empty_schedule_keeps_uniform_state():
    state = alternator.simulate("", 2)
    assert np.allclose(state, 0.5)


def test_y_conjugation_matches_dense_evolution():
    t = 1.7
    schedule = f"X {5 * math.pi / 4!r}\nZ {t!r}\nX {3 * math.pi / 4!r}\n"
    u = alternator.schedule_unitary(schedule, 2)
    y = np.array([[0, -1j], [1j, 0]])
    eye = np.eye(2)
    h = np.kron(eye, y) + math.sqrt(2) * np.kron(y, eye) + math.sqrt(3) * np.kron(y, y)
    w, v = np.linalg.eigh(h)
    expected = v @ np.diag(np.exp(-1j * t * w)) @ v.conj().T
    assert alternator.unitary_distance(u, expected) < 1e-10


def test_canonical_decompose_of_cz():
    cz = np.diag([1, 1, 1, -1]).astype(complex)
    out = alternator.canonical_decompose(cz)
    c = sorted(abs(x) for x in out["coefficients"])
    assert c == pytest.approx([0.0, 0.0, math.pi / 4], abs=1e-9)


def test_cluster_state_compilation():
    result = alternator.compile_circuit(CLUSTER, 0.05, verify=True)
    assert result["fidelity"] >= 0.95
    assert result["predicted_error"] <= 0.05 + 1e-12
    state = alternator.simulate(result["schedule"], 6, init="zero")
    overlap = abs(np.vdot(alternator.cluster_state(6), state)) ** 2
    assert overlap >= 0.95


def test_iqp_schedule_text():
    text = alternator.compile_iqp([0.25, 0.5], 4)
    assert text.splitlines() == ["Z 0.25", "HAD", "Z 0.5", "HAD"]


def test_errors_surface_as_exceptions():
    with pytest.raises(alternator.AlternatorError, match="PARSE_ERROR"):
        alternator.compile_circuit("layer swirl ab\n", 0.1, n_qubits=4)
    with pytest.raises(alternator.AlternatorError, match="BUDGET_TOO_TIGHT"):
        alternator.compile_circuit(CLUSTER, 1e-9)
    assert cmath.isclose(alternator.cluster_state(2)[3], -0.5)
