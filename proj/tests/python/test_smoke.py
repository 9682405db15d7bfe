# Copyright 2026 The weylgate Authors
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

import json
import math

import numpy as np
import pytest

import weylgate


def test_catalog_and_point():
    assert "cnot" in weylgate.catalog_names()
    c = weylgate.canonical_point(weylgate.catalog("cnot"))
    np.testing.assert_allclose(c, [math.pi / 2, 0, 0], atol=1e-9)
    assert weylgate.is_perfect_entangler(c)
    assert weylgate.schmidt_number_line(c)


def test_gate_from_numpy():
    swap = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)
    g = weylgate.Gate(swap, "mine")
    assert g.name == "mine"
    np.testing.assert_array_equal(g.matrix, swap)
    d = weylgate.schmidt_decompose(g)
    np.testing.assert_allclose(d["coefficients"], [0.5] * 4, atol=1e-12)
    assert d["schmidt_number"] == 4
    assert d["strength"] == pytest.approx(2.0)


def test_invariant_routes_agree():
    g = weylgate.catalog("sqrt_iswap")
    c = weylgate.canonical_point(g)
    g1a, g2a = weylgate.invariants_from_unitary(g)
    g1b, g2b = weylgate.invariants_from_point(c)
    g1c, g2c = weylgate.invariants_from_z(weylgate.z_from_point(c))
    assert abs(g1a - g1b) < 1e-9 and abs(g1a - g1c) < 1e-9
    assert abs(g2a - g2b) < 1e-9 and abs(g2a - g2c) < 1e-9


def test_analyze_json():
    report = json.loads(weylgate.analyze(weylgate.catalog("dcnot"), "dcnot"))
    assert report["perfect_entangler"] is True
    assert report["schmidt_strength"] == pytest.approx(2.0)


def test_tables_and_sweeps():
    passed, per_edge = weylgate.verify_tables(97)
    assert passed and len(per_edge) == 15
    rows = weylgate.sweep("A2A3", 5)
    assert all(abs(r["strength"] - 2.0) < 1e-12 for r in rows)
    csv = weylgate.figure_csv("fig5b", 11)
    assert csv.splitlines()[0] == "param,PN"
    assert len(csv.splitlines()) == 12


def test_errors():
    with pytest.raises(KeyError):
        weylgate.catalog("toffoli")
    with pytest.raises(ValueError):
        weylgate.Gate(2 * np.eye(4, dtype=complex))
    with pytest.raises(ValueError):
        weylgate.gate_from_json("{broken")
    with pytest.raises(ValueError):
        weylgate.controlled_unitary_gate(1.5)
    with pytest.raises(ValueError):
        weylgate.Gate(np.eye(3))
