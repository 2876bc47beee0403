# Copyright 2026 The svsim Authors. All Rights Reserved.
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

import json
import math
import os
import pathlib

import numpy as np
import pytest

import svsim

SCHEMA_DIR = pathlib.Path(os.environ.get("SVSIM_SCHEMA_DIR", pathlib.Path(__file__).parents[2] / "schemas"))


def test_generator_counts():
    assert (svsim.gen_qft(30).depth(), svsim.gen_qft(30).gate_count()) == (60, 480)
    assert (svsim.gen_variational(30).depth(), len(svsim.gen_variational(30))) == (4, 90)
    assert (svsim.gen_bv(30).depth(), len(svsim.gen_bv(30))) == (32, 89)
    fused = svsim.fuse(svsim.gen_qft(30))
    assert (fused.depth(), len(fused)) == (58, 450)


def test_qft_of_zero_is_uniform():
    state = svsim.simulate(svsim.gen_qft(6))
    amps = state.to_numpy()
    assert amps.shape == (64,)
    np.testing.assert_allclose(amps, np.full(64, 1 / 8), atol=1e-12)
    assert state.norm() == pytest.approx(1.0, abs=1e-12)


def test_circuit_building_and_backends():
    c = svsim.Circuit(2)
    c.add("h", [0])
    c.add("cx", [0, 1])
    assert c.gate_names() == ["h", "cx"]
    for backend in ("inplace", "oracle", "einsum"):
        s = svsim.simulate(c, backend)
        np.testing.assert_allclose(np.abs(s.to_numpy()) ** 2, [0.5, 0, 0, 0.5], atol=1e-12)


def test_state_round_trip_and_collapse():
    amps = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
    s = svsim.StateVector.from_numpy(amps)
    assert s.nqubits == 2
    assert svsim.probabilities(s, [1]) == pytest.approx([0.5, 0.5])
    svsim.collapse(s, [0], "1")
    np.testing.assert_allclose(s.to_numpy(), [0, 0, 0, 1], atol=1e-15)


def test_sampling_is_seeded():
    s = svsim.simulate(svsim.gen_bv(5))
    shots = svsim.sample_shots(s, [0, 1, 2, 3], 1000, seed=7)
    assert shots == {"1111": 1000}
    bell = svsim.StateVector.from_numpy(np.array([1, 0, 0, 1]) / math.sqrt(2))
    a = svsim.sample_shots(bell, [0, 1], 5000, seed=3)
    assert a == svsim.sample_shots(bell, [0, 1], 5000, seed=3)
    assert set(a) <= {"00", "11"}
    direct = svsim.sample_shots(bell, [0, 1], 5000, seed=3, method="direct")
    assert sum(direct.values()) == 5000


def test_qasm_round_trip():
    c = svsim.gen_qft(5)
    text = svsim.emit_qasm(c)
    assert text.startswith("OPENQASM 2.0;")
    assert svsim.parse_qasm(text) == c


def test_errors_carry_codes():
    with pytest.raises(svsim.SvsimError) as info:
        svsim.parse_qasm("OPENQASM 2.0;\nqreg q[2];\nfoo q[0];\n")
    assert info.value.code == "UnsupportedGate"
    with pytest.raises(svsim.SvsimError) as info:
        svsim.gen_variational(5)
    assert info.value.code == "OddQubits"
    with pytest.raises(svsim.SvsimError):
        svsim.StateVector(svsim.max_qubits() + 1)


def test_benchmark_report_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads((SCHEMA_DIR / "bench_report.schema.json").read_text())
    report = svsim.run_benchmark("qft", nqubits=10, repeats=3, shots=100)
    jsonschema.validate(report, schema)
    assert report["gates"] == {"before": 60, "after": 60}
    assert report["checksum"] == pytest.approx(1.0)
    fused = svsim.run_benchmark("variational", nqubits=12, fuse=True)
    jsonschema.validate(fused, schema)
    assert fused["gates"] == {"before": 36, "after": 12}


def test_adiabatic_evolution_finds_ground_state():
    psi = svsim.adiabatic_evolve(4, T=50.0, dt=0.05, method="trotter")
    e = svsim.tfim_energy(psi)
    e0 = svsim.tfim_ground_energy(4)
    assert abs(e - e0) <= 0.02 * abs(e0)
