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
"""State-vector quantum circuit simulator."""

from ._svsim import (
    Circuit,
    StateVector,
    SvsimError,
    adiabatic_evolve,
    collapse,
    emit_qasm,
    execute,
    fuse,
    gen_bv,
    gen_qft,
    gen_variational,
    generate,
    load_qasm,
    max_qubits,
    num_threads,
    parse_qasm,
    probabilities,
    run_benchmark,
    sample_shots,
    set_max_qubits,
    set_num_threads,
    simulate,
    tfim_energy,
    tfim_ground_energy,
)

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "StateVector",
    "SvsimError",
    "adiabatic_evolve",
    "collapse",
    "emit_qasm",
    "execute",
    "fuse",
    "gen_bv",
    "gen_qft",
    "gen_variational",
    "generate",
    "load_qasm",
    "max_qubits",
    "num_threads",
    "parse_qasm",
    "probabilities",
    "run_benchmark",
    "sample_shots",
    "set_max_qubits",
    "set_num_threads",
    "simulate",
    "tfim_energy",
    "tfim_ground_energy",
]
