/* Copyright 2026 The svsim Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <span>
#include <vector>

#include "svsim/circuit.hpp"

namespace svsim {

/// Gates collected on one or two qubits (ascending). The first qubit is the
/// most significant bit of the group matrix.
struct FusionGroup {
    std::vector<int> qubits;
    std::vector<GateOp> members;
};

/// Re-expresses `matrix` (acting on `from`, first = MSB) on the qubit list
/// `to`, which must contain every qubit of `from`.
GateMatrix embed_matrix(const GateMatrix& matrix, std::span<const int> from, std::span<const int> to);

/// Ordered product of the members, later members multiplied on the left.
GateMatrix group_matrix(const FusionGroup& group);

/// Greedy two-qubit fusion. Each qubit tracks the group that last received a
/// gate on it. A one-qubit gate joins that group. A two-qubit gate joins it
/// when both qubits point at the same group; otherwise it opens a new group,
/// absorbing one-qubit groups on either qubit. Gates on three or more qubits
/// are passed through and detach their qubits.
/// Only max_qubits == 2 is supported.
Circuit fuse(const Circuit& circuit, int max_qubits = 2);

/// The groups fuse() would emit, before conversion to Fused ops.
std::vector<FusionGroup> fusion_groups(const Circuit& circuit);

} // namespace svsim
