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

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svsim/kernels.hpp"
#include "svsim/statevec.hpp"

namespace svsim {

enum class GateKind {
    H, X, Y, Z, S, Sdg, T, Tdg,
    RX, RY, RZ, U1, U2, U3,
    CX, CZ, CU1, CRZ, SWAP,
    Fused,
};

/// Lower-case OpenQASM name ("h", "cu1", ...). "fused" for Fused.
const char* gate_name(GateKind kind) noexcept;
std::optional<GateKind> gate_kind_from_name(const std::string& name) noexcept;

int param_count(GateKind kind) noexcept;
/// Built-in control count: 1 for CX/CZ/CU1/CRZ, 0 otherwise.
int builtin_controls(GateKind kind) noexcept;
/// Matrix target count; 0 for Fused (taken from the carried matrix).
int target_count(GateKind kind) noexcept;

/// Target-space matrix of a named gate; CX gives X, CU1(l) gives U1(l), etc.
/// Angles in radians; U3 follows the OpenQASM 2.0 definition.
GateMatrix gate_matrix(GateKind kind, std::span<const double> params = {});

struct GateOp {
    GateKind kind = GateKind::H;
    std::vector<double> params;
    std::vector<int> targets;
    std::vector<int> controls;
    /// Set for Fused ops only.
    std::shared_ptr<const GateMatrix> matrix;

    /// Controls first, then targets.
    std::vector<int> qubits() const;

    friend bool operator==(const GateOp& a, const GateOp& b);
};

/// Matrix acting on op.targets.
GateMatrix op_matrix(const GateOp& op);
/// Matrix acting on op.qubits() (controls folded in).
GateMatrix full_matrix(const GateOp& op);

namespace gates {
GateOp h(int q);
GateOp x(int q);
GateOp y(int q);
GateOp z(int q);
GateOp s(int q);
GateOp sdg(int q);
GateOp t(int q);
GateOp tdg(int q);
GateOp rx(int q, double theta);
GateOp ry(int q, double theta);
GateOp rz(int q, double theta);
GateOp u1(int q, double lambda);
GateOp u2(int q, double phi, double lambda);
GateOp u3(int q, double theta, double phi, double lambda);
GateOp cx(int control, int target);
GateOp cz(int control, int target);
GateOp cu1(int control, int target, double lambda);
GateOp crz(int control, int target, double lambda);
GateOp swap(int a, int b);
GateOp fused(std::vector<int> targets, GateMatrix matrix);
} // namespace gates

struct Measurement {
    int qubit;
    int clbit;

    friend bool operator==(const Measurement&, const Measurement&) = default;
};

/// Ordered gate list over a fixed number of qubits. Measurements are kept as
/// metadata and never touch the state during execute().
class Circuit {
public:
    Circuit() = default;
    explicit Circuit(int nqubits);

    int nqubits() const noexcept { return nqubits_; }
    const std::vector<GateOp>& ops() const noexcept { return ops_; }
    const std::vector<Measurement>& measurements() const noexcept { return measurements_; }

    /// Validates arity, parameter count and qubit indices.
    void add(GateOp op);
    void add_measurement(int qubit, int clbit);

    /// Appends every op of `other` (same width).
    void extend(const Circuit& other);

    friend bool operator==(const Circuit& a, const Circuit& b);

private:
    int nqubits_ = 0;
    std::vector<GateOp> ops_;
    std::vector<Measurement> measurements_;
};

/// As-soon-as-possible layering: each op goes one layer after the latest op
/// sharing a qubit with it (controls included).
int depth(const Circuit& circuit);
std::size_t gate_count(const Circuit& circuit);

enum class Backend { InPlace, DenseOracle, Einsum };

const char* backend_name(Backend b) noexcept;
Backend parse_backend(const std::string& name);

template <typename Real>
void apply_op(StateVector<Real>& state, const GateOp& op, Backend backend = Backend::InPlace);

template <typename Real>
void execute(const Circuit& circuit, StateVector<Real>& state, Backend backend = Backend::InPlace);

} // namespace svsim
