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

#include "svsim/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace svsim {

namespace {

struct KindInfo {
    GateKind kind;
    const char* name;
    int params;
    int controls;
    int targets;
};

constexpr std::array<KindInfo, 20> kKinds{{
    {GateKind::H, "h", 0, 0, 1},     {GateKind::X, "x", 0, 0, 1},         {GateKind::Y, "y", 0, 0, 1},
    {GateKind::Z, "z", 0, 0, 1},     {GateKind::S, "s", 0, 0, 1},         {GateKind::Sdg, "sdg", 0, 0, 1},
    {GateKind::T, "t", 0, 0, 1},     {GateKind::Tdg, "tdg", 0, 0, 1},     {GateKind::RX, "rx", 1, 0, 1},
    {GateKind::RY, "ry", 1, 0, 1},   {GateKind::RZ, "rz", 1, 0, 1},       {GateKind::U1, "u1", 1, 0, 1},
    {GateKind::U2, "u2", 2, 0, 1},   {GateKind::U3, "u3", 3, 0, 1},       {GateKind::CX, "cx", 0, 1, 1},
    {GateKind::CZ, "cz", 0, 1, 1},   {GateKind::CU1, "cu1", 1, 1, 1},     {GateKind::CRZ, "crz", 1, 1, 1},
    {GateKind::SWAP, "swap", 0, 0, 2}, {GateKind::Fused, "fused", 0, 0, 0},
}};

const KindInfo& info(GateKind kind) { return kKinds[static_cast<std::size_t>(kind)]; }

cplx expi(double phase) { return {std::cos(phase), std::sin(phase)}; }

GateMatrix mat2(cplx a, cplx b, cplx c, cplx d) { return GateMatrix(1, {a, b, c, d}, true); }

GateOp make(GateKind kind, std::vector<int> targets, std::vector<int> controls = {}, std::vector<double> params = {}) {
    GateOp op;
    op.kind = kind;
    op.targets = std::move(targets);
    op.controls = std::move(controls);
    op.params = std::move(params);
    return op;
}

} // namespace

const char* gate_name(GateKind kind) noexcept { return info(kind).name; }

std::optional<GateKind> gate_kind_from_name(const std::string& name) noexcept {
    for (const auto& k : kKinds)
        if (k.kind != GateKind::Fused && name == k.name) return k.kind;
    return std::nullopt;
}

int param_count(GateKind kind) noexcept { return info(kind).params; }
int builtin_controls(GateKind kind) noexcept { return info(kind).controls; }
int target_count(GateKind kind) noexcept { return info(kind).targets; }

GateMatrix gate_matrix(GateKind kind, std::span<const double> params) {
    if (kind == GateKind::Fused) throw Error(Errc::InvalidArgument, "fused gates carry their own matrix");
    if (params.size() != static_cast<std::size_t>(param_count(kind))) {
        throw Error(Errc::ShapeMismatch, std::string(gate_name(kind)) + " takes " +
                                             std::to_string(param_count(kind)) + " parameter(s)");
    }
    using std::numbers::pi;
    const double r2 = 1.0 / std::numbers::sqrt2;
    switch (kind) {
    case GateKind::H: return mat2(r2, r2, r2, -r2);
    case GateKind::X:
    case GateKind::CX: return mat2(0, 1, 1, 0);
    case GateKind::Y: return mat2(0, cplx(0, -1), cplx(0, 1), 0);
    case GateKind::Z:
    case GateKind::CZ: return mat2(1, 0, 0, -1);
    case GateKind::S: return mat2(1, 0, 0, cplx(0, 1));
    case GateKind::Sdg: return mat2(1, 0, 0, cplx(0, -1));
    case GateKind::T: return mat2(1, 0, 0, expi(pi / 4));
    case GateKind::Tdg: return mat2(1, 0, 0, expi(-pi / 4));
    case GateKind::RX: {
        const double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
        return mat2(c, cplx(0, -s), cplx(0, -s), c);
    }
    case GateKind::RY: {
        const double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
        return mat2(c, -s, s, c);
    }
    case GateKind::RZ:
    case GateKind::CRZ: return mat2(expi(-params[0] / 2), 0, 0, expi(params[0] / 2));
    case GateKind::U1:
    case GateKind::CU1: return mat2(1, 0, 0, expi(params[0]));
    case GateKind::U2: {
        const double phi = params[0], lam = params[1];
        return mat2(r2, -r2 * expi(lam), r2 * expi(phi), r2 * expi(phi + lam));
    }
    case GateKind::U3: {
        const double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
        const double phi = params[1], lam = params[2];
        return mat2(c, -s * expi(lam), s * expi(phi), c * expi(phi + lam));
    }
    case GateKind::SWAP: return GateMatrix(2, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1}, true);
    case GateKind::Fused: break;
    }
    throw Error(Errc::UnsupportedGate, "unknown gate kind");
}

std::vector<int> GateOp::qubits() const {
    std::vector<int> q(controls);
    q.insert(q.end(), targets.begin(), targets.end());
    return q;
}

bool operator==(const GateOp& a, const GateOp& b) {
    if (a.kind != b.kind || a.params != b.params || a.targets != b.targets || a.controls != b.controls) return false;
    if (a.kind != GateKind::Fused) return true;
    if (!a.matrix || !b.matrix) return a.matrix == b.matrix;
    return a.matrix->ntargets() == b.matrix->ntargets() &&
           std::equal(a.matrix->entries().begin(), a.matrix->entries().end(), b.matrix->entries().begin());
}

GateMatrix op_matrix(const GateOp& op) {
    if (op.kind == GateKind::Fused) {
        if (!op.matrix) throw Error(Errc::InvalidArgument, "fused op without a matrix");
        return *op.matrix;
    }
    return gate_matrix(op.kind, op.params);
}

GateMatrix full_matrix(const GateOp& op) {
    return controlled_matrix(op_matrix(op), static_cast<int>(op.controls.size()));
}

namespace gates {
GateOp h(int q) { return make(GateKind::H, {q}); }
GateOp x(int q) { return make(GateKind::X, {q}); }
GateOp y(int q) { return make(GateKind::Y, {q}); }
GateOp z(int q) { return make(GateKind::Z, {q}); }
GateOp s(int q) { return make(GateKind::S, {q}); }
GateOp sdg(int q) { return make(GateKind::Sdg, {q}); }
GateOp t(int q) { return make(GateKind::T, {q}); }
GateOp tdg(int q) { return make(GateKind::Tdg, {q}); }
GateOp rx(int q, double theta) { return make(GateKind::RX, {q}, {}, {theta}); }
GateOp ry(int q, double theta) { return make(GateKind::RY, {q}, {}, {theta}); }
GateOp rz(int q, double theta) { return make(GateKind::RZ, {q}, {}, {theta}); }
GateOp u1(int q, double lambda) { return make(GateKind::U1, {q}, {}, {lambda}); }
GateOp u2(int q, double phi, double lambda) { return make(GateKind::U2, {q}, {}, {phi, lambda}); }
GateOp u3(int q, double theta, double phi, double lambda) {
    return make(GateKind::U3, {q}, {}, {theta, phi, lambda});
}
GateOp cx(int control, int target) { return make(GateKind::CX, {target}, {control}); }
GateOp cz(int control, int target) { return make(GateKind::CZ, {target}, {control}); }
GateOp cu1(int control, int target, double lambda) { return make(GateKind::CU1, {target}, {control}, {lambda}); }
GateOp crz(int control, int target, double lambda) { return make(GateKind::CRZ, {target}, {control}, {lambda}); }
GateOp swap(int a, int b) { return make(GateKind::SWAP, {a, b}); }
GateOp fused(std::vector<int> targets, GateMatrix matrix) {
    GateOp op = make(GateKind::Fused, std::move(targets));
    op.matrix = std::make_shared<const GateMatrix>(std::move(matrix));
    return op;
}
} // namespace gates

// ---------------------------------------------------------------------------
// Circuit

Circuit::Circuit(int nqubits) : nqubits_(nqubits) {
    if (nqubits < 1) throw Error(Errc::InvalidArgument, "a circuit needs at least one qubit");
}

void Circuit::add(GateOp op) {
    const std::string name = gate_name(op.kind);
    if (op.params.size() != static_cast<std::size_t>(param_count(op.kind))) {
        throw Error(Errc::ShapeMismatch, name + " takes " + std::to_string(param_count(op.kind)) + " parameter(s)");
    }
    if (op.kind == GateKind::Fused) {
        if (!op.matrix || static_cast<std::size_t>(op.matrix->ntargets()) != op.targets.size()) {
            throw Error(Errc::ShapeMismatch, "fused matrix does not match its target list");
        }
    } else if (op.targets.size() != static_cast<std::size_t>(target_count(op.kind))) {
        throw Error(Errc::ShapeMismatch, name + " acts on " + std::to_string(target_count(op.kind)) + " target(s)");
    }
    if (builtin_controls(op.kind) > 0 && op.controls.size() != static_cast<std::size_t>(builtin_controls(op.kind))) {
        throw Error(Errc::ShapeMismatch, name + " needs exactly one control");
    }
    std::vector<int> seen;
    for (const int q : op.qubits()) {
        if (q < 0 || q >= nqubits_) {
            throw Error(Errc::IndexOutOfRange,
                        name + " on qubit " + std::to_string(q) + " of a " + std::to_string(nqubits_) + "-qubit circuit");
        }
        if (std::find(seen.begin(), seen.end(), q) != seen.end()) {
            throw Error(Errc::OverlappingQubits, name + " uses qubit " + std::to_string(q) + " twice");
        }
        seen.push_back(q);
    }
    ops_.push_back(std::move(op));
}

void Circuit::add_measurement(int qubit, int clbit) {
    if (qubit < 0 || qubit >= nqubits_) throw Error(Errc::IndexOutOfRange, "measured qubit out of range");
    if (clbit < 0) throw Error(Errc::IndexOutOfRange, "negative classical bit");
    measurements_.push_back({qubit, clbit});
}

void Circuit::extend(const Circuit& other) {
    if (other.nqubits_ != nqubits_) throw Error(Errc::ShapeMismatch, "cannot extend with a circuit of another width");
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
}

bool operator==(const Circuit& a, const Circuit& b) {
    return a.nqubits_ == b.nqubits_ && a.ops_ == b.ops_ && a.measurements_ == b.measurements_;
}

int depth(const Circuit& circuit) {
    std::vector<int> layer(static_cast<std::size_t>(circuit.nqubits()), 0);
    int result = 0;
    for (const auto& op : circuit.ops()) {
        int l = 0;
        for (const int q : op.targets) l = std::max(l, layer[q]);
        for (const int q : op.controls) l = std::max(l, layer[q]);
        ++l;
        for (const int q : op.targets) layer[q] = l;
        for (const int q : op.controls) layer[q] = l;
        result = std::max(result, l);
    }
    return result;
}

std::size_t gate_count(const Circuit& circuit) { return circuit.ops().size(); }

const char* backend_name(Backend b) noexcept {
    switch (b) {
    case Backend::InPlace: return "inplace";
    case Backend::DenseOracle: return "oracle";
    case Backend::Einsum: return "einsum";
    }
    return "unknown";
}

Backend parse_backend(const std::string& name) {
    if (name == "inplace") return Backend::InPlace;
    if (name == "oracle" || name == "dense") return Backend::DenseOracle;
    if (name == "einsum") return Backend::Einsum;
    throw Error(Errc::InvalidArgument, "unknown backend '" + name + "'");
}

template <typename Real>
void apply_op(StateVector<Real>& state, const GateOp& op, Backend backend) {
    switch (backend) {
    case Backend::DenseOracle:
        state = dense_oracle_apply(state, op_matrix(op), op.targets, op.controls);
        return;
    case Backend::Einsum:
        einsum_apply(state, op_matrix(op), op.targets, op.controls);
        return;
    case Backend::InPlace: break;
    }
    switch (op.kind) {
    case GateKind::X:
    case GateKind::CX: apply_x(state, op.targets[0], op.controls); break;
    case GateKind::Y: apply_y(state, op.targets[0], op.controls); break;
    case GateKind::Z:
    case GateKind::CZ: apply_z(state, op.targets[0], op.controls); break;
    case GateKind::SWAP: apply_swap(state, op.targets[0], op.targets[1], op.controls); break;
    default: apply_controlled_gate(state, op_matrix(op), op.controls, op.targets); break;
    }
}

template <typename Real>
void execute(const Circuit& circuit, StateVector<Real>& state, Backend backend) {
    if (state.nqubits() != circuit.nqubits()) {
        throw Error(Errc::ShapeMismatch, "circuit has " + std::to_string(circuit.nqubits()) + " qubits, state has " +
                                             std::to_string(state.nqubits()));
    }
    if (backend == Backend::DenseOracle && state.nqubits() > kOracleMaxQubits) {
        throw Error(Errc::CapacityExceeded, "dense oracle backend is limited to " + std::to_string(kOracleMaxQubits) +
                                                " qubits");
    }
    for (const auto& op : circuit.ops()) apply_op(state, op, backend);
}

template void apply_op<float>(StateVector<float>&, const GateOp&, Backend);
template void apply_op<double>(StateVector<double>&, const GateOp&, Backend);
template void execute<float>(const Circuit&, StateVector<float>&, Backend);
template void execute<double>(const Circuit&, StateVector<double>&, Backend);

} // namespace svsim
