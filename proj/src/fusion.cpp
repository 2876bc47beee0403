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

#include "svsim/fusion.hpp"

#include <algorithm>
#include <variant>

namespace svsim {

GateMatrix embed_matrix(const GateMatrix& matrix, std::span<const int> from, std::span<const int> to) {
    if (static_cast<std::size_t>(matrix.ntargets()) != from.size()) {
        throw Error(Errc::ShapeMismatch, "matrix size does not match its qubit list");
    }
    // Bit of the `to` row index that carries each `from` qubit.
    std::vector<int> shift(from.size());
    std::size_t covered = 0;
    for (std::size_t k = 0; k < from.size(); ++k) {
        const auto it = std::find(to.begin(), to.end(), from[k]);
        if (it == to.end()) throw Error(Errc::ShapeMismatch, "embedding target misses a qubit of the matrix");
        const auto pos = static_cast<std::size_t>(it - to.begin());
        shift[k] = static_cast<int>(to.size() - 1 - pos);
        covered |= std::size_t{1} << shift[k];
    }
    const std::size_t dim = std::size_t{1} << to.size();
    const int m = matrix.ntargets();
    auto sub = [&](std::size_t idx) {
        std::size_t r = 0;
        for (int k = 0; k < m; ++k) r = (r << 1) | ((idx >> shift[k]) & 1U);
        return r;
    };
    std::vector<cplx> e(dim * dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            if ((r & ~covered) == (c & ~covered)) e[r * dim + c] = matrix(sub(r), sub(c));
    return GateMatrix(static_cast<int>(to.size()), std::move(e), false);
}

GateMatrix group_matrix(const FusionGroup& group) {
    if (group.members.empty()) throw Error(Errc::InvalidArgument, "empty fusion group");
    GateMatrix acc = GateMatrix::identity(static_cast<int>(group.qubits.size()));
    for (const auto& op : group.members) {
        const std::vector<int> q = op.qubits();
        acc = embed_matrix(full_matrix(op), q, group.qubits) * acc;
    }
    return acc;
}

namespace {

struct Sweep {
    std::vector<FusionGroup> groups;
    std::vector<bool> absorbed;
    // Output order: a group id, or a pass-through op index.
    std::vector<std::variant<std::size_t, std::size_t>> items;
};

Sweep sweep(const Circuit& circuit) {
    Sweep s;
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> active(static_cast<std::size_t>(circuit.nqubits()), kNone);

    auto open = [&](std::vector<int> qubits) {
        s.groups.push_back({std::move(qubits), {}});
        s.absorbed.push_back(false);
        s.items.emplace_back(std::in_place_index<0>, s.groups.size() - 1);
        return s.groups.size() - 1;
    };

    const auto& ops = circuit.ops();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const GateOp& op = ops[i];
        std::vector<int> qs = op.qubits();
        if (qs.size() == 1) {
            const int q = qs[0];
            if (active[q] == kNone) active[q] = open({q});
            s.groups[active[q]].members.push_back(op);
        } else if (qs.size() == 2) {
            std::sort(qs.begin(), qs.end());
            const int a = qs[0], b = qs[1];
            if (active[a] != kNone && active[a] == active[b]) {
                s.groups[active[a]].members.push_back(op);
                continue;
            }
            const std::size_t g = open({a, b});
            for (const int q : {a, b}) {
                const std::size_t prev = active[q];
                if (prev == kNone || s.groups[prev].qubits.size() != 1) continue;
                auto& src = s.groups[prev].members;
                s.groups[g].members.insert(s.groups[g].members.end(), src.begin(), src.end());
                src.clear();
                s.absorbed[prev] = true;
            }
            active[a] = active[b] = g;
            s.groups[g].members.push_back(op);
        } else {
            for (const int q : qs) active[q] = kNone;
            s.items.emplace_back(std::in_place_index<1>, i);
        }
    }
    return s;
}

} // namespace

std::vector<FusionGroup> fusion_groups(const Circuit& circuit) {
    Sweep s = sweep(circuit);
    std::vector<FusionGroup> out;
    for (const auto& item : s.items)
        if (item.index() == 0 && !s.absorbed[std::get<0>(item)]) out.push_back(std::move(s.groups[std::get<0>(item)]));
    return out;
}

Circuit fuse(const Circuit& circuit, int max_qubits) {
    if (max_qubits != 2) {
        throw Error(Errc::UnsupportedMaxQubits,
                    "fusion supports max_qubits == 2 only, got " + std::to_string(max_qubits));
    }
    const Sweep s = sweep(circuit);
    Circuit out(circuit.nqubits());
    for (const auto& item : s.items) {
        if (item.index() == 1) {
            out.add(circuit.ops()[std::get<1>(item)]);
            continue;
        }
        const std::size_t g = std::get<0>(item);
        if (s.absorbed[g]) continue;
        out.add(gates::fused(s.groups[g].qubits, group_matrix(s.groups[g])));
    }
    for (const auto& m : circuit.measurements()) out.add_measurement(m.qubit, m.clbit);
    return out;
}

} // namespace svsim
