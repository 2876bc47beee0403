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

#include "svsim/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

#include "svsim/parallel.hpp"

namespace svsim {

// ---------------------------------------------------------------------------
// GateMatrix

GateMatrix::GateMatrix(int ntargets, std::vector<cplx> entries, bool checked)
    : ntargets_(ntargets), entries_(std::move(entries)), checked_(checked) {
    if (ntargets < 1 || ntargets > kMaxTargets) {
        throw Error(Errc::TooManyTargets, "gate matrices act on 1.." + std::to_string(kMaxTargets) + " targets");
    }
    if (entries_.size() != dim() * dim()) {
        throw Error(Errc::ShapeMismatch, "expected " + std::to_string(dim() * dim()) + " matrix entries, got " +
                                             std::to_string(entries_.size()));
    }
}

GateMatrix GateMatrix::identity(int ntargets) {
    const std::size_t d = std::size_t{1} << ntargets;
    std::vector<cplx> e(d * d);
    for (std::size_t i = 0; i < d; ++i) e[i * d + i] = 1.0;
    return GateMatrix(ntargets, std::move(e), true);
}

GateMatrix GateMatrix::adjoint() const {
    std::vector<cplx> e(entries_.size());
    const std::size_t d = dim();
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) e[c * d + r] = std::conj((*this)(r, c));
    return GateMatrix(ntargets_, std::move(e), checked_);
}

GateMatrix operator*(const GateMatrix& a, const GateMatrix& b) {
    if (a.ntargets_ != b.ntargets_) throw Error(Errc::ShapeMismatch, "matrix product of different sizes");
    const std::size_t d = a.dim();
    std::vector<cplx> e(d * d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) {
            const cplx ark = a(r, k);
            for (std::size_t c = 0; c < d; ++c) e[r * d + c] += ark * b(k, c);
        }
    return GateMatrix(a.ntargets_, std::move(e), false);
}

double GateMatrix::unitarity_error() const {
    const GateMatrix p = adjoint() * *this;
    double err = 0.0;
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < dim(); ++c)
            err = std::max(err, std::abs(p(r, c) - (r == c ? cplx{1.0} : cplx{})));
    return err;
}

double GateMatrix::max_abs_diff(const GateMatrix& other) const {
    if (ntargets_ != other.ntargets_) throw Error(Errc::ShapeMismatch, "comparing matrices of different sizes");
    double err = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) err = std::max(err, std::abs(entries_[i] - other.entries_[i]));
    return err;
}

GateMatrix controlled_matrix(const GateMatrix& gate, int ncontrols) {
    if (ncontrols == 0) return gate;
    const int m = gate.ntargets() + ncontrols;
    GateMatrix full = GateMatrix::identity(m);
    const std::size_t d = full.dim();
    const std::size_t g = gate.dim();
    const std::size_t off = d - g;
    for (std::size_t r = 0; r < g; ++r)
        for (std::size_t c = 0; c < g; ++c) full(off + r, off + c) = gate(r, c);
    return GateMatrix(m, std::vector<cplx>(full.entries().begin(), full.entries().end()), gate.checked());
}

// ---------------------------------------------------------------------------
// Index generation

std::vector<index_t> multi_index_tuple(index_t g, std::span<const int> target_bits) {
    if (target_bits.size() > static_cast<std::size_t>(kMaxTargets)) {
        throw Error(Errc::TooManyTargets, std::to_string(target_bits.size()) + " targets exceeds the cap of " +
                                              std::to_string(kMaxTargets));
    }
    for (std::size_t j = 0; j < target_bits.size(); ++j) {
        if (target_bits[j] < 0 || target_bits[j] >= 63 || (j > 0 && target_bits[j] <= target_bits[j - 1])) {
            throw Error(Errc::InvalidArgument, "target bits must be strictly increasing and non-negative");
        }
    }
    const index_t base = insert_zero_bits(g, target_bits);
    const std::size_t count = std::size_t{1} << target_bits.size();
    std::vector<index_t> tuple(count);
    for (std::size_t r = 0; r < count; ++r) {
        index_t idx = base;
        for (std::size_t j = 0; j < target_bits.size(); ++j)
            if ((r >> j) & 1U) idx |= index_t{1} << target_bits[j];
        tuple[r] = idx;
    }
    return tuple;
}

namespace {

/// Bit layout shared by every in-place kernel: which bits a loop iteration
/// fixes, where the target rows land, and how many iterations there are.
struct Layout {
    std::array<int, 64> sorted{};
    int nsorted = 0;
    index_t control_mask = 0;
    std::array<index_t, std::size_t{1} << kMaxTargets> offsets{};
    std::size_t dim = 0;
    index_t ngroups = 0;

    std::span<const int> sorted_bits() const noexcept { return {sorted.data(), static_cast<std::size_t>(nsorted)}; }
};

Layout make_layout(int nqubits, std::span<const int> controls, std::span<const int> targets) {
    if (targets.empty()) throw Error(Errc::ShapeMismatch, "a gate needs at least one target");
    if (targets.size() > static_cast<std::size_t>(kMaxTargets)) {
        throw Error(Errc::TooManyTargets,
                    std::to_string(targets.size()) + " targets exceeds the cap of " + std::to_string(kMaxTargets));
    }
    Layout lay;
    index_t used = 0;
    auto claim = [&](int q, bool is_control) {
        const int p = bit_position(nqubits, q);
        const index_t bit = index_t{1} << p;
        if (used & bit) {
            throw Error(Errc::OverlappingQubits, "qubit " + std::to_string(q) + " used more than once" +
                                                     (is_control ? " (as control)" : ""));
        }
        used |= bit;
        lay.sorted[lay.nsorted++] = p;
        if (is_control) lay.control_mask |= bit;
        return bit;
    };
    const int m = static_cast<int>(targets.size());
    std::array<index_t, kMaxTargets> target_bits{};
    for (int k = 0; k < m; ++k) target_bits[k] = claim(targets[k], false);
    for (const int c : controls) claim(c, true);
    std::sort(lay.sorted.begin(), lay.sorted.begin() + lay.nsorted);

    lay.dim = std::size_t{1} << m;
    for (std::size_t r = 0; r < lay.dim; ++r) {
        index_t off = 0;
        for (int k = 0; k < m; ++k)
            if ((r >> (m - 1 - k)) & 1U) off |= target_bits[k];
        lay.offsets[r] = off;
    }
    lay.ngroups = index_t{1} << (nqubits - lay.nsorted);
    return lay;
}

template <typename Real>
std::vector<std::complex<Real>> convert(const GateMatrix& gate) {
    std::vector<std::complex<Real>> out(gate.entries().size());
    std::transform(gate.entries().begin(), gate.entries().end(), out.begin(),
                   [](const cplx& v) { return std::complex<Real>(v); });
    return out;
}

/// One gather / multiply / scatter per group. Dim > 0 fixes the matrix size
/// at compile time; Dim == 0 reads it from the layout.
template <typename Real, std::size_t Dim>
void dense_groups(StateVector<Real>& state, const std::vector<std::complex<Real>>& mat, const Layout& lay) {
    using C = std::complex<Real>;
    constexpr std::size_t kCap = Dim > 0 ? Dim : (std::size_t{1} << kMaxTargets);
    const std::size_t dim = Dim > 0 ? Dim : lay.dim;
    C* amps = state.data();
    const C* m = mat.data();
    const auto bits = lay.sorted_bits();
    const index_t cmask = lay.control_mask;
    const index_t* offsets = lay.offsets.data();
    const auto ngroups = static_cast<std::int64_t>(lay.ngroups);

#pragma omp parallel for schedule(static) if (use_parallel(state.nqubits())) num_threads(num_threads())
    for (std::int64_t g = 0; g < ngroups; ++g) {
        const index_t base = insert_zero_bits(static_cast<index_t>(g), bits) | cmask;
        std::array<C, kCap> in;
        for (std::size_t c = 0; c < dim; ++c) in[c] = amps[base | offsets[c]];
        for (std::size_t r = 0; r < dim; ++r) {
            Real re = 0, im = 0;
            const C* row = m + r * dim;
            for (std::size_t c = 0; c < dim; ++c) {
                re += row[c].real() * in[c].real() - row[c].imag() * in[c].imag();
                im += row[c].real() * in[c].imag() + row[c].imag() * in[c].real();
            }
            amps[base | offsets[r]] = C(re, im);
        }
    }
}

/// Single-target fast path with the pair formula written out.
template <typename Real>
void single_target(StateVector<Real>& state, const std::vector<std::complex<Real>>& mat, const Layout& lay) {
    using C = std::complex<Real>;
    C* amps = state.data();
    const Real m00r = mat[0].real(), m00i = mat[0].imag(), m01r = mat[1].real(), m01i = mat[1].imag();
    const Real m10r = mat[2].real(), m10i = mat[2].imag(), m11r = mat[3].real(), m11i = mat[3].imag();
    const auto bits = lay.sorted_bits();
    const index_t cmask = lay.control_mask;
    const index_t k = lay.offsets[1];
    const auto ngroups = static_cast<std::int64_t>(lay.ngroups);

#pragma omp parallel for schedule(static) if (use_parallel(state.nqubits())) num_threads(num_threads())
    for (std::int64_t g = 0; g < ngroups; ++g) {
        const index_t i1 = insert_zero_bits(static_cast<index_t>(g), bits) | cmask;
        const index_t i2 = i1 | k;
        const Real ar = amps[i1].real(), ai = amps[i1].imag();
        const Real br = amps[i2].real(), bi = amps[i2].imag();
        Real re = 0, im = 0;
        re += m00r * ar - m00i * ai;
        im += m00r * ai + m00i * ar;
        re += m01r * br - m01i * bi;
        im += m01r * bi + m01i * br;
        amps[i1] = C(re, im);
        re = 0;
        im = 0;
        re += m10r * ar - m10i * ai;
        im += m10r * ai + m10i * ar;
        re += m11r * br - m11i * bi;
        im += m11r * bi + m11i * br;
        amps[i2] = C(re, im);
    }
}

template <typename Real>
void dispatch_dense(StateVector<Real>& state, const GateMatrix& gate, const Layout& lay) {
    const auto mat = convert<Real>(gate);
    switch (gate.ntargets()) {
    case 1: single_target(state, mat, lay); break;
    case 2: dense_groups<Real, 4>(state, mat, lay); break;
    case 3: dense_groups<Real, 8>(state, mat, lay); break;
    default: dense_groups<Real, 0>(state, mat, lay); break;
    }
}

} // namespace

template <typename Real>
void apply_gate(StateVector<Real>& state, const GateMatrix& gate, std::span<const int> targets) {
    apply_controlled_gate(state, gate, {}, targets);
}

template <typename Real>
void apply_controlled_gate(StateVector<Real>& state, const GateMatrix& gate, std::span<const int> controls,
                           std::span<const int> targets) {
    if (static_cast<std::size_t>(gate.ntargets()) != targets.size()) {
        throw Error(Errc::ShapeMismatch, "gate acts on " + std::to_string(gate.ntargets()) + " qubits but " +
                                             std::to_string(targets.size()) + " targets were given");
    }
    const Layout lay = make_layout(state.nqubits(), controls, targets);
    dispatch_dense(state, gate, lay);
}

template <typename Real>
void apply_x(StateVector<Real>& state, int qubit, std::span<const int> controls) {
    const int t[] = {qubit};
    const Layout lay = make_layout(state.nqubits(), controls, t);
    auto* amps = state.data();
    const auto bits = lay.sorted_bits();
    const index_t cmask = lay.control_mask;
    const index_t k = lay.offsets[1];
    const auto ngroups = static_cast<std::int64_t>(lay.ngroups);
#pragma omp parallel for schedule(static) if (use_parallel(state.nqubits())) num_threads(num_threads())
    for (std::int64_t g = 0; g < ngroups; ++g) {
        const index_t i1 = insert_zero_bits(static_cast<index_t>(g), bits) | cmask;
        std::swap(amps[i1], amps[i1 | k]);
    }
}

template <typename Real>
void apply_y(StateVector<Real>& state, int qubit, std::span<const int> controls) {
    using C = std::complex<Real>;
    const int t[] = {qubit};
    const Layout lay = make_layout(state.nqubits(), controls, t);
    C* amps = state.data();
    const auto bits = lay.sorted_bits();
    const index_t cmask = lay.control_mask;
    const index_t k = lay.offsets[1];
    const auto ngroups = static_cast<std::int64_t>(lay.ngroups);
#pragma omp parallel for schedule(static) if (use_parallel(state.nqubits())) num_threads(num_threads())
    for (std::int64_t g = 0; g < ngroups; ++g) {
        const index_t i1 = insert_zero_bits(static_cast<index_t>(g), bits) | cmask;
        const index_t i2 = i1 | k;
        const C a = amps[i1];
        const C b = amps[i2];
        // Y = [[0, -i], [i, 0]]
        amps[i1] = C(b.imag(), -b.real());
        amps[i2] = C(-a.imag(), a.real());
    }
}

template <typename Real>
void apply_z(StateVector<Real>& state, int qubit, std::span<const int> controls) {
    const int t[] = {qubit};
    const Layout lay = make_layout(state.nqubits(), controls, t);
    auto* amps = state.data();
    const auto bits = lay.sorted_bits();
    const index_t set = lay.control_mask | lay.offsets[1];
    const auto ngroups = static_cast<std::int64_t>(lay.ngroups);
#pragma omp parallel for schedule(static) if (use_parallel(state.nqubits())) num_threads(num_threads())
    for (std::int64_t g = 0; g < ngroups; ++g) {
        const index_t i = insert_zero_bits(static_cast<index_t>(g), bits) | set;
        amps[i] = -amps[i];
    }
}

template <typename Real>
void apply_swap(StateVector<Real>& state, int qubit_a, int qubit_b, std::span<const int> controls) {
    const int t[] = {qubit_a, qubit_b};
    const Layout lay = make_layout(state.nqubits(), controls, t);
    auto* amps = state.data();
    const auto bits = lay.sorted_bits();
    const index_t cmask = lay.control_mask;
    // offsets[1] has only qubit_b set, offsets[2] only qubit_a.
    const index_t kb = lay.offsets[1];
    const index_t ka = lay.offsets[2];
    const auto ngroups = static_cast<std::int64_t>(lay.ngroups);
#pragma omp parallel for schedule(static) if (use_parallel(state.nqubits())) num_threads(num_threads())
    for (std::int64_t g = 0; g < ngroups; ++g) {
        const index_t base = insert_zero_bits(static_cast<index_t>(g), bits) | cmask;
        std::swap(amps[base | ka], amps[base | kb]);
    }
}

// ---------------------------------------------------------------------------
// Reference backends

namespace {

struct OracleMasks {
    index_t target_mask = 0;
    index_t control_mask = 0;
    std::vector<int> target_positions;
};

OracleMasks oracle_masks(int nqubits, const GateMatrix& gate, std::span<const int> targets,
                         std::span<const int> controls) {
    if (static_cast<std::size_t>(gate.ntargets()) != targets.size()) {
        throw Error(Errc::ShapeMismatch, "gate/target count mismatch");
    }
    OracleMasks m;
    index_t used = 0;
    for (const int t : targets) {
        const index_t bit = index_t{1} << bit_position(nqubits, t);
        if (used & bit) throw Error(Errc::OverlappingQubits, "duplicate qubit " + std::to_string(t));
        used |= bit;
        m.target_mask |= bit;
        m.target_positions.push_back(bit_position(nqubits, t));
    }
    for (const int c : controls) {
        const index_t bit = index_t{1} << bit_position(nqubits, c);
        if (used & bit) throw Error(Errc::OverlappingQubits, "duplicate qubit " + std::to_string(c));
        used |= bit;
        m.control_mask |= bit;
    }
    return m;
}

/// Row of `gate` addressed by the target bits of basis index i.
std::size_t gate_row(index_t i, const std::vector<int>& positions) {
    std::size_t r = 0;
    for (const int p : positions) r = (r << 1) | ((i >> p) & 1U);
    return r;
}

cplx operator_element(index_t i, index_t j, const GateMatrix& gate, const OracleMasks& m) {
    if ((i & ~m.target_mask) != (j & ~m.target_mask)) return {};
    if ((i & m.control_mask) != m.control_mask) return i == j ? cplx{1.0} : cplx{};
    return gate(gate_row(i, m.target_positions), gate_row(j, m.target_positions));
}

} // namespace

std::vector<cplx> full_operator(int nqubits, const GateMatrix& gate, std::span<const int> targets,
                                std::span<const int> controls) {
    if (nqubits > 12) throw Error(Errc::CapacityExceeded, "full operator materialization is capped at 12 qubits");
    const OracleMasks m = oracle_masks(nqubits, gate, targets, controls);
    const index_t d = index_t{1} << nqubits;
    std::vector<cplx> op(d * d);
    for (index_t i = 0; i < d; ++i)
        for (index_t j = 0; j < d; ++j) op[i * d + j] = operator_element(i, j, gate, m);
    return op;
}

template <typename Real>
StateVector<Real> dense_oracle_apply(const StateVector<Real>& state, const GateMatrix& gate,
                                     std::span<const int> targets, std::span<const int> controls) {
    if (state.nqubits() > kOracleMaxQubits) {
        throw Error(Errc::CapacityExceeded, "dense oracle is limited to " + std::to_string(kOracleMaxQubits) + " qubits");
    }
    const OracleMasks m = oracle_masks(state.nqubits(), gate, targets, controls);
    StateVector<Real> out(state.nqubits());
    const auto d = static_cast<std::int64_t>(state.size());
#pragma omp parallel for schedule(static) if (use_parallel(state.nqubits())) num_threads(num_threads())
    for (std::int64_t i = 0; i < d; ++i) {
        cplx acc{};
        for (std::int64_t j = 0; j < d; ++j) {
            const cplx u = operator_element(static_cast<index_t>(i), static_cast<index_t>(j), gate, m);
            if (u != cplx{}) acc += u * cplx(state[j]);
        }
        out[i] = std::complex<Real>(acc);
    }
    return out;
}

template <typename Real>
void einsum_apply(StateVector<Real>& state, const GateMatrix& gate, std::span<const int> targets,
                  std::span<const int> controls) {
    using C = std::complex<Real>;
    if (static_cast<std::size_t>(gate.ntargets()) != targets.size()) {
        throw Error(Errc::ShapeMismatch, "gate/target count mismatch");
    }
    std::vector<int> qubits(controls.begin(), controls.end());
    qubits.insert(qubits.end(), targets.begin(), targets.end());
    const GateMatrix full = controlled_matrix(gate, static_cast<int>(controls.size()));
    const OracleMasks m = oracle_masks(state.nqubits(), full, qubits, {});
    const auto mat = convert<Real>(full);
    const std::size_t dim = full.dim();
    std::vector<index_t> offsets(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        index_t off = 0;
        for (std::size_t k = 0; k < m.target_positions.size(); ++k)
            if ((r >> (m.target_positions.size() - 1 - k)) & 1U) off |= index_t{1} << m.target_positions[k];
        offsets[r] = off;
    }

    std::vector<C> out;
    try {
        out.resize(state.size());
    } catch (const std::bad_alloc&) {
        throw Error(Errc::ResourceError, "cannot allocate out-of-place buffer");
    }
    const C* in = state.data();
    const auto d = static_cast<std::int64_t>(state.size());
#pragma omp parallel for schedule(static) if (use_parallel(state.nqubits())) num_threads(num_threads())
    for (std::int64_t i = 0; i < d; ++i) {
        const auto idx = static_cast<index_t>(i);
        const index_t rest = idx & ~m.target_mask;
        const C* row = mat.data() + gate_row(idx, m.target_positions) * dim;
        C acc{};
        for (std::size_t c = 0; c < dim; ++c) {
            const C v = in[rest | offsets[c]];
            acc = C(acc.real() + row[c].real() * v.real() - row[c].imag() * v.imag(),
                    acc.imag() + row[c].real() * v.imag() + row[c].imag() * v.real());
        }
        out[i] = acc;
    }
    state.swap_buffer(out);
}

#define SVSIM_INSTANTIATE(Real)                                                                          \
    template void apply_gate<Real>(StateVector<Real>&, const GateMatrix&, std::span<const int>);         \
    template void apply_controlled_gate<Real>(StateVector<Real>&, const GateMatrix&, std::span<const int>, \
                                              std::span<const int>);                                     \
    template void apply_x<Real>(StateVector<Real>&, int, std::span<const int>);                          \
    template void apply_y<Real>(StateVector<Real>&, int, std::span<const int>);                          \
    template void apply_z<Real>(StateVector<Real>&, int, std::span<const int>);                          \
    template void apply_swap<Real>(StateVector<Real>&, int, int, std::span<const int>);                  \
    template StateVector<Real> dense_oracle_apply<Real>(const StateVector<Real>&, const GateMatrix&,     \
                                                        std::span<const int>, std::span<const int>);     \
    template void einsum_apply<Real>(StateVector<Real>&, const GateMatrix&, std::span<const int>,        \
                                     std::span<const int>);

SVSIM_INSTANTIATE(float)
SVSIM_INSTANTIATE(double)

#undef SVSIM_INSTANTIATE

} // namespace svsim
