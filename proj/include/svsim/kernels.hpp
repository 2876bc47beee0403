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

#include <complex>
#include <span>
#include <vector>

#include "svsim/statevec.hpp"

namespace svsim {

using cplx = std::complex<double>;

inline constexpr int kMaxTargets = 8;
inline constexpr int kOracleMaxQubits = 14;

/// Square 2^m x 2^m matrix, row-major. For a gate on targets [t0, t1, ...]
/// the first listed target is the most significant bit of the row index.
class GateMatrix {
public:
    GateMatrix() = default;
    GateMatrix(int ntargets, std::vector<cplx> entries, bool checked = false);

    static GateMatrix identity(int ntargets);

    int ntargets() const noexcept { return ntargets_; }
    std::size_t dim() const noexcept { return std::size_t{1} << ntargets_; }

    /// True when the matrix came from the named gate library and passed the
    /// unitarity check; arbitrary (fused) matrices are accepted unchecked.
    bool checked() const noexcept { return checked_; }

    cplx& operator()(std::size_t row, std::size_t col) noexcept { return entries_[row * dim() + col]; }
    const cplx& operator()(std::size_t row, std::size_t col) const noexcept { return entries_[row * dim() + col]; }

    std::span<const cplx> entries() const noexcept { return entries_; }

    GateMatrix adjoint() const;
    /// Max-norm distance of G^dagger G from the identity.
    double unitarity_error() const;
    double max_abs_diff(const GateMatrix& other) const;

    friend GateMatrix operator*(const GateMatrix& a, const GateMatrix& b);

private:
    int ntargets_ = 0;
    std::vector<cplx> entries_;
    bool checked_ = false;
};

/// Expands `gate` to act on [controls..., targets...]: identity except on the
/// block where every control bit is 1.
GateMatrix controlled_matrix(const GateMatrix& gate, int ncontrols);

struct IndexPair {
    index_t first;
    index_t second;

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// The g-th pair of indices differing only in bit `target_bit`.
constexpr IndexPair index_pair(index_t g, int target_bit) noexcept {
    const index_t k = index_t{1} << target_bit;
    const index_t i1 = ((g >> target_bit) << (target_bit + 1)) | (g & (k - 1));
    return {i1, i1 | k};
}

/// Inserts a zero at each bit position of `sorted_bits` (ascending) into g.
constexpr index_t insert_zero_bits(index_t g, std::span<const int> sorted_bits) noexcept {
    for (const int p : sorted_bits) {
        const index_t low = (index_t{1} << p) - 1;
        g = ((g >> p) << (p + 1)) | (g & low);
    }
    return g;
}

/// All 2^m indices obtained by filling the bit positions `target_bits`
/// (strictly increasing) of the compressed index g. Entry r has bit j of r
/// placed at target_bits[j].
std::vector<index_t> multi_index_tuple(index_t g, std::span<const int> target_bits);

/// In-place application of `gate` on `targets`. No 2^n temporary.
template <typename Real>
void apply_gate(StateVector<Real>& state, const GateMatrix& gate, std::span<const int> targets);

/// In-place application restricted to the subspace where every control is 1.
template <typename Real>
void apply_controlled_gate(StateVector<Real>& state, const GateMatrix& gate, std::span<const int> controls,
                           std::span<const int> targets);

template <typename Real>
void apply_x(StateVector<Real>& state, int qubit, std::span<const int> controls = {});
template <typename Real>
void apply_y(StateVector<Real>& state, int qubit, std::span<const int> controls = {});
template <typename Real>
void apply_z(StateVector<Real>& state, int qubit, std::span<const int> controls = {});
template <typename Real>
void apply_swap(StateVector<Real>& state, int qubit_a, int qubit_b, std::span<const int> controls = {});

/// Reference backend: multiplies the state by the full 2^n x 2^n operator
/// (identity padding plus control projection), element by element. Returns
/// a new state. Limited to kOracleMaxQubits.
template <typename Real>
StateVector<Real> dense_oracle_apply(const StateVector<Real>& state, const GateMatrix& gate,
                                     std::span<const int> targets, std::span<const int> controls = {});

/// Materialized full operator, row-major 2^n x 2^n. For tests (n <= 12).
std::vector<cplx> full_operator(int nqubits, const GateMatrix& gate, std::span<const int> targets,
                                std::span<const int> controls = {});

/// Out-of-place contraction: every gate (controls folded into a dense
/// matrix) is contracted into a freshly allocated 2^n buffer which then
/// replaces the state. Mirrors einsum-based simulators.
template <typename Real>
void einsum_apply(StateVector<Real>& state, const GateMatrix& gate, std::span<const int> targets,
                  std::span<const int> controls = {});

} // namespace svsim
