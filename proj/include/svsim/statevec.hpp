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
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "svsim/errors.hpp"

namespace svsim {

using index_t = std::uint64_t;

enum class Precision { Single, Double };

const char* precision_name(Precision p) noexcept;
Precision parse_precision(const std::string& name);

inline constexpr int kDefaultMaxQubits = 34;

/// Process-wide cap on the number of qubits a state may hold.
int max_qubits() noexcept;
void set_max_qubits(int cap);

/// Qubit 0 is the most significant bit of a basis-state index. Every kernel
/// goes through this function to translate a qubit label to a bit position.
inline int bit_position(int nqubits, int qubit) {
    if (qubit < 0 || qubit >= nqubits) {
        throw Error(Errc::IndexOutOfRange,
                    "qubit " + std::to_string(qubit) + " not in [0, " + std::to_string(nqubits) + ")");
    }
    return nqubits - 1 - qubit;
}

/// Dense array of 2^n amplitudes. The precision is fixed by the template
/// argument for the lifetime of the object.
template <typename Real>
class StateVector {
    static_assert(std::is_same_v<Real, float> || std::is_same_v<Real, double>);

public:
    using real_type = Real;
    using value_type = std::complex<Real>;

    StateVector() = default;

    /// |0...0>. Throws CapacityExceeded above max_qubits() and ResourceError
    /// when the allocation fails.
    explicit StateVector(int nqubits);

    static StateVector from_amplitudes(std::vector<value_type> amps);

    static constexpr Precision precision() noexcept {
        return std::is_same_v<Real, float> ? Precision::Single : Precision::Double;
    }

    int nqubits() const noexcept { return nqubits_; }
    index_t size() const noexcept { return amps_.size(); }

    value_type* data() noexcept { return amps_.data(); }
    const value_type* data() const noexcept { return amps_.data(); }
    std::span<value_type> amplitudes() noexcept { return amps_; }
    std::span<const value_type> amplitudes() const noexcept { return amps_; }

    value_type& operator[](index_t i) noexcept { return amps_[i]; }
    const value_type& operator[](index_t i) const noexcept { return amps_[i]; }

    /// Resets to |0...0> without reallocating.
    void reset();

    /// Exchanges the amplitude buffers. Used by the out-of-place backends.
    void swap_buffer(std::vector<value_type>& other);

    int bit_position(int qubit) const { return svsim::bit_position(nqubits_, qubit); }

private:
    int nqubits_ = 0;
    std::vector<value_type> amps_;
};

using StateVectorF = StateVector<float>;
using StateVectorD = StateVector<double>;

template <typename Real>
StateVector<Real> zero_state(int nqubits) {
    return StateVector<Real>(nqubits);
}

/// Euclidean norm, accumulated in double regardless of precision.
template <typename Real>
double norm(const StateVector<Real>& state);

/// Sum of |amp|^2 over every stride-th amplitude, stride = max(1, 2^n / 4096).
/// Equals the squared norm up to 12 qubits.
template <typename Real>
double probability_checksum(const StateVector<Real>& state);

/// Strided sample of the amplitudes themselves (phase sensitive).
template <typename Real>
std::complex<double> amplitude_checksum(const StateVector<Real>& state);

/// Writes little-endian interleaved (re, im) values to `path` and a JSON
/// sidecar {nqubits, precision, checksum} to `path + ".json"`.
template <typename Real>
void dump_state(const StateVector<Real>& state, const std::string& path);

template <typename Real>
StateVector<Real> load_state(const std::string& path);

} // namespace svsim
