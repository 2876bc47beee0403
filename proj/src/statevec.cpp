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

#include "svsim/statevec.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <new>

#include <nlohmann/json.hpp>

#include "svsim/parallel.hpp"

namespace svsim {

namespace {

std::atomic<int> g_max_qubits{kDefaultMaxQubits};

constexpr index_t kChecksumSamples = 4096;

index_t checksum_stride(index_t size) {
    return std::max<index_t>(1, size / kChecksumSamples);
}

} // namespace

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::ResourceError: return "ResourceError";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::TooManyTargets: return "TooManyTargets";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::OverlappingQubits: return "OverlappingQubits";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnsupportedGate: return "UnsupportedGate";
    case Errc::UndeclaredRegister: return "UndeclaredRegister";
    case Errc::NotEmittable: return "NotEmittable";
    case Errc::UnsupportedMaxQubits: return "UnsupportedMaxQubits";
    case Errc::ZeroProbabilityOutcome: return "ZeroProbabilityOutcome";
    case Errc::NonHermitian: return "NonHermitian";
    case Errc::OddQubits: return "OddQubits";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IOError: return "IOError";
    }
    return "Unknown";
}

const char* precision_name(Precision p) noexcept {
    return p == Precision::Single ? "single" : "double";
}

Precision parse_precision(const std::string& name) {
    if (name == "single" || name == "complex64") return Precision::Single;
    if (name == "double" || name == "complex128") return Precision::Double;
    throw Error(Errc::InvalidArgument, "unknown precision '" + name + "'");
}

int max_qubits() noexcept { return g_max_qubits.load(std::memory_order_relaxed); }

void set_max_qubits(int cap) {
    if (cap < 1 || cap > 62) throw Error(Errc::InvalidArgument, "qubit cap must be in [1, 62]");
    g_max_qubits.store(cap, std::memory_order_relaxed);
}

template <typename Real>
StateVector<Real>::StateVector(int nqubits) : nqubits_(nqubits) {
    if (nqubits < 1) throw Error(Errc::InvalidArgument, "a state needs at least one qubit");
    if (nqubits > max_qubits()) {
        throw Error(Errc::CapacityExceeded,
                    std::to_string(nqubits) + " qubits exceeds the cap of " + std::to_string(max_qubits()));
    }
    try {
        amps_.assign(index_t{1} << nqubits, value_type{});
    } catch (const std::bad_alloc&) {
        throw Error(Errc::ResourceError, "cannot allocate " + std::to_string(nqubits) + "-qubit state");
    } catch (const std::length_error&) {
        throw Error(Errc::ResourceError, "cannot allocate " + std::to_string(nqubits) + "-qubit state");
    }
    amps_[0] = value_type{1};
}

template <typename Real>
StateVector<Real> StateVector<Real>::from_amplitudes(std::vector<value_type> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw Error(Errc::ShapeMismatch, "amplitude count must be a power of two >= 2");
    }
    const int n = std::countr_zero(amps.size());
    if (n > max_qubits()) throw Error(Errc::CapacityExceeded, "state exceeds the qubit cap");
    StateVector s;
    s.nqubits_ = n;
    s.amps_ = std::move(amps);
    return s;
}

template <typename Real>
void StateVector<Real>::reset() {
    std::fill(amps_.begin(), amps_.end(), value_type{});
    if (!amps_.empty()) amps_[0] = value_type{1};
}

template <typename Real>
void StateVector<Real>::swap_buffer(std::vector<value_type>& other) {
    if (other.size() != amps_.size()) throw Error(Errc::ShapeMismatch, "buffer size differs from state size");
    amps_.swap(other);
}

template <typename Real>
double norm(const StateVector<Real>& state) {
    const auto* a = state.data();
    const auto size = static_cast<std::int64_t>(state.size());
    double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static) if (use_parallel(state.nqubits()))           \
    num_threads(num_threads())
    for (std::int64_t i = 0; i < size; ++i) {
        const double re = a[i].real();
        const double im = a[i].imag();
        sum += re * re + im * im;
    }
    return std::sqrt(sum);
}

template <typename Real>
double probability_checksum(const StateVector<Real>& state) {
    const index_t stride = checksum_stride(state.size());
    double sum = 0.0;
    for (index_t i = 0; i < state.size(); i += stride) sum += std::norm(std::complex<double>(state[i]));
    return sum;
}

template <typename Real>
std::complex<double> amplitude_checksum(const StateVector<Real>& state) {
    const index_t stride = checksum_stride(state.size());
    std::complex<double> sum{};
    for (index_t i = 0; i < state.size(); i += stride) sum += std::complex<double>(state[i]);
    return sum;
}

template <typename Real>
void dump_state(const StateVector<Real>& state, const std::string& path) {
    static_assert(std::endian::native == std::endian::little, "state dumps assume a little-endian host");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::IOError, "cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(state.data()),
              static_cast<std::streamsize>(state.size() * sizeof(typename StateVector<Real>::value_type)));
    if (!out) throw Error(Errc::IOError, "short write to '" + path + "'");

    nlohmann::json sidecar{{"nqubits", state.nqubits()},
                           {"precision", precision_name(StateVector<Real>::precision())},
                           {"checksum", probability_checksum(state)}};
    std::ofstream meta(path + ".json");
    if (!meta) throw Error(Errc::IOError, "cannot open '" + path + ".json' for writing");
    meta << sidecar.dump(2) << '\n';
}

template <typename Real>
StateVector<Real> load_state(const std::string& path) {
    std::ifstream meta(path + ".json");
    if (!meta) throw Error(Errc::IOError, "missing sidecar '" + path + ".json'");
    nlohmann::json sidecar;
    try {
        meta >> sidecar;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::IOError, std::string("bad sidecar: ") + e.what());
    }
    if (parse_precision(sidecar.at("precision").get<std::string>()) != StateVector<Real>::precision()) {
        throw Error(Errc::ShapeMismatch, "dump precision differs from requested precision");
    }
    const int n = sidecar.at("nqubits").get<int>();
    StateVector<Real> state(n);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IOError, "cannot open '" + path + "'");
    in.read(reinterpret_cast<char*>(state.data()),
            static_cast<std::streamsize>(state.size() * sizeof(typename StateVector<Real>::value_type)));
    if (in.gcount() != static_cast<std::streamsize>(state.size() * sizeof(typename StateVector<Real>::value_type))) {
        throw Error(Errc::IOError, "truncated state dump '" + path + "'");
    }
    return state;
}

template class StateVector<float>;
template class StateVector<double>;

#define SVSIM_INSTANTIATE(Real)                                                                          \
    template double norm<Real>(const StateVector<Real>&);                                                \
    template double probability_checksum<Real>(const StateVector<Real>&);                                \
    template std::complex<double> amplitude_checksum<Real>(const StateVector<Real>&);                    \
    template void dump_state<Real>(const StateVector<Real>&, const std::string&);                        \
    template StateVector<Real> load_state<Real>(const std::string&);

SVSIM_INSTANTIATE(float)
SVSIM_INSTANTIATE(double)

#undef SVSIM_INSTANTIATE

} // namespace svsim
