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

#include <functional>
#include <string>
#include <vector>

#include "svsim/circuit.hpp"

namespace svsim {

inline constexpr int kDenseMaxQubits = 14;

/// coeff * (paulis[0] on qubits[0]) (paulis[1] on qubits[1]) ...
struct PauliTerm {
    double coeff = 0.0;
    std::string paulis;
    std::vector<int> qubits;
};

class Hamiltonian {
public:
    enum class Form { Dense, LocalSum };

    /// Row-major 2^n x 2^n matrix. Throws NonHermitian beyond 1e-10.
    static Hamiltonian dense(int nqubits, std::vector<cplx> matrix);
    /// Terms over at most two qubits each.
    static Hamiltonian local_sum(int nqubits, std::vector<PauliTerm> terms);

    Form form() const noexcept { return form_; }
    int nqubits() const noexcept { return nqubits_; }
    std::size_t dim() const noexcept { return std::size_t{1} << nqubits_; }

    const std::vector<cplx>& matrix() const;
    const std::vector<PauliTerm>& terms() const;

    /// Dense copy of either form. Capped at kDenseMaxQubits.
    std::vector<cplx> to_dense() const;

private:
    Form form_ = Form::Dense;
    int nqubits_ = 0;
    std::vector<cplx> matrix_;
    std::vector<PauliTerm> terms_;
};

/// H(s) = (1 - s)(-sum X_i) + s(-sum (Z_i Z_{i+1} + h X_i)).
struct TFIMSpec {
    int nqubits = 2;
    double h = 1.0;
    bool periodic = true;

    void validate() const;
    /// Nearest-neighbour bonds (i, i+1), with (n-1, 0) on a ring. On a
    /// two-site ring both bonds are the same pair and it is listed twice.
    std::vector<std::pair<int, int>> bonds() const;
};

/// Total time T, step dt and s(t) with s(0) = 0 and s(T) = 1.
struct AdiabaticSchedule {
    double total_time = 1.0;
    double dt = 0.01;
    std::function<double(double)> s;

    static AdiabaticSchedule linear(double total_time, double dt);

    /// Checks T, dt and the endpoint and monotonicity of s on the step grid.
    void validate() const;
    /// ceil(T / dt); the last step is shortened so the steps sum to T.
    int nsteps() const;
    /// Start and length of step k.
    std::pair<double, double> step(int k) const;
};

enum class EvolutionMethod { Dense, Trotter };

const char* method_name(EvolutionMethod m) noexcept;
EvolutionMethod parse_method(const std::string& name);

Hamiltonian tfim_hamiltonian(const TFIMSpec& spec, double s, Hamiltonian::Form form);

/// psi <- V exp(-i Lambda dt) V^dagger psi with H = V Lambda V^dagger.
template <typename Real>
void dense_step(StateVector<Real>& state, const Hamiltonian& hamiltonian, double dt);

/// Second-order step for H(s): half even-bond ZZ layer, half odd-bond ZZ
/// layer, full X layer, half odd, half even. Every factor is a Fused op.
Circuit trotter_step_circuit(const TFIMSpec& spec, double s, double dt);

/// Starts from |+>^n and applies one step per grid interval with s taken at
/// the interval midpoint.
template <typename Real>
StateVector<Real> adiabatic_evolve(const TFIMSpec& spec, const AdiabaticSchedule& schedule, EvolutionMethod method,
                                   Backend backend = Backend::InPlace);

/// <psi|H|psi> for a normalized state.
template <typename Real>
double expectation(const StateVector<Real>& state, const Hamiltonian& hamiltonian);

/// Smallest eigenvalue by dense diagonalization.
double ground_energy(const Hamiltonian& hamiltonian);

} // namespace svsim
