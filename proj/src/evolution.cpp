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

#include "svsim/evolution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <Eigen/Dense>

namespace svsim {

namespace {

constexpr double kHermitianTolerance = 1e-10;

using RowMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void check_dense_size(int nqubits) {
    if (nqubits < 1 || nqubits > kDenseMaxQubits) {
        throw Error(Errc::CapacityExceeded, "dense Hamiltonians are limited to " + std::to_string(kDenseMaxQubits) +
                                                " qubits, got " + std::to_string(nqubits));
    }
}

struct PauliAction {
    index_t flip = 0;
    index_t zmask = 0;
    index_t ymask = 0;
    int ny = 0;
};

PauliAction pauli_action(int nqubits, const PauliTerm& term) {
    PauliAction a;
    for (std::size_t j = 0; j < term.qubits.size(); ++j) {
        const index_t bit = index_t{1} << bit_position(nqubits, term.qubits[j]);
        switch (term.paulis[j]) {
        case 'I': break;
        case 'X': a.flip |= bit; break;
        case 'Y':
            a.flip |= bit;
            a.ymask |= bit;
            ++a.ny;
            break;
        case 'Z': a.zmask |= bit; break;
        default: throw Error(Errc::InvalidArgument, std::string("unknown Pauli '") + term.paulis[j] + "'");
        }
    }
    return a;
}

// <i ^ flip| P |i>. Y|0> = i|1>, Y|1> = -i|0>.
inline cplx pauli_phase(const PauliAction& a, index_t i) {
    static const cplx kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const int minus = std::popcount(i & a.zmask) + std::popcount(i & a.ymask);
    return kPowers[(a.ny + 2 * minus) & 3];
}

} // namespace

Hamiltonian Hamiltonian::dense(int nqubits, std::vector<cplx> matrix) {
    check_dense_size(nqubits);
    const std::size_t d = std::size_t{1} << nqubits;
    if (matrix.size() != d * d) throw Error(Errc::ShapeMismatch, "matrix is not 2^n x 2^n");
    double err = 0.0;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = r; c < d; ++c) err = std::max(err, std::abs(matrix[r * d + c] - std::conj(matrix[c * d + r])));
    if (err > kHermitianTolerance) {
        throw Error(Errc::NonHermitian, "max |H - H^dagger| = " + std::to_string(err));
    }
    Hamiltonian h;
    h.form_ = Form::Dense;
    h.nqubits_ = nqubits;
    h.matrix_ = std::move(matrix);
    return h;
}

Hamiltonian Hamiltonian::local_sum(int nqubits, std::vector<PauliTerm> terms) {
    if (nqubits < 1) throw Error(Errc::InvalidArgument, "Hamiltonian needs at least one qubit");
    for (const auto& t : terms) {
        if (t.qubits.empty() || t.qubits.size() > 2 || t.paulis.size() != t.qubits.size()) {
            throw Error(Errc::ShapeMismatch, "local terms act on one or two qubits with one Pauli each");
        }
        if (t.qubits.size() == 2 && t.qubits[0] == t.qubits[1]) {
            throw Error(Errc::OverlappingQubits, "local term repeats a qubit");
        }
        if (!std::isfinite(t.coeff)) throw Error(Errc::InvalidArgument, "term coefficient is not finite");
        pauli_action(nqubits, t);
    }
    Hamiltonian h;
    h.form_ = Form::LocalSum;
    h.nqubits_ = nqubits;
    h.terms_ = std::move(terms);
    return h;
}

const std::vector<cplx>& Hamiltonian::matrix() const {
    if (form_ != Form::Dense) throw Error(Errc::InvalidArgument, "Hamiltonian is not in dense form");
    return matrix_;
}

const std::vector<PauliTerm>& Hamiltonian::terms() const {
    if (form_ != Form::LocalSum) throw Error(Errc::InvalidArgument, "Hamiltonian is not a local sum");
    return terms_;
}

std::vector<cplx> Hamiltonian::to_dense() const {
    if (form_ == Form::Dense) return matrix_;
    check_dense_size(nqubits_);
    const std::size_t d = dim();
    std::vector<cplx> m(d * d);
    for (const auto& t : terms_) {
        const PauliAction a = pauli_action(nqubits_, t);
        for (index_t i = 0; i < d; ++i) m[(i ^ a.flip) * d + i] += t.coeff * pauli_phase(a, i);
    }
    return m;
}

void TFIMSpec::validate() const {
    if (nqubits < 2) throw Error(Errc::InvalidArgument, "TFIM needs at least two qubits");
    if (nqubits > max_qubits()) throw Error(Errc::CapacityExceeded, "TFIM wider than the qubit cap");
    if (!std::isfinite(h)) throw Error(Errc::InvalidArgument, "field strength is not finite");
}

std::vector<std::pair<int, int>> TFIMSpec::bonds() const {
    std::vector<std::pair<int, int>> b;
    for (int i = 0; i + 1 < nqubits; ++i) b.emplace_back(i, i + 1);
    if (periodic) b.emplace_back(nqubits - 1, 0);
    return b;
}

AdiabaticSchedule AdiabaticSchedule::linear(double total_time, double dt) {
    AdiabaticSchedule s;
    s.total_time = total_time;
    s.dt = dt;
    s.s = [total_time](double t) { return t / total_time; };
    return s;
}

void AdiabaticSchedule::validate() const {
    if (!(total_time > 0.0) || !std::isfinite(total_time)) throw Error(Errc::InvalidArgument, "T must be > 0");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(Errc::InvalidArgument, "dt must be > 0");
    if (!s) throw Error(Errc::InvalidArgument, "schedule function is empty");
    if (std::abs(s(0.0)) > 1e-12 || std::abs(s(total_time) - 1.0) > 1e-12) {
        throw Error(Errc::InvalidArgument, "schedule must satisfy s(0) = 0 and s(T) = 1");
    }
    double prev = s(0.0);
    for (int k = 0; k < nsteps(); ++k) {
        const auto [t0, len] = step(k);
        const double next = s(t0 + len);
        if (next < prev - 1e-12) throw Error(Errc::InvalidArgument, "schedule decreases on the step grid");
        prev = next;
    }
}

int AdiabaticSchedule::nsteps() const {
    const double n = std::ceil(total_time / dt - 1e-9);
    if (n > 1e9) throw Error(Errc::InvalidArgument, "too many time steps");
    return std::max(1, static_cast<int>(n));
}

std::pair<double, double> AdiabaticSchedule::step(int k) const {
    const double t0 = k * dt;
    return {t0, k + 1 == nsteps() ? total_time - t0 : dt};
}

const char* method_name(EvolutionMethod m) noexcept { return m == EvolutionMethod::Dense ? "dense" : "trotter"; }

EvolutionMethod parse_method(const std::string& name) {
    if (name == "dense") return EvolutionMethod::Dense;
    if (name == "trotter") return EvolutionMethod::Trotter;
    throw Error(Errc::InvalidArgument, "unknown evolution method '" + name + "'");
}

Hamiltonian tfim_hamiltonian(const TFIMSpec& spec, double s, Hamiltonian::Form form) {
    spec.validate();
    const double zz = -s;
    const double x = -((1.0 - s) + s * spec.h);
    const int n = spec.nqubits;

    if (form == Hamiltonian::Form::LocalSum) {
        std::vector<PauliTerm> terms;
        for (const auto& [a, b] : spec.bonds()) terms.push_back({zz, "ZZ", {a, b}});
        for (int q = 0; q < n; ++q) terms.push_back({x, "X", {q}});
        return Hamiltonian::local_sum(n, std::move(terms));
    }

    check_dense_size(n);
    const std::size_t d = std::size_t{1} << n;
    std::vector<cplx> m(d * d);
    const auto bonds = spec.bonds();
    for (index_t i = 0; i < d; ++i) {
        double diag = 0.0;
        for (const auto& [a, b] : bonds) {
            const bool differ = ((i >> bit_position(n, a)) ^ (i >> bit_position(n, b))) & 1;
            diag += differ ? -zz : zz;
        }
        m[i * d + i] = diag;
        for (int q = 0; q < n; ++q) m[(i ^ (index_t{1} << bit_position(n, q))) * d + i] += x;
    }
    return Hamiltonian::dense(n, std::move(m));
}

template <typename Real>
void dense_step(StateVector<Real>& state, const Hamiltonian& hamiltonian, double dt) {
    if (state.nqubits() != hamiltonian.nqubits()) throw Error(Errc::ShapeMismatch, "state and Hamiltonian widths differ");
    check_dense_size(hamiltonian.nqubits());
    if (dt == 0.0) return;
    const std::vector<cplx> dense =
        hamiltonian.form() == Hamiltonian::Form::Dense ? std::vector<cplx>{} : hamiltonian.to_dense();
    const cplx* data = hamiltonian.form() == Hamiltonian::Form::Dense ? hamiltonian.matrix().data() : dense.data();
    const auto d = static_cast<Eigen::Index>(hamiltonian.dim());

    const Eigen::MatrixXcd h = Eigen::Map<const RowMatrix>(data, d, d);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) throw Error(Errc::ResourceError, "eigendecomposition did not converge");
    const auto& v = solver.eigenvectors();
    const auto& lambda = solver.eigenvalues();

    Eigen::VectorXcd psi(d);
    for (Eigen::Index i = 0; i < d; ++i) psi[i] = cplx(state[static_cast<index_t>(i)]);
    Eigen::VectorXcd c = v.adjoint() * psi;
    for (Eigen::Index k = 0; k < d; ++k) c[k] *= std::polar(1.0, -lambda[k] * dt);
    psi = v * c;
    for (Eigen::Index i = 0; i < d; ++i) state[static_cast<index_t>(i)] = std::complex<Real>(psi[i]);
}

Circuit trotter_step_circuit(const TFIMSpec& spec, double s, double dt) {
    spec.validate();
    if (!(s >= 0.0 && s <= 1.0)) throw Error(Errc::InvalidArgument, "s must lie in [0, 1]");
    const double zz = -s;
    const double x = -((1.0 - s) + s * spec.h);

    // exp(-i zz Z Z dt/2)
    const double half = zz * dt / 2.0;
    const cplx e = std::polar(1.0, -half);
    const GateMatrix zz_half(2, {e, 0, 0, 0, 0, std::conj(e), 0, 0, 0, 0, std::conj(e), 0, 0, 0, 0, e});
    // exp(-i x X dt)
    const double c = std::cos(x * dt), sn = std::sin(x * dt);
    const GateMatrix x_full(1, {c, cplx(0, -sn), cplx(0, -sn), c});

    const auto bonds = spec.bonds();
    Circuit circuit(spec.nqubits);
    auto layer = [&](int parity) {
        for (std::size_t i = 0; i < bonds.size(); ++i)
            if (static_cast<int>(i % 2) == parity) circuit.add(gates::fused({bonds[i].first, bonds[i].second}, zz_half));
    };
    layer(0);
    layer(1);
    for (int q = 0; q < spec.nqubits; ++q) circuit.add(gates::fused({q}, x_full));
    layer(1);
    layer(0);
    return circuit;
}

template <typename Real>
StateVector<Real> adiabatic_evolve(const TFIMSpec& spec, const AdiabaticSchedule& schedule, EvolutionMethod method,
                                   Backend backend) {
    spec.validate();
    schedule.validate();
    if (method == EvolutionMethod::Dense) check_dense_size(spec.nqubits);

    StateVector<Real> state(spec.nqubits);
    const Real amp = static_cast<Real>(1.0 / std::sqrt(static_cast<double>(state.size())));
    for (index_t i = 0; i < state.size(); ++i) state[i] = amp;

    for (int k = 0; k < schedule.nsteps(); ++k) {
        const auto [t0, len] = schedule.step(k);
        const double s = std::clamp(schedule.s(t0 + len / 2.0), 0.0, 1.0);
        if (method == EvolutionMethod::Dense) {
            dense_step(state, tfim_hamiltonian(spec, s, Hamiltonian::Form::Dense), len);
        } else {
            execute(trotter_step_circuit(spec, s, len), state, backend);
        }
    }
    return state;
}

template <typename Real>
double expectation(const StateVector<Real>& state, const Hamiltonian& hamiltonian) {
    if (state.nqubits() != hamiltonian.nqubits()) throw Error(Errc::ShapeMismatch, "state and Hamiltonian widths differ");
    const index_t d = state.size();
    cplx sum{};
    if (hamiltonian.form() == Hamiltonian::Form::Dense) {
        const auto& m = hamiltonian.matrix();
        for (index_t r = 0; r < d; ++r) {
            cplx row{};
            for (index_t c = 0; c < d; ++c) row += m[r * d + c] * cplx(state[c]);
            sum += std::conj(cplx(state[r])) * row;
        }
        return sum.real();
    }
    for (const auto& t : hamiltonian.terms()) {
        const PauliAction a = pauli_action(state.nqubits(), t);
        cplx term{};
        for (index_t i = 0; i < d; ++i) term += std::conj(cplx(state[i ^ a.flip])) * pauli_phase(a, i) * cplx(state[i]);
        sum += t.coeff * term;
    }
    return sum.real();
}

double ground_energy(const Hamiltonian& hamiltonian) {
    const std::vector<cplx> m = hamiltonian.to_dense();
    const auto d = static_cast<Eigen::Index>(hamiltonian.dim());
    const Eigen::MatrixXcd h = Eigen::Map<const RowMatrix>(m.data(), d, d);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error(Errc::ResourceError, "eigendecomposition did not converge");
    return solver.eigenvalues()[0];
}

#define SVSIM_INSTANTIATE(Real)                                                                                   \
    template void dense_step<Real>(StateVector<Real>&, const Hamiltonian&, double);                              \
    template StateVector<Real> adiabatic_evolve<Real>(const TFIMSpec&, const AdiabaticSchedule&, EvolutionMethod, \
                                                      Backend);                                                   \
    template double expectation<Real>(const StateVector<Real>&, const Hamiltonian&);

SVSIM_INSTANTIATE(float)
SVSIM_INSTANTIATE(double)

#undef SVSIM_INSTANTIATE

} // namespace svsim
