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

#include "svsim/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "svsim/parallel.hpp"

namespace svsim {

namespace {

constexpr double kCollapseEpsilon = 1e-14;

// Draws are derived from raw 64-bit words by fixed arithmetic so the stream
// does not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 engine_;
};

struct Selection {
    std::vector<int> positions;
    index_t mask = 0;
};

Selection select(int nqubits, std::span<const int> qubits) {
    if (static_cast<int>(qubits.size()) > kMaxMarginalQubits) {
        throw Error(Errc::CapacityExceeded, "marginal over " + std::to_string(qubits.size()) + " qubits exceeds the cap of " +
                                                std::to_string(kMaxMarginalQubits));
    }
    Selection sel;
    for (const int q : qubits) {
        const int p = bit_position(nqubits, q);
        const index_t bit = index_t{1} << p;
        if (sel.mask & bit) throw Error(Errc::OverlappingQubits, "qubit " + std::to_string(q) + " listed twice");
        sel.mask |= bit;
        sel.positions.push_back(p);
    }
    return sel;
}

inline std::uint64_t gather(index_t i, const std::vector<int>& positions) {
    std::uint64_t r = 0;
    for (const int p : positions) r = (r << 1) | ((i >> p) & 1);
    return r;
}

inline index_t scatter(std::uint64_t outcome, const std::vector<int>& positions) {
    index_t v = 0;
    const std::size_t m = positions.size();
    for (std::size_t j = 0; j < m; ++j)
        if ((outcome >> (m - 1 - j)) & 1) v |= index_t{1} << positions[j];
    return v;
}

ShotResult make_result(const std::vector<std::uint64_t>& counts, int nbits, std::uint64_t nshots) {
    ShotResult res;
    res.nshots = nshots;
    for (std::size_t r = 0; r < counts.size(); ++r)
        if (counts[r] > 0) res.frequencies.emplace(outcome_bitstring(r, nbits), counts[r]);
    return res;
}

} // namespace

std::string outcome_bitstring(std::uint64_t outcome, int nbits) {
    std::string s(static_cast<std::size_t>(nbits), '0');
    for (int j = 0; j < nbits; ++j)
        if ((outcome >> (nbits - 1 - j)) & 1) s[static_cast<std::size_t>(j)] = '1';
    return s;
}

nlohmann::json ShotResult::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [bits, count] : frequencies) j[bits] = count;
    return j;
}

template <typename Real>
std::vector<double> probabilities(const StateVector<Real>& state, std::span<const int> qubits) {
    const Selection sel = select(state.nqubits(), qubits);
    const std::size_t m = qubits.size();
    std::vector<double> probs(std::size_t{1} << m, 0.0);
    const auto* amps = state.data();
    const index_t size = state.size();

    // Identity layout: the marginal is the full distribution.
    bool identity = m == static_cast<std::size_t>(state.nqubits());
    for (std::size_t j = 0; identity && j < m; ++j) identity = qubits[j] == static_cast<int>(j);
    if (identity) {
        double* out = probs.data();
#pragma omp parallel for schedule(static) if (use_parallel(state.nqubits())) num_threads(num_threads())
        for (index_t i = 0; i < size; ++i) out[i] = std::norm(std::complex<double>(amps[i]));
        return probs;
    }

    if (use_parallel(state.nqubits()) && m <= 16) {
#pragma omp parallel num_threads(num_threads())
        {
            std::vector<double> local(probs.size(), 0.0);
#pragma omp for schedule(static)
            for (index_t i = 0; i < size; ++i) local[gather(i, sel.positions)] += std::norm(std::complex<double>(amps[i]));
#pragma omp critical
            for (std::size_t r = 0; r < probs.size(); ++r) probs[r] += local[r];
        }
        return probs;
    }

    for (index_t i = 0; i < size; ++i) probs[gather(i, sel.positions)] += std::norm(std::complex<double>(amps[i]));
    return probs;
}

template <typename Real>
void collapse(StateVector<Real>& state, std::span<const int> qubits, std::uint64_t outcome) {
    const Selection sel = select(state.nqubits(), qubits);
    if (qubits.size() < 64 && (outcome >> qubits.size()) != 0) {
        throw Error(Errc::InvalidArgument, "outcome has more bits than measured qubits");
    }
    const index_t value = scatter(outcome, sel.positions);
    auto* amps = state.data();
    const index_t size = state.size();
    const index_t mask = sel.mask;

    double p = 0.0;
#pragma omp parallel for reduction(+ : p) schedule(static) if (use_parallel(state.nqubits())) num_threads(num_threads())
    for (index_t i = 0; i < size; ++i)
        if ((i & mask) == value) p += std::norm(std::complex<double>(amps[i]));
    if (!(p > kCollapseEpsilon)) {
        throw Error(Errc::ZeroProbabilityOutcome,
                    "outcome " + outcome_bitstring(outcome, static_cast<int>(qubits.size())) + " has probability " +
                        std::to_string(p));
    }
    const Real scale = static_cast<Real>(1.0 / std::sqrt(p));
#pragma omp parallel for schedule(static) if (use_parallel(state.nqubits())) num_threads(num_threads())
    for (index_t i = 0; i < size; ++i) {
        if ((i & mask) == value) {
            amps[i] *= scale;
        } else {
            amps[i] = {};
        }
    }
}

template <typename Real>
void collapse(StateVector<Real>& state, std::span<const int> qubits, const std::string& outcome) {
    if (outcome.size() != qubits.size() || outcome.find_first_not_of("01") != std::string::npos) {
        throw Error(Errc::InvalidArgument, "outcome '" + outcome + "' is not a bitstring of length " +
                                               std::to_string(qubits.size()));
    }
    std::uint64_t r = 0;
    for (const char c : outcome) r = (r << 1) | static_cast<std::uint64_t>(c == '1');
    collapse(state, qubits, r);
}

template <typename Real>
ShotResult sample_shots_metropolis(const StateVector<Real>& state, std::span<const int> qubits,
                                   std::uint64_t nshots, std::uint64_t seed, const MetropolisOptions& options) {
    if (nshots == 0) throw Error(Errc::InvalidArgument, "nshots must be >= 1");
    if (options.thinning == 0) throw Error(Errc::InvalidArgument, "thinning must be >= 1");
    const std::vector<double> probs = probabilities(state, qubits);
    const int m = static_cast<int>(qubits.size());
    const std::uint64_t outcomes = probs.size();
    Rng rng(seed);

    std::uint64_t cur = rng.below(outcomes);
    if (probs[cur] <= 0.0) cur = static_cast<std::uint64_t>(std::max_element(probs.begin(), probs.end()) - probs.begin());
    double pcur = probs[cur];

    auto step = [&] {
        std::uint64_t prop;
        if (m > 0 && rng.uniform() < 0.5) {
            prop = cur ^ (std::uint64_t{1} << rng.below(static_cast<std::uint64_t>(m)));
        } else {
            prop = rng.below(outcomes);
        }
        const double pprop = probs[prop];
        if (pprop >= pcur || rng.uniform() * pcur < pprop) {
            cur = prop;
            pcur = pprop;
        }
    };

    const std::uint64_t burn_in = options.burn_in > 0 ? options.burn_in : std::max<std::uint64_t>(100, nshots / 10);
    for (std::uint64_t s = 0; s < burn_in; ++s) step();

    std::vector<std::uint64_t> counts(outcomes, 0);
    for (std::uint64_t shot = 0; shot < nshots; ++shot) {
        for (std::uint64_t k = 0; k < options.thinning; ++k) step();
        ++counts[cur];
    }
    return make_result(counts, m, nshots);
}

template <typename Real>
ShotResult sample_shots_direct(const StateVector<Real>& state, std::span<const int> qubits, std::uint64_t nshots,
                               std::uint64_t seed) {
    if (nshots == 0) throw Error(Errc::InvalidArgument, "nshots must be >= 1");
    std::vector<double> cdf = probabilities(state, qubits);
    for (std::size_t r = 1; r < cdf.size(); ++r) cdf[r] += cdf[r - 1];
    const double total = cdf.back();
    if (!(total > 0.0)) throw Error(Errc::ZeroProbabilityOutcome, "state has zero norm");
    Rng rng(seed);

    std::vector<std::uint64_t> counts(cdf.size(), 0);
    for (std::uint64_t shot = 0; shot < nshots; ++shot) {
        const double u = rng.uniform() * total;
        // cdf[r - 1] <= u < cdf[r], so outcome r has nonzero probability.
        std::size_t r = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (r == cdf.size()) {
            r = cdf.size() - 1;
            while (r > 0 && cdf[r] == cdf[r - 1]) --r;
        }
        ++counts[r];
    }
    return make_result(counts, static_cast<int>(qubits.size()), nshots);
}

#define SVSIM_INSTANTIATE(Real)                                                                                  \
    template std::vector<double> probabilities<Real>(const StateVector<Real>&, std::span<const int>);            \
    template void collapse<Real>(StateVector<Real>&, std::span<const int>, std::uint64_t);                      \
    template void collapse<Real>(StateVector<Real>&, std::span<const int>, const std::string&);                 \
    template ShotResult sample_shots_metropolis<Real>(const StateVector<Real>&, std::span<const int>,           \
                                                      std::uint64_t, std::uint64_t, const MetropolisOptions&);   \
    template ShotResult sample_shots_direct<Real>(const StateVector<Real>&, std::span<const int>, std::uint64_t, \
                                                  std::uint64_t);

SVSIM_INSTANTIATE(float)
SVSIM_INSTANTIATE(double)

#undef SVSIM_INSTANTIATE

} // namespace svsim
