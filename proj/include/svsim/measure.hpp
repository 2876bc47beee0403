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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "svsim/statevec.hpp"

namespace svsim {

/// Largest measured-qubit count whose marginal is materialized.
inline constexpr int kMaxMarginalQubits = 28;

/// Identifiers recorded in benchmark reports.
inline constexpr const char* kRngName = "mt19937_64";
inline constexpr const char* kMetropolisName = "metropolis-marginal-flip-or-uniform";
inline constexpr const char* kDirectName = "inverse-cdf";

struct ShotResult {
    std::uint64_t nshots = 0;
    /// Bitstring over the measured qubits, first measured qubit leftmost.
    std::map<std::string, std::uint64_t> frequencies;

    nlohmann::json to_json() const;
    friend bool operator==(const ShotResult&, const ShotResult&) = default;
};

struct MetropolisOptions {
    /// 0 selects max(100, nshots / 10).
    std::uint64_t burn_in = 0;
    /// Chain steps per recorded shot. Successive states are correlated; at
    /// 10 the recorded shots are close to independent draws.
    std::uint64_t thinning = 10;
};

/// Marginal Born probabilities over `qubits`; outcome index r has the bit of
/// qubits[j] at position |qubits| - 1 - j.
template <typename Real>
std::vector<double> probabilities(const StateVector<Real>& state, std::span<const int> qubits);

/// Projects onto `outcome` (index convention as above) and renormalizes.
/// Throws ZeroProbabilityOutcome when P(outcome) <= 1e-14.
template <typename Real>
void collapse(StateVector<Real>& state, std::span<const int> qubits, std::uint64_t outcome);

/// Same, with the outcome given as a '0'/'1' string, first qubit leftmost.
template <typename Real>
void collapse(StateVector<Real>& state, std::span<const int> qubits, const std::string& outcome);

/// Metropolis chain over the measured marginal. Each step proposes either a
/// single measured-bit flip or a uniformly drawn outcome (equal odds) and
/// accepts with min(1, p'/p).
template <typename Real>
ShotResult sample_shots_metropolis(const StateVector<Real>& state, std::span<const int> qubits,
                                   std::uint64_t nshots, std::uint64_t seed, const MetropolisOptions& options = {});

/// Exact multinomial sampling by inverse CDF over the marginal.
template <typename Real>
ShotResult sample_shots_direct(const StateVector<Real>& state, std::span<const int> qubits, std::uint64_t nshots,
                               std::uint64_t seed);

std::string outcome_bitstring(std::uint64_t outcome, int nbits);

} // namespace svsim
