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
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "svsim/circuit.hpp"

namespace svsim {

/// H on each qubit followed by its controlled-phase ladder, then the SWAP
/// reversal. n + n(n-1)/2 + n/2 gates.
Circuit gen_qft(int nqubits);

/// Two RY layers, each followed by a brick of CZ pairs; the second brick is
/// shifted by one and wraps around. 3n gates, depth 4. n must be even.
Circuit gen_variational(int nqubits, double theta = 0.1);

/// Bernstein-Vazirani with the all-ones secret; the last qubit is the
/// ancilla. 3n - 1 gates, depth n + 2.
Circuit gen_bv(int nqubits);

bool is_generator(const std::string& name) noexcept;
Circuit generate(const std::string& name, int nqubits, double theta = 0.1);

struct Fixture {
    Circuit circuit;
    nlohmann::json provenance;
};

/// Parses a QASM fixture and its `<path>.json` provenance sidecar (which
/// must name at least "tool" and "version").
Fixture load_fixture(const std::string& path);

struct BenchConfig {
    /// Generator name (qft, variational, bv) or a path to a .qasm file.
    std::string circuit = "qft";
    int nqubits = 10;
    Backend backend = Backend::InPlace;
    Precision precision = Precision::Double;
    bool fuse = false;
    int repeats = 1;
    int threads = 0;
    std::uint64_t seed = 1234;
    double theta = 0.1;
    /// Shots drawn from the final state; 0 disables sampling.
    std::uint64_t shots = 0;
    std::optional<std::string> dump_state;
};

/// Timing record of one benchmark. Serializes to the layout described by
/// schemas/bench_report.schema.json.
struct BenchReport {
    std::string circuit;
    int nqubits = 0;
    Precision precision = Precision::Double;
    Backend backend = Backend::InPlace;
    bool fuse = false;
    double theta = 0.0;
    bool generated = true;

    double parse_s = 0.0;
    double build_s = 0.0;
    double fuse_s = 0.0;
    double dry_run_s = 0.0;
    double simulation_s = 0.0;
    double simulation_stddev_s = 0.0;
    int repeats = 0;

    std::size_t gates_before = 0;
    int depth_before = 0;
    std::size_t gates_after = 0;
    int depth_after = 0;

    std::optional<std::int64_t> peak_rss_bytes;
    std::optional<std::int64_t> delta_rss_bytes;
    std::int64_t state_bytes = 0;

    double checksum = 0.0;
    double amplitude_checksum_re = 0.0;
    double amplitude_checksum_im = 0.0;

    std::uint64_t seed = 0;
    std::string rng;
    std::string sampler;
    int threads = 1;
    std::string hardware;
    nlohmann::json shots;

    nlohmann::json to_json() const;
};

BenchReport run_benchmark(const BenchConfig& config);

/// Peak and current resident set size of this process, when /proc exposes them.
std::optional<std::int64_t> peak_rss_bytes();
std::optional<std::int64_t> current_rss_bytes();
std::string hardware_descriptor();

} // namespace svsim
