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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "svsim/bench.hpp"
#include "svsim/fusion.hpp"
#include "svsim/measure.hpp"
#include "svsim/parallel.hpp"
#include "svsim/qasm.hpp"

namespace svsim {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IOError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::optional<std::int64_t> proc_status_kb(const char* key) {
    std::ifstream in("/proc/self/status");
    if (!in) return std::nullopt;
    std::string line;
    const std::string prefix = std::string(key) + ":";
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) != 0) continue;
        std::istringstream fields(line.substr(prefix.size()));
        std::int64_t kb = 0;
        if (fields >> kb) return kb * 1024;
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<int> measured_qubits(const Circuit& c) {
    std::vector<int> qubits;
    for (const auto& m : c.measurements())
        if (std::find(qubits.begin(), qubits.end(), m.qubit) == qubits.end()) qubits.push_back(m.qubit);
    if (qubits.empty()) {
        qubits.resize(static_cast<std::size_t>(c.nqubits()));
        std::iota(qubits.begin(), qubits.end(), 0);
    }
    return qubits;
}

template <typename Real>
void simulate(const Circuit& circuit, const BenchConfig& config, BenchReport& report) {
    const auto rss_before = current_rss_bytes();

    StateVector<Real> state(circuit.nqubits());
    report.state_bytes = static_cast<std::int64_t>(state.size() * sizeof(typename StateVector<Real>::value_type));

    auto start = Clock::now();
    execute(circuit, state, config.backend);
    report.dry_run_s = seconds_since(start);

    std::vector<double> times;
    for (int r = 0; r < config.repeats; ++r) {
        state.reset();
        start = Clock::now();
        execute(circuit, state, config.backend);
        times.push_back(seconds_since(start));
    }
    const double mean = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());
    double var = 0.0;
    for (const double t : times) var += (t - mean) * (t - mean);
    report.simulation_s = mean;
    report.simulation_stddev_s = times.size() > 1 ? std::sqrt(var / static_cast<double>(times.size() - 1)) : 0.0;

    report.peak_rss_bytes = peak_rss_bytes();
    if (report.peak_rss_bytes && rss_before) report.delta_rss_bytes = *report.peak_rss_bytes - *rss_before;

    report.checksum = probability_checksum(state);
    const auto amp = amplitude_checksum(state);
    report.amplitude_checksum_re = amp.real();
    report.amplitude_checksum_im = amp.imag();

    if (config.shots > 0) {
        const auto qubits = measured_qubits(circuit);
        report.sampler = kMetropolisName;
        report.shots = sample_shots_metropolis(state, qubits, config.shots, config.seed).to_json();
    }
    if (config.dump_state) dump_state(state, *config.dump_state);
}

} // namespace

Fixture load_fixture(const std::string& path) {
    Fixture f;
    f.circuit = qasm::from_source(read_file(path));
    const std::string sidecar = path + ".json";
    try {
        f.provenance = nlohmann::json::parse(read_file(sidecar));
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::IOError, "malformed provenance sidecar '" + sidecar + "': " + e.what());
    }
    if (!f.provenance.is_object() || !f.provenance.contains("tool") || !f.provenance.contains("version")) {
        throw Error(Errc::IOError, "provenance sidecar '" + sidecar + "' must name \"tool\" and \"version\"");
    }
    return f;
}

std::optional<std::int64_t> peak_rss_bytes() { return proc_status_kb("VmHWM"); }
std::optional<std::int64_t> current_rss_bytes() { return proc_status_kb("VmRSS"); }

std::string hardware_descriptor() {
    std::string model = "unknown cpu";
    std::ifstream in("/proc/cpuinfo");
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("model name", 0) == 0) {
            const auto colon = line.find(':');
            if (colon != std::string::npos) model = line.substr(line.find_first_not_of(' ', colon + 1));
            break;
        }
    }
    return model + ", " + std::to_string(hardware_threads()) + " hardware threads";
}

BenchReport run_benchmark(const BenchConfig& config) {
    if (config.repeats < 1) throw Error(Errc::InvalidArgument, "repeats must be >= 1");
    set_num_threads(config.threads);

    BenchReport report;
    report.circuit = config.circuit;
    report.precision = config.precision;
    report.backend = config.backend;
    report.fuse = config.fuse;
    report.theta = config.theta;
    report.repeats = config.repeats;
    report.seed = config.seed;
    report.rng = kRngName;
    report.threads = num_threads();
    report.hardware = hardware_descriptor();

    Circuit circuit;
    if (is_generator(config.circuit)) {
        report.generated = true;
        const auto start = Clock::now();
        circuit = generate(config.circuit, config.nqubits, config.theta);
        report.build_s = seconds_since(start);
    } else {
        report.generated = false;
        const std::string source = read_file(config.circuit);
        auto start = Clock::now();
        const auto program = qasm::parse(source);
        report.parse_s = seconds_since(start);
        start = Clock::now();
        circuit = qasm::lower(program);
        report.build_s = seconds_since(start);
    }
    report.nqubits = circuit.nqubits();
    report.gates_before = gate_count(circuit);
    report.depth_before = depth(circuit);

    if (config.fuse) {
        const auto start = Clock::now();
        circuit = fuse(circuit);
        report.fuse_s = seconds_since(start);
    }
    report.gates_after = gate_count(circuit);
    report.depth_after = depth(circuit);

    if (config.precision == Precision::Single) {
        simulate<float>(circuit, config, report);
    } else {
        simulate<double>(circuit, config, report);
    }
    return report;
}

nlohmann::json BenchReport::to_json() const {
    auto optional_int = [](const std::optional<std::int64_t>& v) -> nlohmann::json {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    nlohmann::json j{
        {"circuit", circuit},
        {"nqubits", nqubits},
        {"precision", precision_name(precision)},
        {"backend", backend_name(backend)},
        {"fuse", fuse},
        {"theta", theta},
        {"generated", generated},
        {"timings",
         {{"parse_s", parse_s},
          {"build_s", build_s},
          {"fuse_s", fuse_s},
          {"dry_run_s", dry_run_s},
          {"simulation_s", simulation_s},
          {"simulation_stddev_s", simulation_stddev_s},
          {"repeats", repeats}}},
        {"gates", {{"before", gates_before}, {"after", gates_after}}},
        {"depth", {{"before", depth_before}, {"after", depth_after}}},
        {"memory",
         {{"peak_rss_bytes", optional_int(peak_rss_bytes)},
          {"delta_rss_bytes", optional_int(delta_rss_bytes)},
          {"state_bytes", state_bytes}}},
        {"checksum", checksum},
        {"amplitude_checksum", {amplitude_checksum_re, amplitude_checksum_im}},
        {"seed", seed},
        {"rng", rng},
        {"threads", threads},
        {"hardware", hardware},
    };
    if (!sampler.empty()) {
        j["sampler"] = sampler;
        j["shots"] = shots;
    }
    return j;
}

} // namespace svsim
