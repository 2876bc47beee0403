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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numeric>

#include "random.hpp"
#include "svsim/bench.hpp"
#include "svsim/fusion.hpp"
#include "svsim/measure.hpp"

namespace svsim {
namespace {

namespace fs = std::filesystem;

nlohmann::json load_schema() {
    std::ifstream in(std::string(SVSIM_SCHEMA_DIR) + "/bench_report.schema.json");
    return nlohmann::json::parse(in);
}

bool type_matches(const nlohmann::json& v, const std::string& type) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "boolean") return v.is_boolean();
    if (type == "integer") return v.is_number_integer();
    if (type == "number") return v.is_number();
    if (type == "null") return v.is_null();
    return false;
}

// Covers the keywords the report schema uses.
void validate(const nlohmann::json& v, const nlohmann::json& schema, const std::string& path,
              std::vector<std::string>& errors) {
    if (schema.contains("type")) {
        const auto& t = schema["type"];
        bool ok = false;
        if (t.is_array()) {
            for (const auto& alt : t) ok = ok || type_matches(v, alt.get<std::string>());
        } else {
            ok = type_matches(v, t.get<std::string>());
        }
        if (!ok) errors.push_back(path + ": wrong type");
    }
    if (schema.contains("enum") && std::find(schema["enum"].begin(), schema["enum"].end(), v) == schema["enum"].end())
        errors.push_back(path + ": not in enum");
    if (schema.contains("minimum") && v.is_number() && v.get<double>() < schema["minimum"].get<double>())
        errors.push_back(path + ": below minimum");
    if (v.is_object()) {
        for (const auto& key : schema.value("required", nlohmann::json::array()))
            if (!v.contains(key.get<std::string>())) errors.push_back(path + ": missing " + key.get<std::string>());
        const auto props = schema.value("properties", nlohmann::json::object());
        for (const auto& [key, value] : v.items()) {
            if (props.contains(key)) {
                validate(value, props[key], path + "/" + key, errors);
            } else if (schema.contains("additionalProperties")) {
                const auto& extra = schema["additionalProperties"];
                if (extra.is_boolean() && !extra.get<bool>()) errors.push_back(path + ": unexpected " + key);
                if (extra.is_object()) validate(value, extra, path + "/" + key, errors);
            }
        }
        const auto dependent = schema.value("dependentRequired", nlohmann::json::object());
        for (const auto& [key, deps] : dependent.items())
            if (v.contains(key))
                for (const auto& d : deps)
                    if (!v.contains(d.get<std::string>())) errors.push_back(path + ": " + key + " needs " + d.get<std::string>());
    }
    if (v.is_array()) {
        if (schema.contains("minItems") && v.size() < schema["minItems"].get<std::size_t>()) errors.push_back(path + ": too short");
        if (schema.contains("maxItems") && v.size() > schema["maxItems"].get<std::size_t>()) errors.push_back(path + ": too long");
        if (schema.contains("items"))
            for (std::size_t i = 0; i < v.size(); ++i) validate(v[i], schema["items"], path + "/" + std::to_string(i), errors);
    }
}

std::vector<std::string> schema_errors(const nlohmann::json& report) {
    std::vector<std::string> errors;
    validate(report, load_schema(), "", errors);
    return errors;
}

TEST(Generators, ClosedFormCounts) {
    for (int n = 2; n <= 30; ++n) {
        const auto qft = gen_qft(n);
        EXPECT_EQ(gate_count(qft), static_cast<std::size_t>(n + n * (n - 1) / 2 + n / 2)) << n;
        const auto bv = gen_bv(n);
        EXPECT_EQ(gate_count(bv), static_cast<std::size_t>(3 * n - 1)) << n;
        EXPECT_EQ(depth(bv), n + 2) << n;
        if (n % 2 == 0) {
            const auto var = gen_variational(n, 0.3);
            EXPECT_EQ(gate_count(var), static_cast<std::size_t>(3 * n)) << n;
            EXPECT_EQ(depth(var), 4) << n;
        }
    }
}

TEST(Generators, ThirtyQubitCounts) {
    EXPECT_EQ(gate_count(gen_qft(30)), 480u);
    EXPECT_EQ(depth(gen_qft(30)), 60);
    EXPECT_EQ(gate_count(gen_variational(30)), 90u);
    EXPECT_EQ(depth(gen_variational(30)), 4);
    EXPECT_EQ(gate_count(gen_bv(30)), 89u);
    EXPECT_EQ(depth(gen_bv(30)), 32);
}

TEST(Generators, SmallCases) {
    EXPECT_EQ(gate_count(gen_qft(1)), 1u);
    EXPECT_EQ(gen_qft(1).ops()[0].kind, GateKind::H);
    EXPECT_EQ(gate_count(gen_variational(2)), 6u);
    EXPECT_EQ(gate_count(gen_bv(2)), 5u);
}

TEST(Generators, Errors) {
    try {
        gen_variational(5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::OddQubits);
    }
    EXPECT_THROW(gen_bv(1), Error);
    EXPECT_THROW(generate("grover", 4), Error);
    EXPECT_TRUE(is_generator("qft"));
    EXPECT_FALSE(is_generator("qft.qasm"));
}

TEST(Generators, VariationalStructure) {
    const auto c = gen_variational(6, 0.25);
    for (int i = 0; i < 6; ++i) {
        EXPECT_EQ(c.ops()[i].kind, GateKind::RY);
        EXPECT_EQ(c.ops()[i].params[0], 0.25);
    }
    EXPECT_EQ(c.ops().back().controls, std::vector<int>{5});
    EXPECT_EQ(c.ops().back().targets, std::vector<int>{0});
}

TEST(Generators, BernsteinVaziraniFindsSecret) {
    for (int n = 2; n <= 10; ++n) {
        StateVectorD s(n);
        execute(gen_bv(n), s);
        std::vector<int> data(static_cast<std::size_t>(n - 1));
        std::iota(data.begin(), data.end(), 0);
        const auto p = probabilities(s, data);
        EXPECT_NEAR(p.back(), 1.0, 1e-10);
    }
}

TEST(RunBenchmark, QftReport) {
    BenchConfig cfg;
    cfg.circuit = "qft";
    cfg.nqubits = 10;
    cfg.repeats = 5;
    const auto r = run_benchmark(cfg);
    EXPECT_EQ(r.gates_before, 60u);
    EXPECT_EQ(r.depth_before, 20);
    EXPECT_EQ(r.gates_after, 60u);
    EXPECT_NEAR(r.checksum, 1.0, 1e-10);
    EXPECT_EQ(r.repeats, 5);
    EXPECT_GE(r.dry_run_s, 0.0);
    EXPECT_GE(r.simulation_s, 0.0);
    EXPECT_GE(r.simulation_stddev_s, 0.0);
    EXPECT_EQ(r.state_bytes, 1024 * 16);
    EXPECT_TRUE(r.generated);
    EXPECT_EQ(r.rng, kRngName);
    EXPECT_GE(r.threads, 1);
    EXPECT_FALSE(r.hardware.empty());
    if (r.peak_rss_bytes) EXPECT_GT(*r.peak_rss_bytes, 0);

    const auto j = r.to_json();
    const auto errors = schema_errors(j);
    EXPECT_TRUE(errors.empty()) << errors.front();
    EXPECT_EQ(j["gates"]["before"], 60);
    EXPECT_EQ(j["precision"], "double");
}

TEST(RunBenchmark, Deterministic) {
    BenchConfig cfg;
    cfg.circuit = "variational";
    cfg.nqubits = 8;
    cfg.shots = 500;
    cfg.seed = 77;
    const auto a = run_benchmark(cfg), b = run_benchmark(cfg);
    EXPECT_EQ(a.checksum, b.checksum);
    EXPECT_EQ(a.amplitude_checksum_re, b.amplitude_checksum_re);
    EXPECT_EQ(a.shots, b.shots);
    EXPECT_EQ(a.sampler, kMetropolisName);
    EXPECT_TRUE(schema_errors(a.to_json()).empty());
}

TEST(RunBenchmark, FusedVariational) {
    BenchConfig cfg;
    cfg.circuit = "variational";
    cfg.nqubits = 30;
    cfg.fuse = true;
    // 2^30 amplitudes do not fit a desk machine; the counts are taken from the
    // circuit itself, so check them at width 30 and simulate narrower.
    const auto fused = fuse(gen_variational(30));
    EXPECT_EQ(gate_count(fused), 30u);
    EXPECT_EQ(depth(fused), 2);
    cfg.nqubits = 16;
    const auto r = run_benchmark(cfg);
    EXPECT_EQ(r.gates_before, 48u);
    EXPECT_EQ(r.gates_after, 16u);
    EXPECT_EQ(r.depth_after, 2);
    EXPECT_GE(r.fuse_s, 0.0);
}

TEST(RunBenchmark, FusionPreservesChecksums) {
    for (const std::string name : {"qft", "variational", "bv"}) {
        for (int n : {4, 8, 12}) {
            BenchConfig cfg;
            cfg.circuit = name;
            cfg.nqubits = n;
            const auto plain = run_benchmark(cfg);
            cfg.fuse = true;
            const auto fused = run_benchmark(cfg);
            EXPECT_NEAR(plain.checksum, fused.checksum, 1e-8) << name << n;
            EXPECT_NEAR(plain.amplitude_checksum_re, fused.amplitude_checksum_re, 1e-8) << name << n;
            EXPECT_NEAR(plain.amplitude_checksum_im, fused.amplitude_checksum_im, 1e-8) << name << n;
        }
    }
}

TEST(RunBenchmark, SinglePrecisionAndBackends) {
    BenchConfig cfg;
    cfg.circuit = "qft";
    cfg.nqubits = 8;
    const auto d = run_benchmark(cfg);
    cfg.precision = Precision::Single;
    const auto f = run_benchmark(cfg);
    EXPECT_EQ(f.state_bytes, 256 * 8);
    EXPECT_NEAR(f.checksum, d.checksum, 1e-5);
    cfg.precision = Precision::Double;
    for (auto b : {Backend::DenseOracle, Backend::Einsum}) {
        cfg.backend = b;
        const auto r = run_benchmark(cfg);
        EXPECT_NEAR(r.amplitude_checksum_re, d.amplitude_checksum_re, 1e-12);
        EXPECT_TRUE(schema_errors(r.to_json()).empty());
    }
}

TEST(RunBenchmark, QasmFixture) {
    BenchConfig cfg;
    cfg.circuit = std::string(SVSIM_FIXTURE_DIR) + "/qft5.qasm";
    cfg.shots = 1000;
    const auto r = run_benchmark(cfg);
    EXPECT_FALSE(r.generated);
    EXPECT_EQ(r.nqubits, 5);
    EXPECT_EQ(r.gates_before, 17u);
    EXPECT_GE(r.parse_s, 0.0);
    std::uint64_t total = 0;
    for (const auto& [k, v] : r.shots.items()) {
        EXPECT_EQ(k.size(), 5u);
        total += v.get<std::uint64_t>();
    }
    EXPECT_EQ(total, 1000u);
    EXPECT_TRUE(schema_errors(r.to_json()).empty());
}

TEST(RunBenchmark, Errors) {
    BenchConfig cfg;
    cfg.repeats = 0;
    EXPECT_THROW(run_benchmark(cfg), Error);
    cfg.repeats = 1;
    cfg.circuit = "/nonexistent/circuit.qasm";
    try {
        run_benchmark(cfg);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::IOError);
    }
    cfg.circuit = "variational";
    cfg.nqubits = 7;
    EXPECT_THROW(run_benchmark(cfg), Error);
    cfg.circuit = "qft";
    cfg.nqubits = max_qubits() + 1;
    try {
        run_benchmark(cfg);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::CapacityExceeded);
    }
}

TEST(RunBenchmark, DumpState) {
    const auto dir = fs::temp_directory_path() / "svsim_bench_dump";
    fs::create_directories(dir);
    BenchConfig cfg;
    cfg.circuit = "bv";
    cfg.nqubits = 6;
    cfg.dump_state = (dir / "bv.bin").string();
    const auto r = run_benchmark(cfg);
    const auto s = load_state<double>(*cfg.dump_state);
    EXPECT_EQ(s.nqubits(), 6);
    EXPECT_EQ(probability_checksum(s), r.checksum);
    fs::remove_all(dir);
}

TEST(Fixtures, LoadWithProvenance) {
    const auto f = load_fixture(std::string(SVSIM_FIXTURE_DIR) + "/qft5.qasm");
    EXPECT_EQ(gate_count(f.circuit), 17u);
    EXPECT_TRUE(f.provenance.contains("tool"));
    EXPECT_EQ(f.circuit.ops(), gen_qft(5).ops());
}

TEST(Fixtures, MissingFileOrSidecar) {
    try {
        load_fixture("/nonexistent/supremacy.qasm");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::IOError);
    }
    const auto dir = fs::temp_directory_path() / "svsim_fixture_test";
    fs::create_directories(dir);
    const auto path = (dir / "bell.qasm").string();
    std::ofstream(path) << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nh q[0];\ncx q[0],q[1];\n";
    EXPECT_THROW(load_fixture(path), Error);
    std::ofstream(path + ".json") << R"({"tool": "hand written"})";
    EXPECT_THROW(load_fixture(path), Error);
    std::ofstream(path + ".json") << R"({"tool": "hand written", "version": "1"})";
    EXPECT_EQ(gate_count(load_fixture(path).circuit), 2u);
    fs::remove_all(dir);
}

TEST(Schema, RejectsBrokenReports) {
    BenchConfig cfg;
    cfg.nqubits = 3;
    auto j = run_benchmark(cfg).to_json();
    ASSERT_TRUE(schema_errors(j).empty());
    auto broken = j;
    broken.erase("timings");
    EXPECT_FALSE(schema_errors(broken).empty());
    broken = j;
    broken["timings"]["dry_run_s"] = -1.0;
    EXPECT_FALSE(schema_errors(broken).empty());
    broken = j;
    broken["shots"] = {{"000", 3}};
    EXPECT_FALSE(schema_errors(broken).empty());
}

} // namespace
} // namespace svsim
