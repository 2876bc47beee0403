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

// svsim: benchmark driver.
//
//   svsim simulate qft --nqubits 20 --repeats 5 --out report.json
//   svsim simulate circuit.qasm --fuse --precision single
//   svsim evolve --nqubits 8 --T 10 --dt 0.05 --method trotter
//   svsim fuse-only bv --nqubits 30
//   svsim emit qft --nqubits 5

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "svsim/bench.hpp"
#include "svsim/evolution.hpp"
#include "svsim/fusion.hpp"
#include "svsim/parallel.hpp"
#include "svsim/qasm.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitCapacity = 4;

void write_json(const nlohmann::json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump() << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f) throw svsim::Error(svsim::Errc::IOError, "cannot open '" + out + "' for writing");
    f << j.dump(2) << '\n';
}

svsim::Circuit load_circuit(const std::string& name, int nqubits, double theta) {
    if (svsim::is_generator(name)) return svsim::generate(name, nqubits, theta);
    return svsim::qasm::from_file(name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"State-vector quantum circuit simulator"};
    app.require_subcommand(1);
    int max_qubits = svsim::kDefaultMaxQubits;
    app.add_option("--max-qubits", max_qubits, "Qubit cap for state allocation")->check(CLI::Range(1, 62));

    // simulate
    svsim::BenchConfig cfg;
    std::string backend = "inplace", precision = "double", out;
    std::string dump;
    auto* sim = app.add_subcommand("simulate", "Run the dry-run / simulation timing protocol");
    sim->add_option("circuit", cfg.circuit, "Generator (qft, variational, bv) or .qasm file")->required();
    sim->add_option("-n,--nqubits", cfg.nqubits, "Qubits for generated circuits")->check(CLI::PositiveNumber);
    sim->add_option("--backend", backend, "inplace | oracle | einsum")
        ->check(CLI::IsMember({"inplace", "oracle", "dense", "einsum"}));
    sim->add_option("--precision", precision, "single | double")->check(CLI::IsMember({"single", "double"}));
    sim->add_flag("--fuse", cfg.fuse, "Apply two-qubit gate fusion");
    sim->add_option("--repeats", cfg.repeats, "Timed executions after the dry run")->check(CLI::PositiveNumber);
    sim->add_option("--threads", cfg.threads, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
    sim->add_option("--seed", cfg.seed, "Sampler seed");
    sim->add_option("--theta", cfg.theta, "Rotation angle of the variational circuit");
    sim->add_option("--shots", cfg.shots, "Shots sampled from the final state");
    sim->add_option("--out", out, "Write the report here instead of stdout");
    sim->add_option("--dump-state", dump, "Write the final amplitudes and a JSON sidecar");

    // evolve
    svsim::TFIMSpec tfim{4, 1.0, true};
    double total_time = 10.0, dt = 0.05;
    std::string method = "trotter", schedule = "linear", evolve_out;
    bool open_chain = false;
    auto* evo = app.add_subcommand("evolve", "Adiabatic evolution into the transverse-field Ising ground state");
    evo->set_help_flag("--help", "Print this help message and exit");
    evo->add_option("-n,--nqubits", tfim.nqubits, "Chain length")->check(CLI::Range(2, 62));
    evo->add_option("--T", total_time, "Total evolution time")->check(CLI::PositiveNumber);
    evo->add_option("--dt", dt, "Time step")->check(CLI::PositiveNumber);
    evo->add_option("--method", method, "dense | trotter")->check(CLI::IsMember({"dense", "trotter"}));
    evo->add_option("--h", tfim.h, "Transverse field of the target Hamiltonian");
    evo->add_option("--schedule", schedule, "Interpolation schedule")->check(CLI::IsMember({"linear"}));
    evo->add_flag("--open", open_chain, "Open chain instead of a ring");
    evo->add_option("--threads", cfg.threads, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
    evo->add_option("--out", evolve_out, "Write the result here instead of stdout");

    // fuse-only
    std::string fuse_circuit;
    int fuse_n = 10;
    double fuse_theta = 0.1;
    auto* fo = app.add_subcommand("fuse-only", "Print gate and depth counts before and after fusion");
    fo->add_option("circuit", fuse_circuit, "Generator or .qasm file")->required();
    fo->add_option("-n,--nqubits", fuse_n, "Qubits for generated circuits")->check(CLI::PositiveNumber);
    fo->add_option("--theta", fuse_theta, "Rotation angle of the variational circuit");

    // emit
    std::string emit_circuit;
    int emit_n = 10;
    double emit_theta = 0.1;
    auto* em = app.add_subcommand("emit", "Print a generated circuit as OpenQASM 2.0");
    em->add_option("circuit", emit_circuit, "Generator name")->required();
    em->add_option("-n,--nqubits", emit_n, "Qubits")->check(CLI::PositiveNumber);
    em->add_option("--theta", emit_theta, "Rotation angle of the variational circuit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        svsim::set_max_qubits(max_qubits);
        if (*sim) {
            cfg.backend = svsim::parse_backend(backend);
            cfg.precision = svsim::parse_precision(precision);
            if (!dump.empty()) cfg.dump_state = dump;
            write_json(svsim::run_benchmark(cfg).to_json(), out);
        } else if (*evo) {
            tfim.periodic = !open_chain;
            svsim::set_num_threads(cfg.threads);
            const auto sched = svsim::AdiabaticSchedule::linear(total_time, dt);
            const auto m = svsim::parse_method(method);
            const auto start = std::chrono::steady_clock::now();
            const auto state = svsim::adiabatic_evolve<double>(tfim, sched, m);
            const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            const auto h1 = svsim::tfim_hamiltonian(tfim, 1.0, svsim::Hamiltonian::Form::LocalSum);
            nlohmann::json j{{"nqubits", tfim.nqubits},
                             {"T", total_time},
                             {"dt", dt},
                             {"nsteps", sched.nsteps()},
                             {"method", svsim::method_name(m)},
                             {"h", tfim.h},
                             {"periodic", tfim.periodic},
                             {"schedule", schedule},
                             {"energy", svsim::expectation(state, h1)},
                             {"elapsed_s", elapsed},
                             {"checksum", svsim::probability_checksum(state)}};
            if (tfim.nqubits <= 12) j["ground_energy"] = svsim::ground_energy(h1);
            write_json(j, evolve_out);
        } else if (*fo) {
            const auto c = load_circuit(fuse_circuit, fuse_n, fuse_theta);
            const auto f = svsim::fuse(c);
            write_json({{"circuit", fuse_circuit},
                        {"nqubits", c.nqubits()},
                        {"gates", {{"before", svsim::gate_count(c)}, {"after", svsim::gate_count(f)}}},
                        {"depth", {{"before", svsim::depth(c)}, {"after", svsim::depth(f)}}}},
                       "");
        } else if (*em) {
            std::cout << svsim::qasm::emit(svsim::generate(emit_circuit, emit_n, emit_theta));
        }
    } catch (const svsim::Error& e) {
        std::cerr << "svsim: " << e.what() << '\n';
        const bool capacity = e.code() == svsim::Errc::CapacityExceeded || e.code() == svsim::Errc::ResourceError;
        return capacity ? kExitCapacity : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "svsim: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
