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

// Python bindings: svsim._svsim. The pure-Python package re-exports these.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "svsim/bench.hpp"
#include "svsim/evolution.hpp"
#include "svsim/fusion.hpp"
#include "svsim/measure.hpp"
#include "svsim/parallel.hpp"
#include "svsim/qasm.hpp"

namespace py = pybind11;
using svsim::cplx;
using svsim::StateVectorD;

namespace {

py::object json_to_python(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

StateVectorD from_numpy(const py::array_t<cplx, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 1) throw svsim::Error(svsim::Errc::ShapeMismatch, "amplitudes must be one-dimensional");
    return StateVectorD::from_amplitudes(std::vector<cplx>(a.data(), a.data() + a.size()));
}

py::array_t<cplx> to_numpy(const StateVectorD& s) {
    py::array_t<cplx> out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(s.size())});
    std::copy(s.data(), s.data() + s.size(), out.mutable_data());
    return out;
}

svsim::GateOp make_op(const std::string& name, const std::vector<int>& qubits, const std::vector<double>& params) {
    const auto kind = svsim::gate_kind_from_name(name);
    if (!kind || *kind == svsim::GateKind::Fused) {
        throw svsim::Error(svsim::Errc::UnsupportedGate, "unknown gate '" + name + "'");
    }
    const int nctrl = svsim::builtin_controls(*kind);
    if (static_cast<int>(qubits.size()) < nctrl) throw svsim::Error(svsim::Errc::ShapeMismatch, "too few qubits");
    svsim::GateOp op;
    op.kind = *kind;
    op.params = params;
    op.controls.assign(qubits.begin(), qubits.begin() + nctrl);
    op.targets.assign(qubits.begin() + nctrl, qubits.end());
    return op;
}

} // namespace

PYBIND11_MODULE(_svsim, m) {
    m.doc() = "State-vector quantum circuit simulator";

    // Instances carry the error code name in `.code`.
    static py::handle error_type = py::exception<svsim::Error>(m, "SvsimError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const svsim::Error& e) {
            py::object exc = error_type(e.what());
            exc.attr("code") = svsim::errc_name(e.code());
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<StateVectorD>(m, "StateVector")
        .def(py::init<int>(), py::arg("nqubits"))
        .def_static("from_numpy", &from_numpy, py::arg("amplitudes"))
        .def("to_numpy", &to_numpy)
        .def_property_readonly("nqubits", &StateVectorD::nqubits)
        .def("__len__", &StateVectorD::size)
        .def("reset", &StateVectorD::reset)
        .def("norm", [](const StateVectorD& s) { return svsim::norm(s); })
        .def("checksum", [](const StateVectorD& s) { return svsim::probability_checksum(s); })
        .def("copy", [](const StateVectorD& s) { return s; });

    py::class_<svsim::Circuit>(m, "Circuit")
        .def(py::init<int>(), py::arg("nqubits"))
        .def_property_readonly("nqubits", &svsim::Circuit::nqubits)
        .def("add",
             [](svsim::Circuit& c, const std::string& name, const std::vector<int>& qubits,
                const std::vector<double>& params) { c.add(make_op(name, qubits, params)); },
             py::arg("name"), py::arg("qubits"), py::arg("params") = std::vector<double>{},
             "Appends a named gate; for controlled gates the controls come first.")
        .def("measure", &svsim::Circuit::add_measurement, py::arg("qubit"), py::arg("clbit"))
        .def("gate_count", [](const svsim::Circuit& c) { return svsim::gate_count(c); })
        .def("depth", [](const svsim::Circuit& c) { return svsim::depth(c); })
        .def("gate_names",
             [](const svsim::Circuit& c) {
                 std::vector<std::string> names;
                 for (const auto& op : c.ops()) names.emplace_back(svsim::gate_name(op.kind));
                 return names;
             })
        .def("__len__", [](const svsim::Circuit& c) { return svsim::gate_count(c); })
        .def("__eq__", [](const svsim::Circuit& a, const svsim::Circuit& b) { return a == b; });

    m.def("gen_qft", &svsim::gen_qft, py::arg("nqubits"));
    m.def("gen_variational", &svsim::gen_variational, py::arg("nqubits"), py::arg("theta") = 0.1);
    m.def("gen_bv", &svsim::gen_bv, py::arg("nqubits"));
    m.def("generate", &svsim::generate, py::arg("name"), py::arg("nqubits"), py::arg("theta") = 0.1);
    m.def("fuse", &svsim::fuse, py::arg("circuit"), py::arg("max_qubits") = 2);

    m.def("parse_qasm", [](const std::string& src) { return svsim::qasm::from_source(src); }, py::arg("source"));
    m.def("load_qasm", &svsim::qasm::from_file, py::arg("path"));
    m.def("emit_qasm", &svsim::qasm::emit, py::arg("circuit"));

    m.def(
        "execute",
        [](const svsim::Circuit& c, StateVectorD& s, const std::string& backend) {
            py::gil_scoped_release release;
            svsim::execute(c, s, svsim::parse_backend(backend));
        },
        py::arg("circuit"), py::arg("state"), py::arg("backend") = "inplace");
    m.def(
        "simulate",
        [](const svsim::Circuit& c, const std::string& backend) {
            StateVectorD s(c.nqubits());
            py::gil_scoped_release release;
            svsim::execute(c, s, svsim::parse_backend(backend));
            return s;
        },
        py::arg("circuit"), py::arg("backend") = "inplace", "Runs the circuit from |0...0> and returns the state.");

    m.def(
        "probabilities", [](const StateVectorD& s, const std::vector<int>& q) { return svsim::probabilities(s, q); },
        py::arg("state"), py::arg("qubits"));
    m.def(
        "collapse",
        [](StateVectorD& s, const std::vector<int>& q, const std::string& outcome) { svsim::collapse(s, q, outcome); },
        py::arg("state"), py::arg("qubits"), py::arg("outcome"));
    m.def(
        "sample_shots",
        [](const StateVectorD& s, const std::vector<int>& q, std::uint64_t nshots, std::uint64_t seed,
           const std::string& method, std::uint64_t burn_in, std::uint64_t thinning) {
            if (method == "metropolis") return svsim::sample_shots_metropolis(s, q, nshots, seed, {burn_in, thinning}).frequencies;
            if (method == "direct") return svsim::sample_shots_direct(s, q, nshots, seed).frequencies;
            throw svsim::Error(svsim::Errc::InvalidArgument, "method must be 'metropolis' or 'direct'");
        },
        py::arg("state"), py::arg("qubits"), py::arg("nshots"), py::arg("seed") = 1234,
        py::arg("method") = "metropolis", py::arg("burn_in") = 0, py::arg("thinning") = 10);

    m.def(
        "run_benchmark",
        [](const std::string& circuit, int nqubits, const std::string& backend, const std::string& precision,
           bool fuse, int repeats, int threads, std::uint64_t seed, double theta, std::uint64_t shots) {
            svsim::BenchConfig cfg;
            cfg.circuit = circuit;
            cfg.nqubits = nqubits;
            cfg.backend = svsim::parse_backend(backend);
            cfg.precision = svsim::parse_precision(precision);
            cfg.fuse = fuse;
            cfg.repeats = repeats;
            cfg.threads = threads;
            cfg.seed = seed;
            cfg.theta = theta;
            cfg.shots = shots;
            nlohmann::json report;
            {
                py::gil_scoped_release release;
                report = svsim::run_benchmark(cfg).to_json();
            }
            return json_to_python(report);
        },
        py::arg("circuit"), py::arg("nqubits") = 10, py::arg("backend") = "inplace", py::arg("precision") = "double",
        py::arg("fuse") = false, py::arg("repeats") = 1, py::arg("threads") = 0, py::arg("seed") = 1234,
        py::arg("theta") = 0.1, py::arg("shots") = 0, "Runs the timing protocol and returns the report as a dict.");

    m.def(
        "adiabatic_evolve",
        [](int nqubits, double total_time, double dt, const std::string& method, double h, bool periodic) {
            py::gil_scoped_release release;
            return svsim::adiabatic_evolve<double>({nqubits, h, periodic}, svsim::AdiabaticSchedule::linear(total_time, dt),
                                                   svsim::parse_method(method));
        },
        py::arg("nqubits"), py::arg("T"), py::arg("dt"), py::arg("method") = "trotter", py::arg("h") = 1.0,
        py::arg("periodic") = true);
    m.def(
        "tfim_energy",
        [](const StateVectorD& s, double h, bool periodic, double schedule) {
            return svsim::expectation(
                s, svsim::tfim_hamiltonian({s.nqubits(), h, periodic}, schedule, svsim::Hamiltonian::Form::LocalSum));
        },
        py::arg("state"), py::arg("h") = 1.0, py::arg("periodic") = true, py::arg("s") = 1.0);
    m.def(
        "tfim_ground_energy",
        [](int nqubits, double h, bool periodic, double schedule) {
            return svsim::ground_energy(
                svsim::tfim_hamiltonian({nqubits, h, periodic}, schedule, svsim::Hamiltonian::Form::LocalSum));
        },
        py::arg("nqubits"), py::arg("h") = 1.0, py::arg("periodic") = true, py::arg("s") = 1.0);

    m.def("set_num_threads", &svsim::set_num_threads, py::arg("n"));
    m.def("num_threads", &svsim::num_threads);
    m.def("set_max_qubits", &svsim::set_max_qubits, py::arg("cap"));
    m.def("max_qubits", &svsim::max_qubits);
}
