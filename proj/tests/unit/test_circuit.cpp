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

#include <numbers>

#include "random.hpp"
#include "svsim/bench.hpp"
#include "svsim/circuit.hpp"

namespace svsim {
namespace {

using std::numbers::pi;

TEST(GateLibrary, NamedMatrices) {
    const auto x = gate_matrix(GateKind::X);
    EXPECT_EQ(x(0, 0), cplx(0));
    EXPECT_EQ(x(0, 1), cplx(1));
    EXPECT_EQ(x(1, 0), cplx(1));
    EXPECT_EQ(x(1, 1), cplx(0));
    const double zero[] = {0.0};
    EXPECT_LE(gate_matrix(GateKind::RZ, zero).max_abs_diff(GateMatrix::identity(1)), 0.0);
}

TEST(GateLibrary, U3ReducesToHadamard) {
    // u3(theta, phi, lambda) = [[cos, -e^{i l} sin], [e^{i p} sin, e^{i(p+l)} cos]] with half angles.
    const double theta = pi / 2, phi = 0.0, lambda = pi;
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    const GateMatrix expected(1, {c, -std::polar(1.0, lambda) * s, std::polar(1.0, phi) * s,
                                  std::polar(1.0, phi + lambda) * c});
    const double params[] = {theta, phi, lambda};
    const auto u3 = gate_matrix(GateKind::U3, params);
    EXPECT_LE(u3.max_abs_diff(expected), 1e-15);
    EXPECT_LE(u3.max_abs_diff(gate_matrix(GateKind::H)), 1e-15);
}

TEST(GateLibrary, AllKindsUnitary) {
    testing::Engine rng(1);
    std::uniform_real_distribution<double> angle(-4.0, 4.0);
    for (int k = 0; k <= static_cast<int>(GateKind::SWAP); ++k) {
        const auto kind = static_cast<GateKind>(k);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<double> params;
            for (int p = 0; p < param_count(kind); ++p) params.push_back(angle(rng));
            EXPECT_LE(gate_matrix(kind, params).unitarity_error(), 1e-12) << gate_name(kind);
        }
    }
}

TEST(GateLibrary, NamesRoundTrip) {
    for (int k = 0; k <= static_cast<int>(GateKind::SWAP); ++k) {
        const auto kind = static_cast<GateKind>(k);
        EXPECT_EQ(gate_kind_from_name(gate_name(kind)), kind);
    }
    EXPECT_FALSE(gate_kind_from_name("ccx"));
    EXPECT_FALSE(gate_kind_from_name("fused"));
}

TEST(GateLibrary, ControlledKindsUseTheirBaseMatrix) {
    const double lam[] = {0.3};
    EXPECT_EQ(gate_matrix(GateKind::CU1, lam).max_abs_diff(gate_matrix(GateKind::U1, lam)), 0.0);
    EXPECT_EQ(gate_matrix(GateKind::CRZ, lam).max_abs_diff(gate_matrix(GateKind::RZ, lam)), 0.0);
    const auto full = full_matrix(gates::cu1(0, 1, pi / 4));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const cplx expected = r != c ? cplx(0) : (r == 3 ? std::polar(1.0, pi / 4) : cplx(1));
            EXPECT_LE(std::abs(full(r, c) - expected), 1e-15);
        }
}

TEST(CircuitIR, ValidatesOps) {
    Circuit c(3);
    auto code = [&](GateOp op) {
        try {
            c.add(std::move(op));
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::InvalidArgument;
    };
    EXPECT_EQ(code(gates::h(3)), Errc::IndexOutOfRange);
    EXPECT_EQ(code(gates::cx(1, 1)), Errc::OverlappingQubits);
    GateOp bad = gates::rx(0, 0.1);
    bad.params.clear();
    EXPECT_EQ(code(bad), Errc::ShapeMismatch);
    GateOp extra = gates::h(0);
    extra.controls = {1, 2};
    c.add(extra);
    EXPECT_EQ(c.ops().size(), 1u);
    EXPECT_THROW(c.add_measurement(5, 0), Error);
}

TEST(CircuitIR, DepthAndCount) {
    Circuit empty(2);
    EXPECT_EQ(depth(empty), 0);
    EXPECT_EQ(gate_count(empty), 0u);
    Circuit one(1);
    one.add(gates::h(0));
    EXPECT_EQ(depth(one), 1);
    Circuit c(3);
    c.add(gates::h(0));
    c.add(gates::h(1));
    c.add(gates::cx(0, 2));
    c.add(gates::x(1));
    c.add(gates::swap(1, 2));
    EXPECT_EQ(depth(c), 3);
    EXPECT_EQ(gate_count(c), 5u);
}

TEST(CircuitIR, ThirtyQubitDepthsAndCounts) {
    EXPECT_EQ(depth(gen_qft(30)), 60);
    EXPECT_EQ(gate_count(gen_qft(30)), 480u);
    EXPECT_EQ(depth(gen_variational(30)), 4);
    EXPECT_EQ(gate_count(gen_bv(30)), 89u);
}

TEST(Execute, QftOfZeroIsUniform) {
    for (int n = 1; n <= 10; ++n) {
        StateVectorD s(n);
        execute(gen_qft(n), s);
        const double a = std::pow(2.0, -n / 2.0);
        for (index_t i = 0; i < s.size(); ++i) ASSERT_LE(std::abs(s[i] - cplx(a)), 1e-12) << n << " " << i;
    }
}

TEST(Execute, EmptyCircuitLeavesState) {
    testing::Engine rng(2);
    auto s = testing::random_state(4, rng);
    const auto before = s;
    execute(Circuit(4), s);
    EXPECT_EQ(testing::max_abs_diff(s, before), 0.0);
}

TEST(Execute, BackendsAgreeOnRandomCircuits) {
    testing::Engine rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto c = testing::random_circuit(8, 60, rng);
        StateVectorD a(8), b(8), e(8);
        execute(c, a, Backend::InPlace);
        execute(c, b, Backend::DenseOracle);
        execute(c, e, Backend::Einsum);
        EXPECT_LE(testing::max_abs_diff(a, b), 1e-12);
        EXPECT_LE(testing::max_abs_diff(a, e), 1e-12);
    }
}

TEST(Execute, Composition) {
    testing::Engine rng(4);
    const auto c1 = testing::random_circuit(6, 30, rng), c2 = testing::random_circuit(6, 30, rng);
    Circuit joined = c1;
    joined.extend(c2);
    StateVectorD a(6), b(6);
    execute(joined, a);
    execute(c1, b);
    execute(c2, b);
    EXPECT_EQ(testing::max_abs_diff(a, b), 0.0);
}

TEST(Execute, Errors) {
    StateVectorD s(3);
    try {
        execute(Circuit(4), s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ShapeMismatch);
    }
    StateVectorD big(15);
    try {
        execute(Circuit(15), big, Backend::DenseOracle);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::CapacityExceeded);
    }
}

TEST(Execute, BackendNames) {
    for (auto b : {Backend::InPlace, Backend::DenseOracle, Backend::Einsum}) EXPECT_EQ(parse_backend(backend_name(b)), b);
    EXPECT_THROW(parse_backend("gpu"), Error);
}

} // namespace
} // namespace svsim
