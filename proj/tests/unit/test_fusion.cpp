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

#include "random.hpp"
#include "svsim/bench.hpp"
#include "svsim/fusion.hpp"

namespace svsim {
namespace {

TEST(Fusion, ThirtyQubitCounts) {
    const auto q = fuse(gen_qft(30));
    EXPECT_EQ(gate_count(q), 450u);
    EXPECT_EQ(depth(q), 58);
    const auto v = fuse(gen_variational(30));
    EXPECT_EQ(gate_count(v), 30u);
    EXPECT_EQ(depth(v), 2);
    const auto b = fuse(gen_bv(30));
    EXPECT_EQ(gate_count(b), 29u);
    EXPECT_EQ(depth(b), 29);
}

TEST(Fusion, OnlyTwoQubitGroupsSupported) {
    try {
        fuse(gen_qft(4), 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnsupportedMaxQubits);
    }
}

TEST(Fusion, GroupMatrixExamples) {
    FusionGroup h{{0}, {gates::h(0)}};
    EXPECT_EQ(group_matrix(h).max_abs_diff(gate_matrix(GateKind::H)), 0.0);

    FusionGroup xx{{0}, {gates::x(0), gates::x(0)}};
    EXPECT_EQ(group_matrix(xx).max_abs_diff(GateMatrix::identity(1)), 0.0);

    const double theta = 0.4, phi = -1.3;
    FusionGroup ry{{0}, {gates::ry(0, theta), gates::ry(0, phi)}};
    const double sum[] = {theta + phi};
    EXPECT_LE(group_matrix(ry).max_abs_diff(gate_matrix(GateKind::RY, sum)), 1e-12);
}

TEST(Fusion, EmbedMatrixFollowsQubitOrder) {
    // X on qubit 1 inside the pair (0, 1) is I (x) X.
    const auto x = gate_matrix(GateKind::X);
    const std::vector<int> from{1}, to{0, 1};
    const auto e = embed_matrix(x, from, to);
    const GateMatrix expected(2, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
    EXPECT_EQ(e.max_abs_diff(expected), 0.0);
    const std::vector<int> missing{2};
    EXPECT_THROW(embed_matrix(x, missing, to), Error);
}

TEST(Fusion, SemanticEquivalence) {
    testing::Engine rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const int g = 1 + static_cast<int>(rng() % 60);
        auto c = testing::random_circuit(n, g, rng);
        if (n >= 3 && trial % 5 == 0) {
            GateOp ccx = gates::x(0);
            ccx.controls = {1, 2};
            c.add(ccx);
        }
        const auto f = fuse(c);
        EXPECT_LE(gate_count(f), gate_count(c));
        StateVectorD a(n), b(n);
        execute(c, a);
        execute(f, b);
        EXPECT_LE(testing::max_abs_diff(a, b), 1e-10) << "trial " << trial;
    }
}

TEST(Fusion, GroupsAreUnitaryAndLocal) {
    testing::Engine rng(6);
    const auto c = testing::random_circuit(6, 80, rng);
    for (const auto& g : fusion_groups(c)) {
        ASSERT_FALSE(g.members.empty());
        ASSERT_LE(g.qubits.size(), 2u);
        for (const auto& m : g.members)
            for (int q : m.qubits()) EXPECT_NE(std::find(g.qubits.begin(), g.qubits.end(), q), g.qubits.end());
        EXPECT_LE(group_matrix(g).unitarity_error(), 1e-10);
    }
}

TEST(Fusion, Idempotent) {
    testing::Engine rng(7);
    std::vector<Circuit> circuits{gen_qft(12), gen_variational(12), gen_bv(12), gen_qft(30), gen_bv(30)};
    for (int k = 0; k < 10; ++k) circuits.push_back(testing::random_circuit(8, 60, rng));
    for (const auto& c : circuits) {
        const auto once = fuse(c);
        EXPECT_EQ(gate_count(fuse(once)), gate_count(once));
    }
}

TEST(Fusion, WideGatesPassThrough) {
    Circuit c(4);
    c.add(gates::h(0));
    GateOp ccx = gates::x(3);
    ccx.controls = {0, 1};
    c.add(ccx);
    c.add(gates::h(0));
    const auto f = fuse(c);
    ASSERT_EQ(gate_count(f), 3u);
    EXPECT_EQ(f.ops()[1], ccx);
    EXPECT_EQ(f.ops()[0].kind, GateKind::Fused);
}

TEST(Fusion, KeepsMeasurements) {
    Circuit c(2);
    c.add(gates::h(0));
    c.add_measurement(0, 0);
    EXPECT_EQ(fuse(c).measurements(), c.measurements());
}

} // namespace
} // namespace svsim
