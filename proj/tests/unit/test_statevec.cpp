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

#include <cstdio>
#include <filesystem>
#include <set>

#include "random.hpp"
#include "svsim/statevec.hpp"

namespace svsim {
namespace {

TEST(StateVector, ZeroStateOneQubit) {
    const auto s = zero_state<double>(1);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0], std::complex<double>(1.0, 0.0));
    EXPECT_EQ(s[1], std::complex<double>(0.0, 0.0));
}

TEST(StateVector, ZeroStateThreeQubits) {
    const auto s = zero_state<float>(3);
    ASSERT_EQ(s.size(), 8u);
    EXPECT_EQ(s[0], std::complex<float>(1.0f, 0.0f));
    for (index_t i = 1; i < 8; ++i) EXPECT_EQ(s[i], std::complex<float>{});
}

TEST(StateVector, CapRejectsAboveLimit) {
    try {
        zero_state<double>(35);
        FAIL() << "expected CapacityExceeded";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::CapacityExceeded);
    }
}

TEST(StateVector, CapIsConfigurable) {
    set_max_qubits(4);
    EXPECT_THROW(zero_state<double>(5), Error);
    set_max_qubits(kDefaultMaxQubits);
    EXPECT_EQ(zero_state<double>(5).size(), 32u);
}

TEST(StateVector, RejectsZeroQubits) { EXPECT_THROW(zero_state<double>(0), Error); }

TEST(StateVector, BitPositionConvention) {
    EXPECT_EQ(bit_position(3, 0), 2);
    EXPECT_EQ(bit_position(3, 2), 0);
    EXPECT_EQ(bit_position(1, 0), 0);
    try {
        bit_position(3, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::IndexOutOfRange);
    }
    EXPECT_THROW(bit_position(3, -1), Error);
}

TEST(StateVector, BitPositionIsBijection) {
    for (int n = 1; n <= 20; ++n) {
        std::set<int> seen;
        for (int q = 0; q < n; ++q) seen.insert(bit_position(n, q));
        EXPECT_EQ(seen.size(), static_cast<std::size_t>(n));
        EXPECT_EQ(*seen.begin(), 0);
        EXPECT_EQ(*seen.rbegin(), n - 1);
    }
}

TEST(StateVector, NormExamples) {
    EXPECT_EQ(norm(zero_state<double>(2)), 1.0);
    const auto s = StateVectorD::from_amplitudes({{0.6, 0.0}, {0.0, 0.8}, {}, {}});
    EXPECT_NEAR(norm(s), 1.0, 1e-15);
    const auto z = StateVectorD::from_amplitudes(std::vector<std::complex<double>>(4));
    EXPECT_EQ(norm(z), 0.0);
}

TEST(StateVector, FromAmplitudesRequiresPowerOfTwo) {
    EXPECT_THROW(StateVectorD::from_amplitudes(std::vector<std::complex<double>>(3)), Error);
    EXPECT_THROW(StateVectorD::from_amplitudes({}), Error);
}

TEST(StateVector, ResetKeepsBuffer) {
    auto s = zero_state<double>(4);
    const auto* before = s.data();
    s[5] = 1.0;
    s.reset();
    EXPECT_EQ(s.data(), before);
    EXPECT_EQ(s[0], std::complex<double>(1.0));
    EXPECT_EQ(s[5], std::complex<double>(0.0));
}

TEST(StateVector, PrecisionTag) {
    EXPECT_EQ(StateVectorF::precision(), Precision::Single);
    EXPECT_EQ(StateVectorD::precision(), Precision::Double);
    EXPECT_EQ(parse_precision("single"), Precision::Single);
    EXPECT_EQ(parse_precision("double"), Precision::Double);
    EXPECT_THROW(parse_precision("half"), Error);
}

TEST(StateVector, ChecksumsOfUniformAndBasisStates) {
    EXPECT_DOUBLE_EQ(probability_checksum(zero_state<double>(16)), 1.0);
    auto last = zero_state<double>(16);
    last[0] = 0.0;
    last[(1 << 16) - 1] = 1.0;
    EXPECT_EQ(probability_checksum(last), 0.0);
    // 4096 samples of 2^-16 each.
    const double a = 1.0 / 256.0;
    auto u = StateVectorD::from_amplitudes(std::vector<std::complex<double>>(1 << 16, a));
    EXPECT_NEAR(probability_checksum(u), 1.0 / 16.0, 1e-12);
    auto small = StateVectorD::from_amplitudes(std::vector<std::complex<double>>(1 << 10, 1.0 / 32.0));
    EXPECT_NEAR(probability_checksum(small), 1.0, 1e-12);
}

TEST(StateVector, DumpAndLoadRoundTrip) {
    testing::Engine rng(7);
    const auto s = testing::random_state(5, rng);
    const auto path = (std::filesystem::temp_directory_path() / "svsim_dump_test.bin").string();
    dump_state(s, path);
    EXPECT_EQ(std::filesystem::file_size(path), 32u * 16u);
    const auto back = load_state<double>(path);
    EXPECT_EQ(back.nqubits(), 5);
    EXPECT_EQ(testing::max_abs_diff(s, back), 0.0);
    EXPECT_THROW(load_state<float>(path), Error);
    std::filesystem::remove(path);
    std::filesystem::remove(path + ".json");
}

TEST(StateVector, LoadMissingFileIsIOError) {
    try {
        load_state<double>("/nonexistent/state.bin");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::IOError);
    }
}

} // namespace
} // namespace svsim
