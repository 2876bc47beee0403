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

#include "svsim/parallel.hpp"

#include <atomic>
#include <thread>

#include "svsim/errors.hpp"

namespace svsim {

namespace {

std::atomic<int> g_threads{0};
std::atomic<int> g_threshold{kDefaultParallelThreshold};

} // namespace

int hardware_threads() noexcept {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int num_threads() noexcept {
    const int n = g_threads.load(std::memory_order_relaxed);
    return n > 0 ? n : hardware_threads();
}

void set_num_threads(int n) {
    if (n < 0) throw Error(Errc::InvalidArgument, "thread count must be >= 0 (0 = hardware default)");
    g_threads.store(n, std::memory_order_relaxed);
}

int parallel_threshold() noexcept { return g_threshold.load(std::memory_order_relaxed); }

void set_parallel_threshold(int nqubits) {
    if (nqubits < 0) throw Error(Errc::InvalidArgument, "parallel threshold must be >= 0");
    g_threshold.store(nqubits, std::memory_order_relaxed);
}

} // namespace svsim
