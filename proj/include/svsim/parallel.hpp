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

namespace svsim {

inline constexpr int kDefaultParallelThreshold = 14;

/// Worker count used by every kernel. Defaults to the hardware thread count.
int num_threads() noexcept;
void set_num_threads(int n);

/// States with fewer qubits than this run sequentially.
int parallel_threshold() noexcept;
void set_parallel_threshold(int nqubits);

inline bool use_parallel(int nqubits) noexcept {
    return num_threads() > 1 && nqubits >= parallel_threshold();
}

int hardware_threads() noexcept;

} // namespace svsim
