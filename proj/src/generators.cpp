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

#include <cmath>
#include <numbers>

#include "svsim/bench.hpp"

namespace svsim {

Circuit gen_qft(int nqubits) {
    Circuit c(nqubits);
    for (int j = 0; j < nqubits; ++j) {
        c.add(gates::h(j));
        for (int k = j + 1; k < nqubits; ++k) c.add(gates::cu1(k, j, std::numbers::pi / std::ldexp(1.0, k - j)));
    }
    for (int i = 0; i < nqubits / 2; ++i) c.add(gates::swap(i, nqubits - 1 - i));
    return c;
}

Circuit gen_variational(int nqubits, double theta) {
    if (nqubits % 2 != 0) throw Error(Errc::OddQubits, "variational circuit needs an even qubit count");
    Circuit c(nqubits);
    for (int q = 0; q < nqubits; ++q) c.add(gates::ry(q, theta));
    for (int q = 0; q < nqubits; q += 2) c.add(gates::cz(q, q + 1));
    for (int q = 0; q < nqubits; ++q) c.add(gates::ry(q, theta));
    for (int q = 1; q < nqubits; q += 2) c.add(gates::cz(q, (q + 1) % nqubits));
    return c;
}

Circuit gen_bv(int nqubits) {
    if (nqubits < 2) throw Error(Errc::InvalidArgument, "Bernstein-Vazirani needs at least two qubits");
    const int ancilla = nqubits - 1;
    Circuit c(nqubits);
    for (int q = 0; q < ancilla; ++q) c.add(gates::h(q));
    c.add(gates::x(ancilla));
    c.add(gates::h(ancilla));
    for (int q = 0; q < ancilla; ++q) c.add(gates::cx(q, ancilla));
    for (int q = 0; q < ancilla; ++q) c.add(gates::h(q));
    return c;
}

bool is_generator(const std::string& name) noexcept {
    return name == "qft" || name == "variational" || name == "bv";
}

Circuit generate(const std::string& name, int nqubits, double theta) {
    if (name == "qft") return gen_qft(nqubits);
    if (name == "variational") return gen_variational(nqubits, theta);
    if (name == "bv") return gen_bv(nqubits);
    throw Error(Errc::InvalidArgument, "unknown generator '" + name + "'");
}

} // namespace svsim
