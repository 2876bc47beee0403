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

#include <string>
#include <string_view>
#include <vector>

#include "svsim/circuit.hpp"

namespace svsim::qasm {

/// Register reference; index == -1 addresses the whole register.
struct Argument {
    std::string reg;
    int index = -1;
    int line = 0;
    int column = 0;
};

struct Statement {
    enum class Type { Gate, Measure, Barrier };

    Type type = Type::Gate;
    /// Canonical gate name (qelib1 spelling, "U" -> "u3", "CX" -> "cx").
    std::string name;
    std::vector<double> params;
    std::vector<Argument> qargs;
    /// Classical targets of a measure.
    std::vector<Argument> cargs;
    int line = 0;
    int column = 0;
};

struct Register {
    std::string name;
    int size = 0;
};

struct Program {
    std::string version;
    /// Declaration order is the qubit order after lowering.
    std::vector<Register> qregs;
    std::vector<Register> cregs;
    std::vector<Statement> statements;
};

/// Qubit budget across all quantum registers of one program.
inline constexpr int kMaxProgramQubits = 62;

/// Parses the OpenQASM 2.0 subset. The standard gate names are built in;
/// `include "qelib1.inc";` is accepted and not read from disk. Every failure
/// is a ParseError with line and column.
Program parse(std::string_view source);

/// Flattens registers into one qubit space and maps statements to GateOps.
/// Measurements become circuit metadata; barriers are dropped.
Circuit lower(const Program& program);

Circuit from_source(std::string_view source);
Circuit from_file(const std::string& path);

/// Fused ops, extra controls and non-finite parameters are NotEmittable.
std::string emit(const Circuit& circuit);

} // namespace svsim::qasm
