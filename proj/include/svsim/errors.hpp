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

#include <stdexcept>
#include <string>

namespace svsim {

enum class Errc {
    CapacityExceeded,
    ResourceError,
    IndexOutOfRange,
    TooManyTargets,
    ShapeMismatch,
    OverlappingQubits,
    SyntaxError,
    UnsupportedGate,
    UndeclaredRegister,
    NotEmittable,
    UnsupportedMaxQubits,
    ZeroProbabilityOutcome,
    NonHermitian,
    OddQubits,
    InvalidArgument,
    IOError,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Parser failure with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(Errc code, int line, int column, const std::string& what)
        : Error(code, "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace svsim
