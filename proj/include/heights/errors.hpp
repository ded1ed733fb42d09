/*
   Copyright 2026 The heights Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heights {

enum class ErrorKind {
    ZeroDenominator,
    ZeroPolynomial,
    ZeroFunction,
    FieldMismatch,
    NotIrreducible,
    SingularModel,
    UnsupportedCharacteristic,
    NotTorsionWithinBound,
    NotFinitePoint,
    NotOnCurve,
    BadOrder,
    NotAPthPower,
    IsotrivialSource,
    IncomposableSteps,
    CurveMismatch,
    NotUniformPlan,
    SemistabilityRequired,
    IsotrivialInput,
    WrongOrder,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure the library reports carries a kind so callers (and the CLI
// exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

class ParseError : public Error {
  public:
    /// Line 0 means the error has no position (a missing file, a wrong type).
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(ErrorKind::Parse, line == 0 ? what
                                            : what + " at line " + std::to_string(line) + ", column " +
                                                  std::to_string(column)),
          detail_(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    /// The message without kind and position.
    const std::string& detail() const noexcept { return detail_; }

  private:
    std::string detail_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace heights
