/*
   Copyright 2026 The tmon Authors

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

#ifndef TMON_ERROR_HPP
#define TMON_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tmon {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    ZeroPolynomial,
    NotMonic,
    NotSquarefree,
    ParentMismatch,
    NotAUnit,
    DimensionMismatch,
    EvenDegree,
    DegreeTooSmall,
    NotInGeneralPosition,
    NotInDenseOrbit,
    NotInSubspace,
    MalformedProfile,
    NotPrime,
    HeightExceeded,
    NotDivision,
    SquareParameter,
    UnsupportedFactorDegree,
    Ramified,
    ZeroEntry,
    ContextDegenerate,
    GeneratorSearchExhausted,
    InvariantViolation,
};

inline std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::ParentMismatch: return "ParentMismatch";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::EvenDegree: return "EvenDegree";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::NotInGeneralPosition: return "NotInGeneralPosition";
        case ErrorCode::NotInDenseOrbit: return "NotInDenseOrbit";
        case ErrorCode::NotInSubspace: return "NotInSubspace";
        case ErrorCode::MalformedProfile: return "MalformedProfile";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::HeightExceeded: return "HeightExceeded";
        case ErrorCode::NotDivision: return "NotDivision";
        case ErrorCode::SquareParameter: return "SquareParameter";
        case ErrorCode::UnsupportedFactorDegree: return "UnsupportedFactorDegree";
        case ErrorCode::Ramified: return "Ramified";
        case ErrorCode::ZeroEntry: return "ZeroEntry";
        case ErrorCode::ContextDegenerate: return "ContextDegenerate";
        case ErrorCode::GeneratorSearchExhausted: return "GeneratorSearchExhausted";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the CLI
/// maps them onto exit statuses.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
          code_(code),
          detail_(detail) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail = {}) { throw Error(code, detail); }

}  // namespace tmon

#endif  // TMON_ERROR_HPP
