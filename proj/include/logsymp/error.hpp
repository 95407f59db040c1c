/*
 * Copyright 2026 The logsymp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace logsymp {

enum class ErrorCode {
    DimensionMismatch,
    SingularMatrix,
    NotSkew,
    OddSize,
    SizeGuard,
    BadVertex,
    NotAFace,
    InvalidClass,
    ZeroBiresidue,
    DegenerateStratum,
    UnsupportedComplex,
    ValencyTooHigh,
    SizeMismatch,
    InconsistentInput,
    OddDimension,
    Degenerate,
    NotHolonomic,
    DegenerateSimplex,
    Parse,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NotSkew: return "NotSkew";
        case ErrorCode::OddSize: return "OddSize";
        case ErrorCode::SizeGuard: return "SizeGuard";
        case ErrorCode::BadVertex: return "BadVertex";
        case ErrorCode::NotAFace: return "NotAFace";
        case ErrorCode::InvalidClass: return "InvalidClass";
        case ErrorCode::ZeroBiresidue: return "ZeroBiresidue";
        case ErrorCode::DegenerateStratum: return "DegenerateStratum";
        case ErrorCode::UnsupportedComplex: return "UnsupportedComplex";
        case ErrorCode::ValencyTooHigh: return "ValencyTooHigh";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::InconsistentInput: return "InconsistentInput";
        case ErrorCode::OddDimension: return "OddDimension";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::NotHolonomic: return "NotHolonomic";
        case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by cohomology computations whose holonomicity precondition fails.
class NotHolonomicError : public Error {
public:
    NotHolonomicError(std::vector<std::vector<std::size_t>> violators, const std::string& what)
        : Error(ErrorCode::NotHolonomic, what), violators_(std::move(violators)) {}

    const std::vector<std::vector<std::size_t>>& violators() const noexcept { return violators_; }

private:
    std::vector<std::vector<std::size_t>> violators_;
};

}  // namespace logsymp
