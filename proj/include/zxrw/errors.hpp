// Copyright 2026 The zxrw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace zxrw {

enum class Err {
    DimensionMismatch,
    FullColumnRankRequired,
    UnsupportedGate,
    LengthMismatch,
    TooLargeForOracle,
    NotProperClifford,
    NotPauli,
    NotClosed,
    NotGraphLike,
    NotReduced,
    TooSmall,
    InvalidGFlow,
    GFlowUnavailable,
    DecompositionMismatch,
    BudgetExceeded,
    ParseError,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::FullColumnRankRequired: return "FullColumnRankRequired";
        case Err::UnsupportedGate: return "UnsupportedGate";
        case Err::LengthMismatch: return "LengthMismatch";
        case Err::TooLargeForOracle: return "TooLargeForOracle";
        case Err::NotProperClifford: return "NotProperClifford";
        case Err::NotPauli: return "NotPauli";
        case Err::NotClosed: return "NotClosed";
        case Err::NotGraphLike: return "NotGraphLike";
        case Err::NotReduced: return "NotReduced";
        case Err::TooSmall: return "TooSmall";
        case Err::InvalidGFlow: return "InvalidGFlow";
        case Err::GFlowUnavailable: return "GFlowUnavailable";
        case Err::DecompositionMismatch: return "DecompositionMismatch";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::ParseError: return "ParseError";
    }
    return "Unknown";
}

class ZxError : public std::runtime_error {
public:
    ZxError(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    [[nodiscard]] Err code() const { return code_; }

private:
    Err code_;
};

}  // namespace zxrw
