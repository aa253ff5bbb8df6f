/**************************************************************************
 * Copyright 2026 The mubs Authors
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
 **************************************************************************/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mubs {

enum class ErrorCode {
    NonPrime,
    ReducibleModulus,
    InvalidDegree,
    InvalidModulus,
    NotPlanar,
    CharacteristicTooSmall,
    InvalidParameters,
    LengthMismatch,
    NotAModule,
    ZeroVector,
    NoUnitEntry,
    DimensionMismatch,
    TooLarge,
    BadInput,
};

constexpr std::string_view code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPrime: return "NonPrime";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::InvalidDegree: return "InvalidDegree";
        case ErrorCode::InvalidModulus: return "InvalidModulus";
        case ErrorCode::NotPlanar: return "NotPlanar";
        case ErrorCode::CharacteristicTooSmall: return "CharacteristicTooSmall";
        case ErrorCode::InvalidParameters: return "InvalidParameters";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotAModule: return "NotAModule";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NoUnitEntry: return "NoUnitEntry";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mubs
