/**************************************************************************
 * error.hpp
 *
 * Copyright 2026 The mdscount Authors
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

namespace mds {

enum class ErrorKind {
    NonPrimeCharacteristic,
    UnsupportedSize,
    NonPrimePower,
    FieldMismatch,
    DivisionByZero,
    BadIndex,
    BudgetExceeded,
    RankDeficient,
    ShapeMismatch,
    DegreeMismatch,
    ZeroInput,
    DimensionMismatch,
    DivisibilityViolation,
    ExactnessViolation,
    OutOfRange,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorKind::UnsupportedSize: return "UnsupportedSize";
        case ErrorKind::NonPrimePower: return "NonPrimePower";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::BadIndex: return "BadIndex";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::ZeroInput: return "ZeroInput";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
        case ErrorKind::ExactnessViolation: return "ExactnessViolation";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace mds
