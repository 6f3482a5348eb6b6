// Copyright 2026 The qsh Authors. All Rights Reserved.
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

#ifndef QSH_ERROR_HPP
#define QSH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsh {

enum class ErrorKind {
    Parse,
    NonComposable,
    NonInvertible,
    DivisionByNonUnit,
    InvalidValueSet,
    LengthMismatch,
    EmptyWord,
    NotPacked,
    NotPermutation,
    OrderTooLow,
    BadComposition,
    InvalidEdgeSet,
    UnitMisuse,
    NotBinary,
    InvalidTree,
    InvalidDecoration,
    UnknownSuite,
};

std::string_view to_string(ErrorKind kind);

/// Every precondition violation in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace qsh

#endif  // QSH_ERROR_HPP
