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

#ifndef QSH_CHECKS_HPP
#define QSH_CHECKS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsh/format.hpp"

namespace qsh {

struct CheckBounds {
    int max_length = 4;  // pair laws use total length ≤ max_length + 1, triple laws ≤ max_length
    int order = 6;       // truncation order for random series
    std::uint64_t seed = 20260415;
};

struct CheckFailure {
    std::string law;
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string suite;
    CheckBounds bounds;
    std::size_t cases = 0;
    std::size_t failure_count = 0;
    std::vector<CheckFailure> failures;  // the first few of failure_count

    bool passed() const { return failure_count == 0 && cases > 0; }
    void merge(const CheckReport& other);
    Json to_json() const;
    std::string to_text() const;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Throws UnknownSuite.
CheckReport run_checks(std::string_view suite, const CheckBounds& bounds);

}  // namespace qsh

#endif  // QSH_CHECKS_HPP
