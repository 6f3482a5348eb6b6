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

#include <doctest.h>

#include "qsh/checks.hpp"
#include "qsh/error.hpp"
#include "qsh/wqsym.hpp"

using namespace qsh;

TEST_CASE("every suite passes at small bounds") {
    CheckBounds b;
    b.max_length = 3;
    b.order = 5;
    for (const auto& name : suite_names()) {
        if (name == "all") continue;
        INFO(name);
        const CheckReport r = run_checks(name, b);
        CHECK(r.passed());
        CHECK(r.suite == name);
        CHECK(r.cases > 0);
    }
}

TEST_CASE("unknown suites are rejected") {
    try {
        (void)run_checks("no-such-suite", CheckBounds{});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownSuite);
    }
}

TEST_CASE("a corrupted product is detected") {
    CheckBounds b;
    b.max_length = 3;
    testing::fault = 1;
    const CheckReport r = run_checks("tridendriform", b);
    testing::fault = 0;
    CHECK_FALSE(r.passed());
    CHECK(r.failure_count > 0);
    REQUIRE_FALSE(r.failures.empty());
    CHECK_FALSE(r.failures.front().law.empty());
    CHECK(r.failures.front().lhs != r.failures.front().rhs);
}

TEST_CASE("reports are deterministic and serialise") {
    CheckBounds b;
    b.max_length = 3;
    b.seed = 7;
    const CheckReport r1 = run_checks("series-group", b);
    const CheckReport r2 = run_checks("series-group", b);
    CHECK(r1.to_json() == r2.to_json());
    const Json j = r1.to_json();
    CHECK(j.contains("suite"));
    CHECK(j.contains("cases"));
    CHECK(j.contains("failures"));
    CHECK(r1.to_text().find("PASS") != std::string::npos);
}
