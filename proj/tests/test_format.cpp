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

#include "qsh/error.hpp"
#include "qsh/format.hpp"
#include "qsh/wqsym.hpp"

using namespace qsh;

namespace {

WQSymElem W(const char* s) { return parse_lincomb<PackedWord>(s, parse_packed_word); }

}  // namespace

TEST_CASE("text form of linear combinations") {
    CHECK(to_text(WQSymElem()) == "0");
    CHECK(to_text(W("(12) + 1/2 (11)")) == "(12) + 1/2 (11)");
    CHECK(to_text(W("-(21) + 2 (12)")) == "-(21) + 2 (12)");
    CHECK(W("1/2*11 - 1/2*11").is_zero());
    CHECK(W("0").is_zero());
    CHECK(W("[2,1,2]") == W("212"));
    CHECK(parse_packed_word("2,10,1,3,4,5,6,7,8,9").to_string() == "(2,10,1,3,4,5,6,7,8,9)");
}

TEST_CASE("json form of linear combinations") {
    const Json j = to_json(W("(12) + 1/2 (11)"), "F");
    CHECK(j["basis"] == "F");
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["coeff"] == "1/2");
    CHECK(j["terms"][1]["coeff"] == "1");
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_packed_word("13"), Error);
    CHECK_THROWS_AS(parse_permutation("11"), Error);
    CHECK_THROWS_AS(parse_packed_word("1a"), Error);
    CHECK_THROWS_AS(parse_tensor_word("x1||x2"), Error);
    CHECK_THROWS_AS(W("1/0 (1)"), Error);
}
