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

#include "golden.hpp"
#include "oracles.hpp"
#include "qsh/error.hpp"
#include "qsh/format.hpp"
#include "qsh/tensor.hpp"

using namespace qsh;
using golden::tensors;

namespace {

TensorWord T(const char* s) { return parse_tensor_word(s); }

// Words over variables 1..3 with letters of degree 1 or 2, up to the given length.
std::vector<oracle::Word> small_words(std::size_t max_len) {
    const std::vector<std::vector<int>> letters{{1}, {2}, {3}, {1, 2}, {2, 3}};
    std::vector<oracle::Word> out{{}};
    std::vector<oracle::Word> layer{{}};
    for (std::size_t n = 1; n <= max_len; ++n) {
        std::vector<oracle::Word> next;
        for (const auto& w : layer) {
            for (const auto& a : letters) {
                next.push_back(w);
                next.back().push_back(a);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("products of tensor words") {
    CHECK(tv_product(T("x1"), T("x2|x3"), Op::Prec) == tensors("x1|x2|x3"));
    CHECK(tv_product(T("x1|x2"), T("x3"), Op::Prec) == tensors("x1|x2|x3 + x1|x3|x2 + x1|x2.x3"));
    CHECK(tv_product(T("x1"), T("x2"), Op::Dot) == tensors("x1.x2"));
    CHECK(tv_product(T("x1"), T("x2"), Op::Star) == tensors("x1|x2 + x2|x1 + x1.x2"));
    CHECK(tv_product(T("x1"), T("x2"), Op::Sh) == tensors("x1|x2 + x2|x1"));
    CHECK(tv_product(T("1"), T("x2"), Op::Star) == tensors("x2"));
}

TEST_CASE("products agree with the recursive definition") {
    const auto words = small_words(2);
    for (const auto& u : words) {
        if (u.empty()) continue;
        for (const auto& v : words) {
            if (v.empty()) continue;
            for (Op op : {Op::Prec, Op::Succ, Op::Dot, Op::Star}) {
                CHECK(tv_product(oracle::to_tensor(u), oracle::to_tensor(v), op) == oracle::tv_product(u, v, op));
            }
        }
    }
}

TEST_CASE("deconcatenation") {
    TensorPairs want;
    want.add_term({T("1"), T("x1|x2")}, 1);
    want.add_term({T("x1"), T("x2")}, 1);
    want.add_term({T("x1|x2"), T("1")}, 1);
    CHECK(tv_coproduct(T("x1|x2")) == want);
    TensorPairs unit;
    unit.add_term({T("1"), T("1")}, 1);
    CHECK(tv_coproduct(T("1")) == unit);
}

TEST_CASE("action table of packed words on xyz") {
    for (const auto& c : golden::action_table()) {
        INFO(c.name);
        CHECK(c.got == c.want);
    }
    CHECK(f_action(PackedWord{1, 2}, T("x1|x2|x3")).is_zero());
}

TEST_CASE("canonical projection and the nested product") {
    CHECK(pi_canonical(T("x1")) == tensors("x1"));
    CHECK(pi_canonical(T("x1|x2")).is_zero());
    CHECK(theta_nested_left(T("x1|x2|x3")) == tensors("x1|x2|x3"));
    CHECK(theta_nested_left(T("x1")) == tensors("x1"));
    const Endo twice = [](const TensorWord& w) { return TensorElem(w, Rational(2)); };
    CHECK(pi_f(twice, T("x3")) == tensors("2 x3"));
}

TEST_CASE("series endomorphisms") {
    for (const auto& c : golden::hoffman_table()) {
        INFO(c.name);
        CHECK(c.got == c.want);
    }
    const auto log1p = series_standard(StandardSeries::Log1p, 4);
    CHECK(phi_series_endo(log1p, T("x1|x2")) == tensors("x1|x2 - 1/2 x1.x2"));
    CHECK(phi_series_endo(TruncatedSeries::identity(4), T("x1|x2|x3")) == tensors("x1|x2|x3"));
    CHECK_THROWS_AS(phi_series_endo(series_standard(StandardSeries::Expm1, 2), T("x1|x2|x3")), Error);
}

TEST_CASE("coderivations") {
    CHECK(coderivation(TruncatedSeries::identity(4), T("x1|x2|x3")) == tensors("3 x1|x2|x3"));
    CHECK(coderivation(series_standard(StandardSeries::XLog, 4), T("x1|x2")) == tensors("2 x1|x2 + 1/2 x1.x2"));
    CHECK(coderivation(TruncatedSeries::monomial(4, 2), T("x1")).is_zero());
    CHECK(coderivation(TruncatedSeries::monomial(4, 2), T("x1|x2")) == tensors("x1.x2"));
}
