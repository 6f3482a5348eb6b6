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
#include "qsh/decorated.hpp"
#include "qsh/error.hpp"
#include "qsh/format.hpp"

using namespace qsh;
using golden::tensors;

namespace {

DecoratedPackedWord D(const char* s) { return parse_decorated(s); }
TensorWord T(const char* s) { return parse_tensor_word(s); }

// All compositions of n, each as the decoration of the increasing word of that length.
DescElem increasing_words(int n) {
    DescElem out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts{1};
        for (int i = 1; i < n; ++i) {
            if (mask & (1u << (i - 1))) {
                parts.push_back(1);
            } else {
                ++parts.back();
            }
        }
        std::vector<int> word;
        for (std::size_t i = 0; i < parts.size(); ++i) word.push_back(static_cast<int>(i) + 1);
        out.add_term(DecoratedPackedWord(PackedWord(word), parts), 1);
    }
    return out;
}

}  // namespace

TEST_CASE("decorated words validate their degrees") {
    CHECK_THROWS_AS(DecoratedPackedWord(PackedWord{1, 1}, {2}), Error);
    CHECK_THROWS_AS(DecoratedPackedWord(PackedWord{1}, {0}), Error);
    CHECK(D("212;112").to_string() == "2,1,2;1,1,2");
    CHECK(D("2,1,2;1,1,2") == D("212;112"));
    CHECK(D("1;3").total_degree() == 3);
}

TEST_CASE("composition") {
    CHECK(dec_compose(D("11;1,1"), D("12;1,1")) == DescElem(D("11;1,1")));
    CHECK(dec_compose(D("11;1,2"), D("12;1,1")).is_zero());
    CHECK(dec_compose(D("1;3"), D("1;3")) == DescElem(D("1;3")));
    CHECK(dec_compose(D("1;2"), D("11;1,1")) == DescElem(D("11;1,1")));
    CHECK(dec_compose(D("1;2"), D("12;1,1")).is_zero());
}

TEST_CASE("products concatenate decorations") {
    CHECK(dec_product(D("1;2"), D("1;3"), Op::Prec) == DescElem(D("12;2,3")));
    CHECK(dec_product(D("1;2"), D("1;3"), Op::Succ) == DescElem(D("21;2,3")));
    CHECK(dec_product(D("1;2"), D("1;3"), Op::Dot) == DescElem(D("11;2,3")));
    for (const auto& s : enumerate_packed(2)) {
        for (const auto& t : enumerate_packed(1)) {
            const auto a = DecoratedPackedWord::plain(s), b = DecoratedPackedWord::plain(t);
            for (Op op : {Op::Prec, Op::Succ, Op::Dot}) CHECK(forget_decorations(dec_product(a, b, op)) == wq_product(s, t, op));
        }
    }
}

TEST_CASE("graded action") {
    CHECK(dec_action(D("212;1,1,1"), T("x1|x2|x3")) == tensors("x2|x1.x3"));
    CHECK(dec_action(D("212;2,1,1"), T("x1|x2|x3")).is_zero());
    CHECK(dec_action(D("212;2,1,1"), T("x1.x4|x2|x3")) == f_action(PackedWord{2, 1, 2}, T("x1.x4|x2|x3")));
    CHECK(dec_action(D("1;2"), T("x1.x2")) == tensors("x1.x2"));
    CHECK(dec_action(D("1;2"), T("x1")).is_zero());
}

TEST_CASE("projections p_n") {
    for (int n = 1; n <= 4; ++n) CHECK(p_projection(n) == increasing_words(n));
    for (const char* w : {"x1", "x1|x2", "x1.x2", "x1|x2.x3", "x1.x2|x3", "x1|x2|x3", "x1.x2.x3"}) {
        TensorElem sum;
        for (int n = 1; n <= 3; ++n) sum += dec_action(p_projection(n), T(w));
        CHECK(sum == tensors(w));
    }
}

TEST_CASE("projections q_n") {
    for (QMode mode : {QMode::Definition, QMode::DescentFormula}) {
        const Endo q2 = q_projection(2, mode);
        CHECK(q2(T("x1.x2")) == tensors("x1.x2"));
        CHECK(q2(T("x1|x2")).is_zero());
        const Endo q1 = q_projection(1, mode);
        CHECK(q1(T("x1")) == tensors("x1"));
        CHECK(q1(T("x1|x2")).is_zero());
    }
}
