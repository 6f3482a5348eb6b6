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

#include <map>
#include <set>

#include "oracles.hpp"
#include "qsh/error.hpp"
#include "qsh/packed_word.hpp"
#include "qsh/wqsym.hpp"

using namespace qsh;

TEST_CASE("packing") {
    CHECK(pack(std::vector<int>{6, 3, 5, 3}) == PackedWord{3, 1, 2, 1});
    CHECK(pack(std::vector<int>{}).empty());
    CHECK(pack(std::vector<int>{2, 1, 2}) == PackedWord{2, 1, 2});
    CHECK_THROWS_AS(PackedWord(std::vector<int>{1, 3}), Error);
    CHECK_THROWS_AS(Permutation(PackedWord{1, 1}), Error);
}

TEST_CASE("restriction and shifted concatenation") {
    const PackedWord w{2, 1, 2};
    CHECK(restrict_values(w, {1}) == PackedWord{1});
    CHECK(restrict_values(w, {2}) == PackedWord{1, 1});
    CHECK(restrict_values(w, {1, 2}) == w);
    CHECK_THROWS_AS(restrict_values(w, {3}), Error);
    CHECK(shifted_concat(PackedWord{1}, PackedWord{1}) == PackedWord{1, 2});
    CHECK(shifted_concat(PackedWord{1, 1}, PackedWord{1}) == PackedWord{1, 1, 2});
    CHECK(shift(PackedWord{3, 1, 2}, 5) == std::vector<int>{8, 6, 7});
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_packed(0).size() == 1);
    CHECK(enumerate_packed(2) == std::vector<PackedWord>{PackedWord{1, 1}, PackedWord{1, 2}, PackedWord{2, 1}});
    for (int n = 0; n <= 6; ++n) {
        CHECK(static_cast<long>(enumerate_packed(n).size()) == oracle::ordered_bell(n));
        std::set<std::vector<int>> brute;
        for (const auto& w : oracle::packed_words(n)) brute.insert(w);
        std::set<std::vector<int>> got;
        for (const auto& w : enumerate_packed(n)) got.insert(w.letters());
        CHECK(got == brute);
    }
    CHECK(enumerate_permutations(4).size() == 24);
}

TEST_CASE("quasi-shuffle sectors") {
    using V = std::vector<PackedWord>;
    CHECK(enumerate_qsh(1, 1, Sector::All) == V{PackedWord{1, 1}, PackedWord{1, 2}, PackedWord{2, 1}});
    CHECK(enumerate_qsh(1, 1, Sector::Prec) == V{PackedWord{1, 2}});
    CHECK(enumerate_qsh(1, 1, Sector::Succ) == V{PackedWord{2, 1}});
    CHECK(enumerate_qsh(1, 1, Sector::Dot) == V{PackedWord{1, 1}});
    for (int k = 0; k <= 4; ++k) {
        for (int l = 0; l <= 4; ++l) {
            CHECK(Rational(static_cast<std::int64_t>(enumerate_qsh(k, l, Sector::Sh).size())) == binomial(k + l, k));
            std::size_t brute = 0;
            for (const auto& z : oracle::packed_words(k + l)) {
                bool ok = true;
                for (int i = 1; i < k; ++i) ok = ok && z[i - 1] < z[i];
                for (int i = k + 1; i < k + l; ++i) ok = ok && z[i - 1] < z[i];
                brute += ok;
            }
            CHECK(enumerate_qsh(k, l, Sector::All).size() == brute);
        }
    }
}

TEST_CASE("finer relation") {
    CHECK(finer_than(PackedWord{1, 1}, Permutation(PackedWord{1, 2})));
    CHECK(finer_than(PackedWord{1, 1}, Permutation(PackedWord{2, 1})));
    CHECK_FALSE(finer_than(PackedWord{1, 2}, Permutation(PackedWord{2, 1})));
    CHECK(finer_than(PackedWord{3, 1, 2}, Permutation(PackedWord{3, 1, 2})));
    CHECK_THROWS_AS(finer_than(PackedWord{1}, Permutation(PackedWord{1, 2})), Error);
}

TEST_CASE("order on packed words matches the Hasse graphs of Surj_2 and Surj_3") {
    CHECK(word_leq(PackedWord{1, 1}, PackedWord{1, 2}));
    CHECK(word_leq(PackedWord{1, 2, 1}, PackedWord{1, 3, 2}));
    CHECK_FALSE(word_leq(PackedWord{1, 1}, PackedWord{2, 1}));
    CHECK_THROWS_AS(word_leq(PackedWord{1}, PackedWord{1, 1}), Error);
    // Cover relations of Surj_3.
    const std::set<std::pair<std::string, std::string>> want{
        {"(122)", "(123)"}, {"(112)", "(123)"}, {"(111)", "(122)"}, {"(111)", "(112)"},
        {"(121)", "(132)"}, {"(212)", "(213)"}, {"(221)", "(231)"}, {"(211)", "(312)"},
    };
    std::set<std::pair<std::string, std::string>> covers;
    const auto& ws = enumerate_packed(3);
    for (const auto& s : ws) {
        for (const auto& t : ws) {
            if (s == t || !word_leq(s, t)) continue;
            bool cover = true;
            for (const auto& u : ws) {
                if (u != s && u != t && word_leq(s, u) && word_leq(u, t)) cover = false;
            }
            if (cover) covers.emplace(s.to_string(), t.to_string());
        }
    }
    CHECK(covers == want);
}

TEST_CASE("factorials and iota") {
    CHECK(word_factorial(PackedWord{1, 1}) == Rational(2));
    CHECK(word_factorial(PackedWord{3, 1, 2}) == Rational(1));
    CHECK(word_factorial(PackedWord{1, 1, 2, 2}) == Rational(4));
    CHECK(iota(PackedWord{2, 1, 2}) == 2);
    CHECK(iota(PackedWord{1, 2}) == 1);
    CHECK_THROWS_AS(iota(PackedWord{}), Error);
    for (int n = 1; n <= 4; ++n) {
        for (const auto& s : enumerate_packed(n)) {
            for (const auto& t : enumerate_packed(n)) {
                if (word_leq(s, t)) CHECK(iota(s) == iota(t));
            }
        }
    }
}

TEST_CASE("composition of packed words") {
    CHECK(compose(PackedWord{1, 1}, PackedWord{1, 2}) == PackedWord{1, 1});
    CHECK_FALSE(compose(PackedWord{1}, PackedWord{1, 2}).has_value());
    CHECK(inverse(Permutation(PackedWord{2, 3, 1})).word() == PackedWord{3, 1, 2});
}

TEST_CASE("text form") {
    CHECK(PackedWord{2, 1, 2}.to_string() == "(212)");
    CHECK(PackedWord{}.to_string() == "()");
    std::vector<int> big(10);
    for (int i = 0; i < 10; ++i) big[i] = 10 - i;
    CHECK(PackedWord(big).to_string() == "(10,9,8,7,6,5,4,3,2,1)");
    CHECK(PackedWord{1, 2} < PackedWord{2, 1});
    CHECK(PackedWord{2, 1} < PackedWord{1, 1, 1});
}
