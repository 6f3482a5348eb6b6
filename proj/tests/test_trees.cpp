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
#include "qsh/error.hpp"
#include "qsh/format.hpp"
#include "qsh/trees.hpp"

using namespace qsh;

namespace {

SchroderTree Tr(const char* s) { return parse_tree(s); }

const char* const kLeftComb = "((|,|),|)";
const char* const kRightComb = "(|,(|,|))";
const char* const kCorolla = "(|,|,|)";
const char* const kBalanced = "((|,|),(|,|))";

std::size_t catalan(int n) {
    std::size_t c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace

TEST_CASE("tree text form") {
    CHECK(SchroderTree::vee().encoding() == "(|,|)d=[1]");
    CHECK(SchroderTree::leaf().encoding() == "|");
    CHECK(Tr("(|,|,|)d=[2,1]").decorations() == std::vector<int>{2, 1});
    CHECK(Tr(kCorolla).degree() == 2);
    for (int n = 1; n <= 3; ++n) {
        for (const auto& t : enumerate_trees(n)) CHECK(parse_tree(t.encoding()) == t);
    }
    CHECK_THROWS_AS(Tr("(|)"), Error);
    CHECK_THROWS_AS(Tr("(|,|)d=[0]"), Error);
    CHECK_THROWS_AS(Tr("(|,|"), Error);
}

TEST_CASE("tree counts") {
    // Plain trees are counted by the little Schröder numbers, binary ones by Catalan.
    const std::vector<std::size_t> schroder{1, 1, 3, 11, 45};
    for (int n = 1; n <= 4; ++n) {
        std::size_t plain = 0;
        for (const auto& t : enumerate_trees(n)) plain += t.is_plain() ? 1 : 0;
        CHECK(plain == schroder[n]);
        CHECK(enumerate_binary_trees(n).size() == catalan(n));
    }
}

TEST_CASE("insertion") {
    const auto one = DecoratedPackedWord::plain(PackedWord{1});
    CHECK(ins(one, {1, 0}, {1}) == DecoratedPackedWord(PackedWord{2, 1}, {1, 1}));
    CHECK(ins(DecoratedPackedWord(), {0, 0}, {4}) == DecoratedPackedWord(PackedWord{1}, {4}));
    CHECK(ins(DecoratedPackedWord::plain(PackedWord{1, 1}), {2, 0}, {3}) == DecoratedPackedWord(PackedWord{2, 2, 1}, {1, 1, 3}));
    CHECK_THROWS_AS(ins(one, {1}, {}), Error);
    CHECK_THROWS_AS(ins(one, {1, 1}, {1}), Error);
}

TEST_CASE("tree products") {
    const auto v = SchroderTree::vee();
    const TreeComb star = tree_product(v, v, Op::Star);
    CHECK(star.size() == 3);
    CHECK(star.coeff(Tr(kLeftComb)) == 1);
    CHECK(star.coeff(Tr(kRightComb)) == 1);
    CHECK(star.coeff(Tr(kCorolla)) == 1);
    CHECK_THROWS_AS(tree_product(SchroderTree::leaf(), SchroderTree::leaf(), Op::Prec), Error);
    CHECK(tree_product(SchroderTree::leaf(), v, Op::Star) == TreeComb(v));
}

TEST_CASE("trees of words and words of trees") {
    CHECK(rho(PackedWord{1}) == SchroderTree::vee());
    CHECK(rho(PackedWord{1, 1}) == Tr(kCorolla));
    CHECK(rho(PackedWord{2, 1}) == Tr(kLeftComb));
    CHECK(rho(PackedWord{1, 2}) == Tr(kRightComb));
    CHECK(rho(PackedWord{2, 1, 2}) == Tr(kBalanced));
    CHECK(omega_section(Tr(kBalanced)).word() == PackedWord{2, 1, 2});
    for (const auto& c : golden::tree_tables()) {
        INFO(c.name);
        CHECK(c.got == c.want);
    }
}

TEST_CASE("permutations of binary trees") {
    CHECK(omega_prime(Tr(kBalanced)) == parse_lincomb<Permutation>("(312) + (213)", parse_permutation));
    CHECK(omega_prime(Tr(kLeftComb)) == parse_lincomb<Permutation>("(21)", parse_permutation));
    CHECK(omega_prime(Tr(kCorolla)).is_zero());
}

TEST_CASE("order on trees") {
    CHECK(right_edges(Tr(kRightComb)).size() == 1);
    CHECK(right_edges(Tr(kLeftComb)).empty());
    CHECK(contract(Tr(kRightComb), right_edges(Tr(kRightComb))) == Tr(kCorolla));
    CHECK(tree_leq(Tr(kCorolla), Tr(kRightComb)));
    CHECK_FALSE(tree_leq(Tr(kCorolla), Tr(kLeftComb)));
    CHECK(psi_tree(Tr(kRightComb), EmbedMode::Oracle) == TreeComb(Tr(kRightComb)) + TreeComb(Tr(kCorolla)));
    CHECK(psi_tree(Tr(kLeftComb), EmbedMode::Oracle) == TreeComb(Tr(kLeftComb)));
    CHECK(psi_tree(SchroderTree::vee(), EmbedMode::Recursive) == TreeComb(SchroderTree::vee()));
    // Degree 3: the number of trees below each binary tree, keyed by its permutations.
    const std::map<std::string, std::size_t> below{
        {"(321)", 1}, {"(231)", 2}, {"(312) + (213)", 2}, {"(132)", 2}, {"(123)", 4}};
    for (const auto& t : enumerate_binary_trees(3)) {
        INFO(t.encoding());
        CHECK(psi_tree(t, EmbedMode::Oracle).size() == below.at(to_text(omega_prime(t))));
        CHECK(psi_tree(t, EmbedMode::Oracle) == psi_tree(t, EmbedMode::Recursive));
    }
    CHECK_THROWS_AS(psi_tree(Tr(kCorolla), EmbedMode::Oracle), Error);
}
