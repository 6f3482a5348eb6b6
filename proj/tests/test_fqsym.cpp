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
#include "qsh/format.hpp"
#include "qsh/fqsym.hpp"

using namespace qsh;

namespace {

FQSymElem Pm(const char* s) { return parse_lincomb<Permutation>(s, parse_permutation); }

}  // namespace

TEST_CASE("permutation products and coproduct") {
    const Permutation one(PackedWord{1});
    CHECK(fq_product(one, one, Op::Star) == Pm("12 + 21"));
    CHECK(fq_product(one, one, Op::Prec) == Pm("12"));
    CHECK(fq_product(one, one, Op::Succ) == Pm("21"));
    PermPairs d;
    const Permutation e{}, p21(PackedWord{2, 1});
    d.add_term({e, p21}, 1);
    d.add_term({one, one}, 1);
    d.add_term({p21, e}, 1);
    CHECK(fq_coproduct(p21) == d);
    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
            for (const auto& x : enumerate_permutations(k)) {
                for (const auto& y : enumerate_permutations(l)) {
                    CHECK(Rational(static_cast<std::int64_t>(fq_product(x, y, Op::Star).size())) == binomial(k + l, k));
                }
            }
        }
    }
}

TEST_CASE("projection onto permutations") {
    CHECK(xi_project(golden::words("12 + 11")) == Pm("12"));
    CHECK(xi_project(WQSymElem()).is_zero());
    for (int n = 1; n <= 4; ++n) {
        for (const auto& p : enumerate_permutations(n)) CHECK(xi_project(phi_embed(p)) == FQSymElem(p));
    }
}

TEST_CASE("golden values of Phi and Psi") {
    for (const auto& c : golden::phi_table()) {
        INFO(c.name);
        CHECK(c.got == c.want);
    }
    for (const auto& c : golden::psi_table()) {
        INFO(c.name);
        CHECK(c.got == c.want);
    }
}

TEST_CASE("Phi of the identity by compositions") {
    // Φ(1…n) = Σ over compositions (i_1..i_k) of 1/(i_1!…i_k!) (1^{i_1}…k^{i_k}), built by hand.
    for (int n = 1; n <= 5; ++n) {
        WQSymElem want;
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> w{1};
            Rational c(1);
            int run = 1;
            for (int i = 1; i < n; ++i) {
                if (mask & (1u << (i - 1))) {
                    c = c * factorial(run);
                    run = 1;
                    w.push_back(w.back() + 1);
                } else {
                    ++run;
                    w.push_back(w.back());
                }
            }
            c = c * factorial(run);
            want.add_term(PackedWord(w), c.inverse());
        }
        CHECK(phi_embed(identity_permutation(n)) == want);
        CHECK(phi_embed_oracle(identity_permutation(n)) == want);
    }
}

TEST_CASE("Phi is not a morphism of half products") {
    const Permutation one(PackedWord{1});
    const WQSymElem lhs = phi_embed(fq_product(one, one, Op::Prec));
    CHECK(lhs == golden::words("12 + 1/2 11"));
    CHECK(wq_product(phi_embed(one), phi_embed(one), Op::Prec) == golden::words("12"));
    CHECK(wq_product(phi_embed(one), phi_embed(one), Op::PrecEq) == golden::words("12 + 11"));
}
