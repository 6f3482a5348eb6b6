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

#ifndef QSH_CHECKS_LAWS_HPP
#define QSH_CHECKS_LAWS_HPP

#include <string>

#include "checks/common.hpp"

namespace qsh::checks {

/// The seven tridendriform axioms, associativity of • and of ★. `p(a, b, op)` is the product and
/// `eq(law, lhs, rhs)` records one comparison.
template <class E, class P, class Eq>
void tridendriform_laws(const std::string& where, const E& x, const E& y, const E& z, P&& p, Eq&& eq) {
    eq(where + " (x<y)<z = x<(y*z)", p(p(x, y, Op::Prec), z, Op::Prec), p(x, p(y, z, Op::Star), Op::Prec));
    eq(where + " (x>y)<z = x>(y<z)", p(p(x, y, Op::Succ), z, Op::Prec), p(x, p(y, z, Op::Prec), Op::Succ));
    eq(where + " (x*y)>z = x>(y>z)", p(p(x, y, Op::Star), z, Op::Succ), p(x, p(y, z, Op::Succ), Op::Succ));
    eq(where + " (x.y).z = x.(y.z)", p(p(x, y, Op::Dot), z, Op::Dot), p(x, p(y, z, Op::Dot), Op::Dot));
    eq(where + " (x<y).z = x.(y>z)", p(p(x, y, Op::Prec), z, Op::Dot), p(x, p(y, z, Op::Succ), Op::Dot));
    eq(where + " (x>y).z = x>(y.z)", p(p(x, y, Op::Succ), z, Op::Dot), p(x, p(y, z, Op::Dot), Op::Succ));
    eq(where + " (x.y)<z = x.(y<z)", p(p(x, y, Op::Dot), z, Op::Prec), p(x, p(y, z, Op::Prec), Op::Dot));
}

/// The three dendriform axioms with ★ = ≺ + ≻.
template <class E, class P, class Eq>
void dendriform_laws(const std::string& where, const E& x, const E& y, const E& z, P&& p, Eq&& eq) {
    eq(where + " (x<y)<z = x<(y*z)", p(p(x, y, Op::Prec), z, Op::Prec), p(x, p(y, z, Op::Star), Op::Prec));
    eq(where + " (x>y)<z = x>(y<z)", p(p(x, y, Op::Succ), z, Op::Prec), p(x, p(y, z, Op::Prec), Op::Succ));
    eq(where + " (x*y)>z = x>(y>z)", p(p(x, y, Op::Star), z, Op::Succ), p(x, p(y, z, Op::Succ), Op::Succ));
}

/// The three compatibilities between the reduced coproduct and ≺, ≻, •.
template <class B, class Eq>
void nqsh_bialgebra_laws(const std::string& where, const Algebra<B>& A, const LinComb<B>& x, const LinComb<B>& y,
                         Eq&& eq) {
    using Elem = LinComb<B>;
    const auto id = [](const B& b) { return Elem(b); };
    const auto dx = A.reduced_coproduct(x);
    const auto dy = A.reduced_coproduct(y);
    const auto& P = A.product;
    {
        auto rhs = pair_product(dx, dy, P, Op::Prec, Op::Star);
        rhs += map_pairs(dx, id, [&](const B& b) { return P(Elem(b), y, Op::Star); });
        rhs += map_pairs(dy, [&](const B& b) { return P(x, Elem(b), Op::Prec); }, id);
        rhs += map_pairs(dx, [&](const B& b) { return P(Elem(b), y, Op::Prec); }, id);
        rhs += tensor(x, y);
        eq(where + " bialgebra(prec)", A.reduced_coproduct(P(x, y, Op::Prec)), rhs);
    }
    {
        auto rhs = pair_product(dx, dy, P, Op::Succ, Op::Star);
        rhs += map_pairs(dy, id, [&](const B& b) { return P(x, Elem(b), Op::Star); });
        rhs += map_pairs(dy, [&](const B& b) { return P(x, Elem(b), Op::Succ); }, id);
        rhs += map_pairs(dx, [&](const B& b) { return P(Elem(b), y, Op::Succ); }, id);
        rhs += tensor(y, x);
        eq(where + " bialgebra(succ)", A.reduced_coproduct(P(x, y, Op::Succ)), rhs);
    }
    {
        auto rhs = pair_product(dx, dy, P, Op::Dot, Op::Star);
        rhs += map_pairs(dx, [&](const B& b) { return P(Elem(b), y, Op::Dot); }, id);
        rhs += map_pairs(dy, [&](const B& b) { return P(x, Elem(b), Op::Dot); }, id);
        eq(where + " bialgebra(dot)", A.reduced_coproduct(P(x, y, Op::Dot)), rhs);
    }
}

}  // namespace qsh::checks

#endif  // QSH_CHECKS_LAWS_HPP
