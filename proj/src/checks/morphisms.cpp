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

#include "checks/common.hpp"
#include "qsh/fqsym.hpp"
#include "qsh/wqsym.hpp"

namespace qsh::checks {

namespace {

template <class F>
void perm_pairs(int total, F&& f) {
    for (int a = 1; a < total; ++a) {
        for (int c = 1; a + c <= total; ++c) {
            for (const auto& x : enumerate_permutations(a)) {
                for (const auto& y : enumerate_permutations(c)) f(x, y);
            }
        }
    }
}

std::string show(const Permutation& x, const Permutation& y) { return "x=" + x.to_string() + " y=" + y.to_string(); }

template <class M>
WordPairs map_both(const PermPairs& d, M&& m) {
    WordPairs out;
    for (const auto& [p, c] : d) out.add_scaled(tensor(m(p.first), m(p.second)), c);
    return out;
}

template <class M>
void hopf_morphism_laws(Recorder& rec, const std::string& name, M&& m, int L) {
    perm_pairs(L + 1, [&](const Permutation& x, const Permutation& y) {
        rec.equal(name + "(x*y) = " + name + "(x)*" + name + "(y)", show(x, y), m(fq_product(x, y, Op::Star)),
                  wq_product(m(FQSymElem(x)), m(FQSymElem(y)), Op::Star));
    });
    for (int n = 0; n <= L; ++n) {
        for (const auto& p : enumerate_permutations(n)) {
            rec.equal("Delta o " + name + " = (" + name + " x " + name + ") o Delta", p.to_string(),
                      wq_coproduct(m(FQSymElem(p))), map_both(fq_coproduct(p), [&](const Permutation& q) { return m(FQSymElem(q)); }));
        }
    }
}

}  // namespace

void suite_phi_morphism(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length;
    const auto phi = [](const FQSymElem& a) { return phi_embed(a); };
    hopf_morphism_laws(rec, "Phi", phi, L);
    for (int n = 0; n <= L; ++n) {
        for (const auto& s : enumerate_permutations(n)) {
            rec.equal("Phi = sum over finer words", s.to_string(), phi_embed(s), phi_embed_oracle(s));
            rec.equal("Xi o Phi = Id", s.to_string(), xi_project(phi_embed(s)), FQSymElem(s));
            for (const auto& t : enumerate_permutations(n)) {
                const Permutation st(*compose(s.word(), t.word()));
                rec.equal("Phi(s o t) = Phi(s) o t", show(s, t), phi_embed(st), wq_compose(phi_embed(s), WQSymElem(t.word())));
            }
        }
    }
    // Φ(1...n) as a sum over compositions of n.
    for (int n = 1; n <= std::max(5, L); ++n) {
        WQSymElem expected;
        for (int k = 1; k <= n; ++k) {
            for_each_composition(n, k, [&](const std::vector<int>& parts) {
                std::vector<int> letters;
                Rational c(1);
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    letters.insert(letters.end(), parts[j], static_cast<int>(j) + 1);
                    c *= factorial(parts[j]);
                }
                expected.add_term(PackedWord(letters), c.inverse());
            });
        }
        rec.equal("Phi(1...n) composition formula", "n=" + std::to_string(n), phi_embed(identity_permutation(n)), expected);
    }
    // Φ does not respect the half products.
    const Permutation one(PackedWord{1});
    const WQSymElem lhs = phi_embed(fq_product(one, one, Op::Prec));
    const WQSymElem p1 = phi_embed(one);
    rec.truth("Phi((1)<(1)) != Phi((1))<Phi((1))", "(1),(1)", lhs != wq_product(p1, p1, Op::Prec));
    rec.truth("Phi((1)<(1)) != Phi((1))<=Phi((1))", "(1),(1)", lhs != wq_product(p1, p1, Op::PrecEq));
}

void suite_psi_morphism(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length;
    const auto psi = [](const FQSymElem& a) { return psi_embed(a); };
    hopf_morphism_laws(rec, "Psi", psi, L);
    for (int n = 1; n <= L; ++n) {
        const auto& words = enumerate_packed(n);
        bool refl = true, anti = true, trans = true, iota_ok = true;
        for (const auto& s : words) {
            refl = refl && word_leq(s, s);
            for (const auto& t : words) {
                if (!word_leq(s, t)) continue;
                anti = anti && (!word_leq(t, s) || s == t);
                iota_ok = iota_ok && iota(s) == iota(t);
                for (const auto& u : words) trans = trans && (!word_leq(t, u) || word_leq(s, u));
            }
        }
        const std::string in = "n=" + std::to_string(n);
        rec.truth("word order reflexive", in, refl);
        rec.truth("word order antisymmetric", in, anti);
        rec.truth("word order transitive", in, trans);
        rec.truth("s <= t implies iota(s) = iota(t)", in, iota_ok);
    }
}

}  // namespace qsh::checks
