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

#include "qsh/fqsym.hpp"

#include "qsh/error.hpp"

namespace qsh {

FQSymElem fq_product(const Permutation& s, const Permutation& t, Op op) {
    const int k = static_cast<int>(s.size());
    const int l = static_cast<int>(t.size());
    if (k == 0 && l == 0) {
        if (op == Op::Star) return FQSymElem(s);
        throw Error(ErrorKind::UnitMisuse, std::string(to_string(op)) + " of two units");
    }
    if (op != Op::Prec && op != Op::Succ && op != Op::Star) {
        throw Error(ErrorKind::Parse, "FQSym products are prec, succ and star");
    }
    const PackedWord st = shifted_concat(s.word(), t.word());
    FQSymElem out;
    for (const PackedWord& z : enumerate_qsh(k, l, Sector::Sh)) {
        const bool prec = l == 0 || (k > 0 && z(1) == 1);
        if ((op == Op::Prec && !prec) || (op == Op::Succ && prec)) continue;
        std::vector<int> u;
        u.reserve(st.size());
        for (int x : st.letters()) u.push_back(z(x));
        out.add_term(Permutation(PackedWord::trusted(std::move(u), k + l)), Rational(1));
    }
    return out;
}

FQSymElem fq_product(const FQSymElem& a, const FQSymElem& b, Op op) {
    return apply_bilinear(a, b, [op](const Permutation& s, const Permutation& t) { return fq_product(s, t, op); });
}

WordPairs fq_coproduct_words(const Permutation& s, bool reduced) { return wq_coproduct(s.word(), reduced); }

PermPairs fq_coproduct(const Permutation& s, bool reduced) {
    PermPairs out;
    for (const auto& [p, c] : wq_coproduct(s.word(), reduced)) out.add_term({Permutation(p.first), Permutation(p.second)}, c);
    return out;
}

PermPairs fq_coproduct(const FQSymElem& a, bool reduced) {
    PermPairs out;
    for (const auto& [p, c] : a) out.add_scaled(fq_coproduct(p, reduced), c);
    return out;
}

FQSymElem xi_project(const WQSymElem& a) {
    FQSymElem out;
    for (const auto& [w, c] : a) {
        if (is_permutation(w)) out.add_term(Permutation(w), c);
    }
    return out;
}

WQSymElem as_words(const FQSymElem& a) {
    WQSymElem out;
    for (const auto& [p, c] : a) out.add_term(p.word(), c);
    return out;
}

namespace {

// Weakly increasing packed words of length n, i.e. compositions of n.
void weak_increasing(std::size_t n, std::vector<int>& cur, std::vector<PackedWord>& out) {
    if (cur.size() == n) {
        out.push_back(PackedWord::trusted(cur, cur.empty() ? 0 : cur.back()));
        return;
    }
    const int last = cur.empty() ? 0 : cur.back();
    for (int v : {last, last + 1}) {
        if (v == 0) continue;
        cur.push_back(v);
        weak_increasing(n, cur, out);
        cur.pop_back();
    }
}

}  // namespace

WQSymElem phi_embed(const Permutation& s) {
    // τ ∝ σ exactly when τ = ρ∘σ for a weakly increasing packed word ρ.
    std::vector<PackedWord> rhos;
    std::vector<int> cur;
    weak_increasing(s.size(), cur, rhos);
    WQSymElem out;
    for (const PackedWord& r : rhos) {
        const PackedWord tau = *compose(r, s.word());
        out.add_term(tau, word_factorial(tau).inverse());
    }
    return out;
}

WQSymElem phi_embed(const FQSymElem& a) {
    WQSymElem out;
    for (const auto& [p, c] : a) out.add_scaled(phi_embed(p), c);
    return out;
}

WQSymElem phi_embed_oracle(const Permutation& s) {
    WQSymElem out;
    for (const PackedWord& tau : enumerate_packed(s.size())) {
        if (finer_than(tau, s)) out.add_term(tau, word_factorial(tau).inverse());
    }
    return out;
}

WQSymElem psi_embed(const PackedWord& s) {
    WQSymElem out;
    for (const PackedWord& tau : enumerate_packed(s.size())) {
        if (word_leq(tau, s)) out.add_term(tau, Rational(1));
    }
    return out;
}

WQSymElem psi_embed(const FQSymElem& a) {
    WQSymElem out;
    for (const auto& [p, c] : a) out.add_scaled(psi_embed(p.word()), c);
    return out;
}

}  // namespace qsh
