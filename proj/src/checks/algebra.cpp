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

#include <algorithm>
#include <random>
#include <set>

#include "checks/common.hpp"
#include "checks/laws.hpp"
#include "qsh/fqsym.hpp"
#include "qsh/tensor.hpp"
#include "qsh/wqsym.hpp"

namespace qsh::checks {

namespace {

Algebra<PackedWord> wqsym_algebra() {
    return {[](const WQSymElem& a, const WQSymElem& b, Op op) { return wq_product(a, b, op); },
            [](const WQSymElem& a) { return wq_coproduct(a, true); }};
}

Algebra<TensorWord> tensor_algebra() {
    return {[](const TensorElem& a, const TensorElem& b, Op op) { return tv_product(a, b, op); },
            [](const TensorElem& a) { return tv_coproduct(a, true); }};
}

template <class F>
void word_triples(int total, F&& f) {
    for (int a = 1; a + 2 <= total; ++a) {
        for (int b = 1; a + b + 1 <= total; ++b) {
            for (int c = 1; a + b + c <= total; ++c) {
                for (const auto& x : enumerate_packed(a)) {
                    for (const auto& y : enumerate_packed(b)) {
                        for (const auto& z : enumerate_packed(c)) f(x, y, z);
                    }
                }
            }
        }
    }
}

template <class F>
void word_pairs(int total, F&& f) {
    for (int a = 1; a + 1 <= total; ++a) {
        for (int b = 1; a + b <= total; ++b) {
            for (const auto& x : enumerate_packed(a)) {
                for (const auto& y : enumerate_packed(b)) f(x, y);
            }
        }
    }
}

std::string show(const PackedWord& x, const PackedWord& y) { return "x=" + x.to_string() + " y=" + y.to_string(); }
std::string show(const PackedWord& x, const PackedWord& y, const PackedWord& z) {
    return show(x, y) + " z=" + z.to_string();
}

template <class T>
auto recorder_eq(Recorder& rec, const std::string& input) {
    return [&rec, input](const std::string& law, const T& lhs, const T& rhs) { rec.equal(law, input, lhs, rhs); };
}

Endo f_endo(const PackedWord& s) {
    return [s](const TensorWord& w) { return f_action(s, w); };
}

TensorElem act(const WQSymElem& a, const TensorWord& w) {
    TensorElem out;
    for (const auto& [s, c] : a) out.add_scaled(f_action(s, w), c);
    return out;
}

Sector sector_of(Op op) {
    switch (op) {
        case Op::Prec: return Sector::Prec;
        case Op::Succ: return Sector::Succ;
        case Op::Dot: return Sector::Dot;
        default: return Sector::All;
    }
}

template <class B, class D>
LinComb<std::pair<B, std::pair<B, B>>> left_iterate(const LinComb<std::pair<B, B>>& d, D&& cop) {
    // (Δ ⊗ Id)∘Δ, reassociated.
    LinComb<std::pair<std::pair<B, B>, B>> out;
    for (const auto& [p, c] : d) {
        for (const auto& [q, e] : cop(p.first)) out.add_term({q, p.second}, c * e);
    }
    return reassociate(out);
}

template <class B, class D>
LinComb<std::pair<B, std::pair<B, B>>> right_iterate(const LinComb<std::pair<B, B>>& d, D&& cop) {
    LinComb<std::pair<B, std::pair<B, B>>> out;
    for (const auto& [p, c] : d) {
        for (const auto& [q, e] : cop(p.second)) out.add_term({p.first, q}, c * e);
    }
    return out;
}

}  // namespace

void suite_tridendriform(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length;
    const auto W = wqsym_algebra();
    word_triples(L, [&](const PackedWord& x, const PackedWord& y, const PackedWord& z) {
        tridendriform_laws("WQSym", WQSymElem(x), WQSymElem(y), WQSymElem(z), W.product,
                           recorder_eq<WQSymElem>(rec, show(x, y, z)));
    });
    word_pairs(L + 1, [&](const PackedWord& x, const PackedWord& y) {
        nqsh_bialgebra_laws("WQSym", W, WQSymElem(x), WQSymElem(y), recorder_eq<WordPairs>(rec, show(x, y)));
    });

    const auto T = tensor_algebra();
    for (int a = 1; a + 2 <= L; ++a) {
        for (int c2 = 1; a + c2 + 1 <= L; ++c2) {
            for (int c3 = 1; a + c2 + c3 <= L; ++c3) {
                const TensorWord x = TensorWord::distinct(a, 1);
                const TensorWord y = TensorWord::distinct(c2, a + 1);
                const TensorWord z = TensorWord::distinct(c3, a + c2 + 1);
                const std::string in = "x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string();
                tridendriform_laws("T(V)", TensorElem(x), TensorElem(y), TensorElem(z), T.product,
                                   recorder_eq<TensorElem>(rec, in));
            }
        }
    }
    for (int k = 1; k + 1 <= L + 1; ++k) {
        for (int l = 1; k + l <= L + 1; ++l) {
            const TensorWord x = TensorWord::distinct(k, 1);
            const TensorWord y = TensorWord::distinct(l, k + 1);
            const TensorWord xy = TensorWord::distinct(k + l, 1);
            const std::string in = "x=" + x.to_string() + " y=" + y.to_string();
            nqsh_bialgebra_laws("T(V)", T, TensorElem(x), TensorElem(y), recorder_eq<TensorPairs>(rec, in));
            // Quasi-shuffle sectors acting on x_1..x_{k+l} give the products on T(V).
            for (Op op : {Op::Prec, Op::Succ, Op::Dot, Op::Star}) {
                TensorElem rhs;
                for (const PackedWord& z : enumerate_qsh(k, l, sector_of(op))) rhs += f_action(z, xy);
                rec.equal("sector action " + std::string(to_string(op)), in, tv_product(x, y, op), rhs);
            }
            TensorElem sh;
            for (const PackedWord& z : enumerate_qsh(k, l, Sector::Sh)) sh += f_action(z, xy);
            rec.equal("sector action sh", in, tv_product(x, y, Op::Sh), sh);
        }
    }
    // The WQSym products are the convolution products of the F_σ acting on T(V).
    word_pairs(L + 1, [&](const PackedWord& s, const PackedWord& t) {
        const TensorWord w = TensorWord::distinct(s.size() + t.size());
        for (Op op : {Op::Prec, Op::Succ, Op::Dot}) {
            rec.equal("F-action of " + std::string(to_string(op)), show(s, t), act(wq_product(s, t, op), w),
                      convolve(f_endo(s), f_endo(t), op)(w));
        }
    });
}

void suite_hopf_wqsym(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length;
    word_triples(L, [&](const PackedWord& x, const PackedWord& y, const PackedWord& z) {
        const WQSymElem X(x), Y(y), Z(z);
        rec.equal("star associative", show(x, y, z), wq_product(wq_product(X, Y, Op::Star), Z, Op::Star),
                  wq_product(X, wq_product(Y, Z, Op::Star), Op::Star));
    });
    const auto full = [](const PackedWord& w) { return wq_coproduct(w); };
    for (int n = 0; n <= L + 1; ++n) {
        for (const auto& w : enumerate_packed(n)) {
            const auto d = wq_coproduct(w);
            rec.equal("coassociative", w.to_string(), left_iterate<PackedWord>(d, full), right_iterate<PackedWord>(d, full));
        }
    }
    word_pairs(L + 1, [&](const PackedWord& x, const PackedWord& y) {
        const auto lhs = wq_coproduct(wq_product(x, y, Op::Star));
        const auto rhs = pair_product(wq_coproduct(x), wq_coproduct(y),
                                      [](const WQSymElem& a, const WQSymElem& c, Op op) { return wq_product(a, c, op); },
                                      Op::Star, Op::Star);
        rec.equal("Hopf compatibility", show(x, y), lhs, rhs);
    });
    // Internal composition.
    std::vector<PackedWord> small;
    for (int n = 0; n < L; ++n) {
        for (const auto& w : enumerate_packed(n)) small.push_back(w);
    }
    for (const auto& s : small) {
        for (const auto& t : small) {
            const WQSymElem st = wq_compose(s, t);
            for (const auto& r : small) {
                rec.equal("internal product associative", show(s, t, r), wq_compose(st, WQSymElem(r)),
                          wq_compose(WQSymElem(s), wq_compose(t, r)));
            }
        }
    }
    for (int n = 1; n <= L; ++n) {
        const TensorWord w = TensorWord::distinct(n);
        for (const auto& t : enumerate_packed(n)) {
            for (int m = 1; m <= n; ++m) {
                for (const auto& s : enumerate_packed(m)) {
                    rec.equal("F-action representation", show(s, t), f_action(s, f_action(t, w)), act(wq_compose(s, t), w));
                }
            }
        }
    }
    // Faithfulness: the F_σ(x_1..x_n) are distinct basis words.
    for (int n = 1; n <= L + 1; ++n) {
        const TensorWord w = TensorWord::distinct(n);
        std::set<TensorWord> images;
        bool single = true;
        for (const auto& s : enumerate_packed(n)) {
            const TensorElem img = f_action(s, w);
            single = single && img.size() == 1 && img.begin()->second.is_one();
            if (!img.is_zero()) images.insert(img.begin()->first);
        }
        rec.truth("F-action faithful", "n=" + std::to_string(n), single && images.size() == enumerate_packed(n).size());
    }
    // Counting sanity against independent recurrences.
    std::vector<Rational> bell{Rational(1)};
    for (int n = 1; n <= 5; ++n) {
        Rational s(0);
        for (int k = 1; k <= n; ++k) s += binomial(n, k) * bell[n - k];
        bell.push_back(s);
    }
    for (int n = 0; n <= 5; ++n) {
        rec.equal("ordered Bell count", "n=" + std::to_string(n), Rational(static_cast<std::int64_t>(enumerate_packed(n).size())),
                  bell[n]);
    }
    for (int k = 0; k <= 4; ++k) {
        for (int l = 0; l <= 4; ++l) {
            const std::string in = "k=" + std::to_string(k) + " l=" + std::to_string(l);
            rec.equal("|Sh_{k,l}| = C(k+l,k)", in, Rational(static_cast<std::int64_t>(enumerate_qsh(k, l, Sector::Sh).size())),
                      binomial(k + l, k));
            if (k + l == 0) continue;
            std::vector<PackedWord> parts;
            for (Sector s : {Sector::Prec, Sector::Succ, Sector::Dot}) {
                const auto& v = enumerate_qsh(k, l, s);
                parts.insert(parts.end(), v.begin(), v.end());
            }
            std::sort(parts.begin(), parts.end());
            const bool disjoint = std::adjacent_find(parts.begin(), parts.end()) == parts.end();
            // Brute-force QSh_{k,l}: packed words increasing on both blocks.
            std::vector<PackedWord> brute;
            for (const auto& z : enumerate_packed(k + l)) {
                bool inc = true;
                for (int i = 1; i < k; ++i) inc = inc && z(i) < z(i + 1);
                for (int i = k + 1; i < k + l; ++i) inc = inc && z(i) < z(i + 1);
                if (inc) brute.push_back(z);
            }
            rec.truth("QSh = prec + succ + dot, disjoint", in, disjoint && parts == brute && enumerate_qsh(k, l, Sector::All) == brute);
        }
    }
    {
        bool idem = true;
        std::vector<int> cur;
        std::function<void()> go = [&] {
            if (!cur.empty()) {
                const PackedWord p = pack(cur);
                idem = idem && pack(p.letters()) == p;
            }
            if (cur.size() == 6) return;
            for (int v = 1; v <= 6; ++v) {
                cur.push_back(v);
                go();
                cur.pop_back();
            }
        };
        go();
        rec.truth("pack idempotent", "words over 1..6 of length <= 6", idem);
    }
    // LinComb equality ignores insertion order.
    {
        std::mt19937_64 rng(b.seed);
        const auto& words = enumerate_packed(3);
        std::vector<std::pair<PackedWord, Rational>> terms;
        for (std::size_t i = 0; i < words.size(); ++i) terms.emplace_back(words[i], Rational(static_cast<std::int64_t>(i) - 5, 3));
        WQSymElem forward;
        for (const auto& [w, c] : terms) forward.add_term(w, c);
        for (int round = 0; round < 5; ++round) {
            std::shuffle(terms.begin(), terms.end(), rng);
            WQSymElem shuffled;
            for (const auto& [w, c] : terms) shuffled.add_term(w, c);
            rec.equal("LinComb insertion order", "round " + std::to_string(round), shuffled, forward);
        }
    }
}

void suite_hopf_fqsym(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length;
    const auto P = [](const FQSymElem& x, const FQSymElem& y, Op op) { return fq_product(x, y, op); };
    for (int a = 1; a + 2 <= L; ++a) {
        for (int c2 = 1; a + c2 + 1 <= L; ++c2) {
            for (int c3 = 1; a + c2 + c3 <= L; ++c3) {
                for (const auto& x : enumerate_permutations(a)) {
                    for (const auto& y : enumerate_permutations(c2)) {
                        for (const auto& z : enumerate_permutations(c3)) {
                            const std::string in = show(x.word(), y.word(), z.word());
                            const FQSymElem X(x), Y(y), Z(z);
                            rec.equal("FQSym star associative", in, P(P(X, Y, Op::Star), Z, Op::Star), P(X, P(Y, Z, Op::Star), Op::Star));
                            dendriform_laws("FQSym", X, Y, Z, P, recorder_eq<FQSymElem>(rec, in));
                        }
                    }
                }
            }
        }
    }
    const auto full = [](const Permutation& p) { return fq_coproduct(p); };
    for (int n = 0; n <= L + 1; ++n) {
        for (const auto& p : enumerate_permutations(n)) {
            const auto d = fq_coproduct(p);
            rec.equal("FQSym coassociative", p.to_string(), left_iterate<Permutation>(d, full), right_iterate<Permutation>(d, full));
        }
    }
    for (int a = 1; a <= L; ++a) {
        for (int c = 1; a + c <= L + 1; ++c) {
            for (const auto& x : enumerate_permutations(a)) {
                for (const auto& y : enumerate_permutations(c)) {
                    const auto lhs = fq_coproduct(fq_product(x, y, Op::Star));
                    const auto rhs = pair_product(fq_coproduct(x), fq_coproduct(y), P, Op::Star, Op::Star);
                    rec.equal("FQSym Hopf compatibility", show(x.word(), y.word()), lhs, rhs);
                }
            }
        }
    }
}

void suite_duality(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length + 1;
    for (int n = 2; n <= L; ++n) {
        std::map<PackedWord, std::array<WordPairs, 3>> ncop;
        for (const auto& u : enumerate_packed(n)) {
            ncop[u] = {n_basis_coproduct(u, Op::Prec), n_basis_coproduct(u, Op::Succ), n_basis_coproduct(u, Op::Dot)};
        }
        std::map<PackedWord, std::array<WordPairs, 2>> half;
        for (const auto& u : enumerate_packed(n)) half[u] = {wq_half_coproduct(u, Op::Prec), wq_half_coproduct(u, Op::Succ)};
        for (int k = 1; k < n; ++k) {
            for (const auto& s : enumerate_packed(k)) {
                for (const auto& t : enumerate_packed(n - k)) {
                    const std::array<Op, 3> ops{Op::Prec, Op::Succ, Op::Dot};
                    for (std::size_t i = 0; i < 3; ++i) {
                        const WQSymElem prod = wq_product(s, t, ops[i]);
                        bool ok = true;
                        for (const auto& u : enumerate_packed(n)) ok = ok && prod.coeff(u) == ncop[u][i].coeff({s, t});
                        rec.truth("F " + std::string(to_string(ops[i])) + " transposes N coproduct " + std::string(to_string(ops[i])),
                                  show(s, t), ok);
                    }
                    for (std::size_t i = 0; i < 2; ++i) {
                        const WQSymElem prod = n_basis_product(s, t, ops[i]);
                        bool ok = true;
                        for (const auto& u : enumerate_packed(n)) ok = ok && prod.coeff(u) == half[u][i].coeff({s, t});
                        rec.truth("N " + std::string(to_string(ops[i])) + " transposes F half coproduct " + std::string(to_string(ops[i])),
                                  show(s, t), ok);
                    }
                    // Shuffle cardinality of the two N half products.
                    if (n <= 6) {
                        const auto total = n_basis_product(s, t, Op::Prec).size() + n_basis_product(s, t, Op::Succ).size();
                        rec.equal("N prec + succ term count", show(s, t), Rational(static_cast<std::int64_t>(total)), binomial(n, k));
                    }
                }
            }
        }
    }
}

namespace {

template <class B, class Eq, class P, class R, class H>
void half_coproduct_laws(const std::string& where, const LinComb<B>& a, const LinComb<B>& c, P&& prod, R&& red,
                         H&& half, Eq&& eq) {
    using Elem = LinComb<B>;
    const auto id = [](const B& x) { return Elem(x); };
    const auto dl = half(a, Op::Prec);
    const auto dr = half(a, Op::Succ);
    const auto db = red(c);
    const auto with = [&](Op op, const Elem& rhs) { return [&, op, rhs](const B& x) { return prod(Elem(x), rhs, op); }; };
    const auto lwith = [&](Op op, const Elem& lhs) { return [&, op, lhs](const B& x) { return prod(lhs, Elem(x), op); }; };
    {
        auto rhs = pair_product(dl, db, prod, Op::Prec, Op::Star);
        rhs += map_pairs(dl, with(Op::Prec, c), id);
        rhs += map_pairs(dl, id, with(Op::Star, c));
        rhs += map_pairs(db, lwith(Op::Prec, a), id);
        rhs += tensor(a, c);
        eq(where + " D<(a<b)", half(prod(a, c, Op::Prec), Op::Prec), rhs);
    }
    {
        auto rhs = pair_product(dl, db, prod, Op::Succ, Op::Star);
        rhs += map_pairs(db, lwith(Op::Succ, a), id);
        rhs += map_pairs(dl, with(Op::Succ, c), id);
        eq(where + " D<(a>b)", half(prod(a, c, Op::Succ), Op::Prec), rhs);
    }
    {
        auto rhs = pair_product(dl, db, prod, Op::Dot, Op::Star);
        rhs += map_pairs(dl, with(Op::Dot, c), id);
        rhs += map_pairs(db, lwith(Op::Dot, a), id);
        eq(where + " D<(a.b)", half(prod(a, c, Op::Dot), Op::Prec), rhs);
    }
    {
        auto rhs = pair_product(dr, db, prod, Op::Prec, Op::Star);
        rhs += map_pairs(dr, with(Op::Prec, c), id);
        rhs += map_pairs(dr, id, with(Op::Star, c));
        eq(where + " D>(a<b)", half(prod(a, c, Op::Prec), Op::Succ), rhs);
    }
    {
        // Printed with b'' in the first factor and b'_> in the third term; the identity
        // holds with b' and the full reduced coproduct of b.
        auto rhs = pair_product(dr, db, prod, Op::Succ, Op::Star);
        rhs += map_pairs(dr, with(Op::Succ, c), id);
        rhs += map_pairs(db, id, lwith(Op::Star, a));
        rhs += tensor(c, a);
        eq(where + " D>(a>b)", half(prod(a, c, Op::Succ), Op::Succ), rhs);
    }
    {
        auto rhs = pair_product(dr, db, prod, Op::Dot, Op::Star);
        rhs += map_pairs(dr, with(Op::Dot, c), id);
        eq(where + " D>(a.b)", half(prod(a, c, Op::Dot), Op::Succ), rhs);
    }
}

template <class B, class H, class Eq>
void nsh_coalgebra_laws(const std::string& where, const B& w, H&& half, Eq&& eq) {
    const auto l = [&](const B& x) { return half(x, Op::Prec); };
    const auto r = [&](const B& x) { return half(x, Op::Succ); };
    const auto both = [&](const B& x) { return half(x, Op::Prec) + half(x, Op::Succ); };
    const auto dl = l(w);
    const auto dr = r(w);
    eq(where + " NSh coalgebra 1", left_iterate<B>(dl, l), right_iterate<B>(dl, both));
    eq(where + " NSh coalgebra 2", left_iterate<B>(dl, r), right_iterate<B>(dr, l));
    eq(where + " NSh coalgebra 3", left_iterate<B>(dr, both), right_iterate<B>(dr, r));
}

}  // namespace

void suite_bidendriform(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length;
    const auto prod = [](const WQSymElem& x, const WQSymElem& y, Op op) { return wq_product(x, y, op); };
    const auto red = [](const WQSymElem& x) { return wq_coproduct(x, true); };
    const auto half = [](const WQSymElem& x, Op side) { return wq_half_coproduct(x, side); };
    word_pairs(L + 1, [&](const PackedWord& x, const PackedWord& y) {
        half_coproduct_laws("WQSym", WQSymElem(x), WQSymElem(y), prod, red, half,
                            [&](const std::string& law, const WordPairs& l, const WordPairs& r) { rec.equal(law, show(x, y), l, r); });
    });
    const auto half1 = [](const PackedWord& x, Op side) { return wq_half_coproduct(x, side); };
    for (int n = 1; n <= L + 1; ++n) {
        for (const auto& w : enumerate_packed(n)) {
            nsh_coalgebra_laws<PackedWord>("WQSym", w, half1, [&](const std::string& law, const auto& l, const auto& r) {
                rec.equal(law, w.to_string(), l, r);
            });
            rec.equal("D< + D> = reduced coproduct", w.to_string(), wq_half_coproduct(w, Op::Prec) + wq_half_coproduct(w, Op::Succ),
                      wq_coproduct(w, true));
        }
    }
}

}  // namespace qsh::checks
