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

#include <random>

#include "checks/common.hpp"
#include "qsh/series.hpp"
#include "qsh/tensor.hpp"

namespace qsh::checks {

namespace {

// Sample words of length n: distinct variables, a repeated variable, and a degree-2 first letter.
std::vector<TensorWord> sample_words(int n, int first = 1) {
    std::vector<TensorWord> out{TensorWord::distinct(n, first)};
    if (n == 0) return out;
    out.push_back(TensorWord(std::vector<Monomial>(n, Monomial::var(first))));
    std::vector<Monomial> letters = TensorWord::distinct(n, first + 1).letters();
    letters[0] = Monomial({first, first + n});
    out.push_back(TensorWord(std::move(letters)));
    return out;
}

template <class F>
void sample_pairs(int total, F&& f) {
    for (int k = 1; k < total; ++k) {
        for (int l = 1; k + l <= total; ++l) {
            for (const auto& u : sample_words(k, 1)) {
                for (const auto& v : sample_words(l, 2 * k + 1)) f(u, v);
            }
        }
    }
}

std::string show(const TensorWord& u, const TensorWord& v) { return "u=" + u.to_string() + " v=" + v.to_string(); }

TensorPairs map_both(const TensorPairs& d, const Endo& f, const Endo& g) {
    TensorPairs out;
    for (const auto& [p, c] : d) out.add_scaled(tensor(f(p.first), g(p.second)), c);
    return out;
}

Endo series_endo(const TruncatedSeries& A) {
    return [A](const TensorWord& w) { return phi_series_endo(A, w); };
}

Endo identity_endo() {
    return [](const TensorWord& w) { return TensorElem(w); };
}

// φ_A maps the `from` product to the `to` product and is a coalgebra morphism.
void morphism_laws(Recorder& rec, const std::string& name, const TruncatedSeries& A, Op from, Op to, int L) {
    const Endo f = series_endo(A);
    sample_pairs(L, [&](const TensorWord& u, const TensorWord& v) {
        rec.equal(name + " product", show(u, v), apply_endo(f, tv_product(u, v, from)), tv_product(f(u), f(v), to));
    });
    for (int n = 1; n <= L; ++n) {
        for (const auto& w : sample_words(n)) {
            rec.equal(name + " coproduct", w.to_string(), tv_coproduct(f(w)), map_both(tv_coproduct(w), f, f));
        }
    }
}

TruncatedSeries random_series(std::mt19937_64& rng, int order) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> c;
    for (int i = 1; i <= order; ++i) c.emplace_back(num(rng), den(rng));
    return TruncatedSeries(order, c);
}

}  // namespace

void suite_hoffman_iso(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length;
    const int N = std::max(b.order, L + 1);
    const TruncatedSeries E = series_standard(StandardSeries::Expm1, N);
    const TruncatedSeries Lg = series_standard(StandardSeries::Log1p, N);
    morphism_laws(rec, "exp(X)-1 sh->qsh", E, Op::Sh, Op::Star, L);
    morphism_laws(rec, "ln(1+X) qsh->sh", Lg, Op::Star, Op::Sh, L);
    for (int n = 1; n <= L; ++n) {
        for (const auto& w : sample_words(n)) {
            rec.equal("phi_ln o phi_exp = Id", w.to_string(), phi_series_endo(Lg, phi_series_endo(E, w)), TensorElem(w));
            rec.equal("phi_exp o phi_ln = Id", w.to_string(), phi_series_endo(E, phi_series_endo(Lg, w)), TensorElem(w));
        }
    }
    for (const Rational& a : {Rational(1), Rational(2), Rational(1, 2)}) {
        const std::string tag = " a=" + a.to_string();
        morphism_laws(rec, "aX sh->sh" + tag, series_standard(StandardSeries::Scale, N, a), Op::Sh, Op::Sh, L);
        morphism_laws(rec, "exp(aX)-1 sh->qsh" + tag, series_expm1_of(series_standard(StandardSeries::Scale, N, a)), Op::Sh,
                      Op::Star, L);
        morphism_laws(rec, "(1+X)^a-1 qsh->qsh" + tag, series_standard(StandardSeries::Pow1p, N, a), Op::Star, Op::Star, L);
        morphism_laws(rec, "a ln(1+X) qsh->sh" + tag, series_standard(StandardSeries::Log1p, N, a), Op::Star, Op::Sh, L);
    }
    // A series outside the classification breaks the quasi-shuffle law.
    if (L >= 2) {
        TruncatedSeries A(N, {Rational(1), Rational(1)});
        const TensorWord u = TensorWord::distinct(1, 1), v = TensorWord::distinct(1, 2);
        rec.truth("X+X^2 is not qsh->qsh", show(u, v),
                  apply_endo(series_endo(A), tv_product(u, v, Op::Star)) != tv_product(phi_series_endo(A, u), phi_series_endo(A, v), Op::Star));
    }
}

void suite_series_group(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length;
    std::mt19937_64 rng(b.seed);
    for (int round = 0; round < 20; ++round) {
        const int order = 2 + round % 7;
        const TruncatedSeries A = random_series(rng, order), B = random_series(rng, order), C = random_series(rng, order);
        const std::string in = "A=" + A.to_string() + " B=" + B.to_string() + " C=" + C.to_string();
        rec.equal("(A o B) o C = A o (B o C)", in, series_compose(series_compose(A, B), C), series_compose(A, series_compose(B, C)));
        if (!A.coeff(1).is_zero()) {
            const TruncatedSeries inv = series_comp_inverse(A);
            rec.equal("inverse(A) o A = X", in, series_compose(inv, A), TruncatedSeries::identity(order));
            rec.equal("A o inverse(A) = X", in, series_compose(A, inv), TruncatedSeries::identity(order));
        }
    }
    for (int order = 1; order <= 8; ++order) {
        const TruncatedSeries E = series_standard(StandardSeries::Expm1, order);
        const TruncatedSeries Lg = series_standard(StandardSeries::Log1p, order);
        const std::string in = "order " + std::to_string(order);
        rec.equal("expm1 o log1p = X", in, series_compose(E, Lg), TruncatedSeries::identity(order));
        rec.equal("log1p o expm1 = X", in, series_compose(Lg, E), TruncatedSeries::identity(order));
    }
    // Group law on T(V): 20 random pairs at the configured order.
    const int order = std::max(b.order, L);
    for (int round = 0; round < 20; ++round) {
        const TruncatedSeries A = random_series(rng, order), B = random_series(rng, order);
        const TruncatedSeries AB = series_compose(A, B);
        const std::string in = "A=" + A.to_string() + " B=" + B.to_string();
        for (int n = 1; n <= L; ++n) {
            for (const auto& w : sample_words(n)) {
                rec.equal("phi_A o phi_B = phi_(A o B)", in + " w=" + w.to_string(), phi_series_endo(A, phi_series_endo(B, w)),
                          phi_series_endo(AB, w));
            }
        }
    }
    for (int n = 1; n <= L + 1; ++n) {
        for (const auto& w : sample_words(n)) {
            rec.equal("phi_X = Id", w.to_string(), phi_series_endo(TruncatedSeries::identity(L + 1), w), TensorElem(w));
        }
    }
}

void suite_coderivations(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length;
    const int N = std::max(b.order, L + 1);
    std::mt19937_64 rng(b.seed + 1);
    std::vector<std::pair<std::string, TruncatedSeries>> series{
        {"X^2", TruncatedSeries::monomial(N, 2)},
        {"(1+X)ln(1+X)", series_standard(StandardSeries::XLog, N)},
        {"random", random_series(rng, N)},
    };
    const Endo id = identity_endo();
    for (const auto& [name, A] : series) {
        const Endo D = [A](const TensorWord& w) { return coderivation(A, w); };
        for (int n = 1; n <= L; ++n) {
            for (const auto& w : sample_words(n)) {
                const std::string in = "A=" + name + " w=" + w.to_string();
                const TensorPairs d = tv_coproduct(w);
                rec.equal("Delta o D = (D x Id + Id x D) o Delta", in, tv_coproduct(D(w)), map_both(d, D, id) + map_both(d, id, D));
                // π∘D_A(x_1...x_n) = a_n x_1.x_2...x_n
                Monomial m = w[0];
                for (std::size_t i = 1; i < w.size(); ++i) m = m * w[i];
                rec.equal("pi o D = f_A", in, apply_endo(pi_canonical, D(w)), TensorElem(TensorWord({m}), A.coeff(n)));
            }
        }
    }
    for (int n = 1; n <= L + 1; ++n) {
        for (const auto& w : sample_words(n)) {
            rec.equal("D_X(w) = n w", w.to_string(), coderivation(TruncatedSeries::identity(L + 1), w),
                      TensorElem(w, Rational(n)));
        }
    }
    // φ_A⁻¹∘D_B∘φ_A = D_{(B∘A)/A'} with A = exp(X)-1.
    const TruncatedSeries A = series_standard(StandardSeries::Expm1, N + 1);
    const TruncatedSeries Ainv = series_standard(StandardSeries::Log1p, N + 1);
    for (const auto& [name, B] : {std::pair{std::string("X"), TruncatedSeries::identity(N + 1)},
                                  std::pair{std::string("X^2"), TruncatedSeries::monomial(N + 1, 2)}}) {
        const TruncatedSeries C = series_divide(series_compose(B, A), A.derivative());
        for (int n = 1; n <= L; ++n) {
            for (const auto& w : sample_words(n)) {
                const TensorElem lhs = phi_series_endo(Ainv, coderivation(B, phi_series_endo(A, w)));
                rec.equal("conjugation B=" + name, w.to_string(), lhs, coderivation(C, w));
            }
        }
    }
    // Canonical projection π = F_(1) and the recursion f = π_f + π_f ≺ f.
    const Endo pi = pi_canonical;
    const Endo E = series_endo(series_standard(StandardSeries::Expm1, N));
    for (int n = 1; n <= L + 1; ++n) {
        for (const auto& w : sample_words(n)) {
            const std::string in = w.to_string();
            rec.equal("pi + pi<Id = Id", in, pi(w) + convolve(pi, id, Op::Prec)(w), TensorElem(w));
            rec.equal("pi_Id = pi", in, pi_f(id, w), pi(w));
            rec.equal("theta(w) = w", in, theta_nested_left(w), TensorElem(w));
            const Endo pf = [&E](const TensorWord& x) { return pi_f(E, x); };
            rec.equal("f = pi_f + pi_f<f", in, pf(w) + convolve(pf, E, Op::Prec)(w), E(w));
            if (n == 1) rec.equal("pi_f(letter) = f(letter)", in, pi_f(E, w), E(w));
        }
    }
    const TensorWord x = TensorWord::distinct(1, 1), y = TensorWord::distinct(1, 2);
    rec.equal("pi(x>y) = x>y - y<x", show(x, y), apply_endo(pi, tv_product(x, y, Op::Succ)),
              tv_product(x, y, Op::Succ) - tv_product(y, x, Op::Prec));
    rec.equal("pi(x.y) = x.y", show(x, y), apply_endo(pi, tv_product(x, y, Op::Dot)), tv_product(x, y, Op::Dot));
}

void suite_gradation(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length;
    const int N = std::max(b.order, L + 1);
    const TruncatedSeries X = series_standard(StandardSeries::XLog, N);
    for (int k = 2; k <= N; ++k) {
        const Rational expected = Rational(k % 2 == 0 ? 1 : -1) / Rational(k * (k - 1));
        rec.equal("(1+X)ln(1+X) coefficient", "k=" + std::to_string(k), X.coeff(k), expected);
    }
    rec.equal("(1+X)ln(1+X) linear term", "k=1", X.coeff(1), Rational(1));
    rec.truth("(1+X)ln(1+X) constant term", "k=0", X.constant_term().is_zero());
    const TruncatedSeries E = series_standard(StandardSeries::Expm1, N);
    for (int n = 1; n <= L + 1; ++n) {
        for (const auto& w : sample_words(n)) {
            const TensorElem p = phi_series_endo(E, w);
            rec.equal("D(phi(w)) = n phi(w)", w.to_string(), coderivation(X, p), p * Rational(n));
        }
    }
    sample_pairs(L, [&](const TensorWord& u, const TensorWord& v) {
        const auto D = [&](const TensorElem& a) { return coderivation(X, a); };
        rec.equal("D is a qsh derivation", show(u, v), D(tv_product(u, v, Op::Star)),
                  tv_product(D(TensorElem(u)), TensorElem(v), Op::Star) + tv_product(TensorElem(u), D(TensorElem(v)), Op::Star));
    });
}

}  // namespace qsh::checks
