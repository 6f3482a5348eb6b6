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

#ifndef QSH_TESTS_ORACLES_HPP
#define QSH_TESTS_ORACLES_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "qsh/series.hpp"
#include "qsh/tensor.hpp"
#include "qsh/wqsym.hpp"

// Brute-force reference implementations used only by the tests.
namespace oracle {

using qsh::Op;
using qsh::Rational;

inline bool is_packed(const std::vector<int>& w) {
    std::set<int> vals(w.begin(), w.end());
    return vals.empty() || (*vals.begin() == 1 && *vals.rbegin() == static_cast<int>(vals.size()));
}

inline std::vector<int> packed(std::vector<int> w) {
    std::vector<int> vals = w;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (int& x : w) x = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), x) - vals.begin()) + 1;
    return w;
}

// All packed words of length n, by filtering every word over 1..n.
inline std::vector<std::vector<int>> packed_words(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> w(n, 1);
    while (true) {
        if (is_packed(w)) out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w[i] == n) w[i--] = 1;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

// σ op τ as the sum of the packed words u whose prefix packs to σ and suffix to τ,
// split by where the value 1 occurs.
inline qsh::WQSymElem wq_product(const qsh::PackedWord& s, const qsh::PackedWord& t, Op op) {
    const int k = static_cast<int>(s.size()), l = static_cast<int>(t.size());
    qsh::WQSymElem out;
    for (const auto& u : packed_words(k + l)) {
        const std::vector<int> pre(u.begin(), u.begin() + k), suf(u.begin() + k, u.end());
        if (packed(pre) != s.letters() || packed(suf) != t.letters()) continue;
        const bool left = std::count(pre.begin(), pre.end(), 1) > 0;
        const bool right = std::count(suf.begin(), suf.end(), 1) > 0;
        bool keep = false;
        switch (op) {
            case Op::Prec: keep = left && !right; break;
            case Op::Succ: keep = !left && right; break;
            case Op::Dot: keep = left && right; break;
            case Op::PrecEq: keep = left; break;
            case Op::SuccEq: keep = right; break;
            default: keep = true; break;
        }
        if (keep) out.add_term(qsh::PackedWord(u), Rational(1));
    }
    return out;
}

using Word = std::vector<std::vector<int>>;  // letters as sorted variable lists

inline qsh::TensorWord to_tensor(const Word& w) {
    std::vector<qsh::Monomial> letters;
    for (const auto& m : w) letters.emplace_back(m);
    return qsh::TensorWord(letters);
}

inline std::vector<int> times(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

// Hoffman's recursion on the first letters; `dot` false gives the shuffle product.
inline std::vector<Word> qsh_words(const Word& u, const Word& v, bool dot) {
    if (u.empty()) return {v};
    if (v.empty()) return {u};
    std::vector<Word> out;
    const auto prefix = [&](const std::vector<int>& a, const std::vector<Word>& rest) {
        for (const auto& r : rest) {
            Word w{a};
            w.insert(w.end(), r.begin(), r.end());
            out.push_back(w);
        }
    };
    const Word u1(u.begin() + 1, u.end()), v1(v.begin() + 1, v.end());
    prefix(u[0], qsh_words(u1, v, dot));
    prefix(v[0], qsh_words(u, v1, dot));
    if (dot) prefix(times(u[0], v[0]), qsh_words(u1, v1, dot));
    return out;
}

inline qsh::TensorElem tv_product(const Word& u, const Word& v, Op op) {
    const Word u1(u.begin() + 1, u.end()), v1(v.begin() + 1, v.end());
    std::vector<Word> terms;
    const auto lead = [&](const std::vector<int>& a, const std::vector<Word>& rest) {
        for (const auto& r : rest) {
            Word w{a};
            w.insert(w.end(), r.begin(), r.end());
            terms.push_back(w);
        }
    };
    switch (op) {
        case Op::Prec: lead(u[0], qsh_words(u1, v, true)); break;
        case Op::Succ: lead(v[0], qsh_words(u, v1, true)); break;
        case Op::Dot: lead(times(u[0], v[0]), qsh_words(u1, v1, true)); break;
        case Op::Sh: terms = qsh_words(u, v, false); break;
        default: terms = qsh_words(u, v, true); break;
    }
    qsh::TensorElem out;
    for (const auto& w : terms) out.add_term(to_tensor(w), Rational(1));
    return out;
}

// Series as coefficient vectors c[0..N].
using Poly = std::vector<Rational>;

inline Poly mul(const Poly& a, const Poly& b) {
    Poly c(std::min(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

inline Poly coeffs(const qsh::TruncatedSeries& s) {
    Poly c;
    for (int i = 0; i <= s.order(); ++i) c.push_back(s.coeff(i));
    c[0] = s.constant_term();
    return c;
}

// Σ a_n B^n with explicit powers of B.
inline Poly compose(const Poly& a, const Poly& b) {
    const std::size_t n = std::min(a.size(), b.size());
    Poly out(n, Rational(0));
    Poly power(n, Rational(0));
    power[0] = Rational(1);
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t i = 0; i < n; ++i) out[i] += a[k] * power[i];
        power = mul(power, Poly(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(n)));
    }
    return out;
}

// Σ_k k! S(n,k) with Stirling numbers of the second kind.
inline long ordered_bell(int n) {
    std::vector<std::vector<long>> S(n + 1, std::vector<long>(n + 1, 0));
    S[0][0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= i; ++k) S[i][k] = k * S[i - 1][k] + S[i - 1][k - 1];
    }
    long total = 0, fact = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= k;
        total += fact * S[n][k];
    }
    return total;
}

}  // namespace oracle

#endif  // QSH_TESTS_ORACLES_HPP
