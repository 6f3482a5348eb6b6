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

#include "qsh/tensor.hpp"

#include <algorithm>
#include <optional>

#include "qsh/error.hpp"

namespace qsh {

Monomial::Monomial(std::vector<int> vars) : vars_(std::move(vars)) {
    if (vars_.empty()) throw Error(ErrorKind::Parse, "a monomial needs at least one variable");
    for (int v : vars_) {
        if (v < 1) throw Error(ErrorKind::Parse, "variable indices start at 1");
    }
    std::sort(vars_.begin(), vars_.end());
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.vars_.reserve(a.degree() + b.degree());
    std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(), std::back_inserter(m.vars_));
    return m;
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i > 0) out += '.';
        out += "x" + std::to_string(vars_[i]);
    }
    return out;
}

TensorWord TensorWord::distinct(std::size_t n, int first) {
    std::vector<Monomial> letters;
    for (std::size_t i = 0; i < n; ++i) letters.push_back(Monomial::var(first + static_cast<int>(i)));
    return TensorWord(std::move(letters));
}

std::size_t TensorWord::degree() const {
    std::size_t d = 0;
    for (const auto& m : letters_) d += m.degree();
    return d;
}

TensorWord TensorWord::slice(std::size_t from, std::size_t to) const {
    return TensorWord(std::vector<Monomial>(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                                            letters_.begin() + static_cast<std::ptrdiff_t>(to)));
}

TensorWord TensorWord::operator+(const TensorWord& o) const {
    std::vector<Monomial> letters = letters_;
    letters.insert(letters.end(), o.letters_.begin(), o.letters_.end());
    return TensorWord(std::move(letters));
}

std::string TensorWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) out += '|';
        out += letters_[i].to_string();
    }
    return out;
}

namespace {

TensorElem prepend(const Monomial& a, const TensorElem& x) {
    TensorElem out;
    for (const auto& [w, c] : x) {
        std::vector<Monomial> letters;
        letters.reserve(w.size() + 1);
        letters.push_back(a);
        letters.insert(letters.end(), w.letters().begin(), w.letters().end());
        out.add_term(TensorWord(std::move(letters)), c);
    }
    return out;
}

// (quasi-)shuffle of the suffixes u[i..] and v[j..], memoized on (i, j).
class Shuffler {
public:
    Shuffler(const TensorWord& u, const TensorWord& v, bool with_dot)
        : u_(u), v_(v), dot_(with_dot), memo_((u.size() + 1) * (v.size() + 1)) {}

    const TensorElem& at(std::size_t i, std::size_t j) {
        auto& slot = memo_[i * (v_.size() + 1) + j];
        if (slot) return *slot;
        TensorElem r;
        if (i == u_.size()) {
            r = TensorElem(v_.slice(j, v_.size()));
        } else if (j == v_.size()) {
            r = TensorElem(u_.slice(i, u_.size()));
        } else {
            r = prec(i, j);
            r += succ(i, j);
            if (dot_) r += dot(i, j);
        }
        slot = std::move(r);
        return *slot;
    }

    TensorElem prec(std::size_t i, std::size_t j) { return prepend(u_[i], at(i + 1, j)); }
    TensorElem succ(std::size_t i, std::size_t j) { return prepend(v_[j], at(i, j + 1)); }
    TensorElem dot(std::size_t i, std::size_t j) { return prepend(u_[i] * v_[j], at(i + 1, j + 1)); }

private:
    const TensorWord& u_;
    const TensorWord& v_;
    bool dot_;
    std::vector<std::optional<TensorElem>> memo_;
};

}  // namespace

TensorElem tv_product(const TensorWord& u, const TensorWord& v, Op op) {
    if (u.empty() && v.empty()) {
        if (op == Op::Star || op == Op::Sh) return TensorElem(u);
        throw Error(ErrorKind::UnitMisuse, std::string(to_string(op)) + " of two units");
    }
    Shuffler sh(u, v, op != Op::Sh);
    switch (op) {
        case Op::Star:
        case Op::Sh:
            return sh.at(0, 0);
        case Op::Prec:
            return u.empty() ? TensorElem() : sh.prec(0, 0);
        case Op::Succ:
            return v.empty() ? TensorElem() : sh.succ(0, 0);
        case Op::Dot:
            return (u.empty() || v.empty()) ? TensorElem() : sh.dot(0, 0);
        case Op::PrecEq:
            if (u.empty()) return TensorElem();
            return v.empty() ? sh.prec(0, 0) : sh.prec(0, 0) + sh.dot(0, 0);
        case Op::SuccEq:
            if (v.empty()) return TensorElem();
            return u.empty() ? sh.succ(0, 0) : sh.succ(0, 0) + sh.dot(0, 0);
    }
    return TensorElem();
}

TensorElem tv_product(const TensorElem& a, const TensorElem& b, Op op) {
    return apply_bilinear(a, b, [op](const TensorWord& u, const TensorWord& v) { return tv_product(u, v, op); });
}

TensorPairs tv_coproduct(const TensorWord& w, bool reduced) {
    TensorPairs out;
    const std::size_t n = w.size();
    const std::size_t lo = reduced ? 1 : 0;
    for (std::size_t i = lo; i + lo <= n; ++i) out.add_term({w.slice(0, i), w.slice(i, n)}, Rational(1));
    return out;
}

TensorPairs tv_coproduct(const TensorElem& a, bool reduced) {
    TensorPairs out;
    for (const auto& [w, c] : a) out.add_scaled(tv_coproduct(w, reduced), c);
    return out;
}

TensorElem f_action(const PackedWord& s, const TensorWord& w) {
    if (s.size() != w.size()) return TensorElem();
    std::vector<std::optional<Monomial>> letters(static_cast<std::size_t>(s.max()));
    for (std::size_t i = 1; i <= s.size(); ++i) {
        auto& slot = letters[s(i) - 1];
        slot = slot ? *slot * w[i - 1] : w[i - 1];
    }
    std::vector<Monomial> out;
    out.reserve(letters.size());
    for (auto& m : letters) out.push_back(std::move(*m));
    return TensorElem(TensorWord(std::move(out)));
}

TensorElem f_action(const PackedWord& s, const TensorElem& a) {
    return apply_linear(a, [&s](const TensorWord& w) { return f_action(s, w); });
}

TensorElem pi_canonical(const TensorWord& w) { return w.size() == 1 ? TensorElem(w) : TensorElem(); }

TensorElem apply_endo(const Endo& f, const TensorElem& a) {
    TensorElem out;
    for (const auto& [w, c] : a) out.add_scaled(f(w), c);
    return out;
}

Endo convolve(Endo f, Endo g, Op op) {
    return [f = std::move(f), g = std::move(g), op](const TensorWord& w) {
        TensorElem out;
        for (std::size_t i = 1; i < w.size(); ++i) {
            out += tv_product(f(w.slice(0, i)), g(w.slice(i, w.size())), op);
        }
        return out;
    };
}

TensorElem pi_f(const Endo& f, const TensorWord& w) {
    // memo[i] = π_f of the prefix of length i.
    std::vector<TensorElem> memo(w.size() + 1);
    for (std::size_t n = 1; n <= w.size(); ++n) {
        TensorElem r = f(w.slice(0, n));
        for (std::size_t i = 1; i < n; ++i) r -= tv_product(memo[i], f(w.slice(i, n)), Op::Prec);
        memo[n] = std::move(r);
    }
    return w.empty() ? f(w) : memo[w.size()];
}

TensorElem theta_nested_left(const TensorWord& w) {
    if (w.empty()) return TensorElem(w);
    TensorElem acc(w.slice(w.size() - 1, w.size()));
    for (std::size_t i = w.size() - 1; i-- > 0;) acc = tv_product(TensorElem(w.slice(i, i + 1)), acc, Op::Prec);
    return acc;
}

namespace {

void check_order(const TruncatedSeries& A, const TensorWord& w) {
    if (static_cast<std::size_t>(A.order()) < w.size()) {
        throw Error(ErrorKind::OrderTooLow, "series order " + std::to_string(A.order()) + " below word length " +
                                                std::to_string(w.size()));
    }
}

void compositions(const TruncatedSeries& A, const TensorWord& w, std::size_t pos, Rational coeff,
                  std::vector<Monomial>& cur, TensorElem& out) {
    if (pos == w.size()) {
        out.add_term(TensorWord(cur), coeff);
        return;
    }
    Monomial m = w[pos];
    for (std::size_t len = 1; pos + len <= w.size(); ++len) {
        if (len > 1) m = m * w[pos + len - 1];
        const Rational a = A.coeff(static_cast<int>(len));
        if (a.is_zero()) continue;
        cur.push_back(m);
        compositions(A, w, pos + len, coeff * a, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TensorElem phi_series_endo(const TruncatedSeries& A, const TensorWord& w) {
    check_order(A, w);
    if (!A.constant_term().is_zero()) throw Error(ErrorKind::NonComposable, "φ_A needs A(0) = 0");
    if (w.empty()) return TensorElem(w);
    TensorElem out;
    std::vector<Monomial> cur;
    compositions(A, w, 0, Rational(1), cur, out);
    return out;
}

TensorElem phi_series_endo(const TruncatedSeries& A, const TensorElem& a) {
    return apply_linear(a, [&A](const TensorWord& w) { return phi_series_endo(A, w); });
}

TensorElem coderivation(const TruncatedSeries& A, const TensorWord& w) {
    check_order(A, w);
    TensorElem out;
    const std::size_t n = w.size();
    for (std::size_t i = 1; i <= n; ++i) {
        const Rational a = A.coeff(static_cast<int>(i));
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j + i <= n; ++j) {
            std::vector<Monomial> letters(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(j));
            Monomial m = w[j];
            for (std::size_t t = 1; t < i; ++t) m = m * w[j + t];
            letters.push_back(m);
            letters.insert(letters.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(j + i), w.letters().end());
            out.add_term(TensorWord(std::move(letters)), a);
        }
    }
    return out;
}

TensorElem coderivation(const TruncatedSeries& A, const TensorElem& a) {
    return apply_linear(a, [&A](const TensorWord& w) { return coderivation(A, w); });
}

}  // namespace qsh
