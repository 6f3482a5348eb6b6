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

#ifndef QSH_TENSOR_HPP
#define QSH_TENSOR_HPP

#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qsh/lincomb.hpp"
#include "qsh/ops.hpp"
#include "qsh/packed_word.hpp"
#include "qsh/series.hpp"

namespace qsh {

/// A nonempty commutative monomial in x1, x2, ..., kept as a sorted multiset of indices.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> vars);
    static Monomial var(int i) { return Monomial({i}); }

    const std::vector<int>& vars() const { return vars_; }
    std::size_t degree() const { return vars_.size(); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        return a.vars_ <=> b.vars_;
    }

    /// "x1.x2"
    std::string to_string() const;

private:
    std::vector<int> vars_;
};

/// x_1 ⊗ ... ⊗ x_n; empty is the unit of T(V).
class TensorWord {
public:
    TensorWord() = default;
    explicit TensorWord(std::vector<Monomial> letters) : letters_(std::move(letters)) {}

    /// x_first x_{first+1} ... x_{first+n-1}, one variable per letter.
    static TensorWord distinct(std::size_t n, int first = 1);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::size_t degree() const;
    const Monomial& operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Monomial>& letters() const { return letters_; }
    /// Letters [from, to).
    TensorWord slice(std::size_t from, std::size_t to) const;
    TensorWord operator+(const TensorWord& o) const;

    friend bool operator==(const TensorWord&, const TensorWord&) = default;
    friend std::strong_ordering operator<=>(const TensorWord& a, const TensorWord& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        return a.letters_ <=> b.letters_;
    }

    /// "x1|x2.x3|x1"; the empty word is "1".
    std::string to_string() const;

private:
    std::vector<Monomial> letters_;
};

using TensorElem = LinComb<TensorWord>;
using TensorPairs = LinComb<std::pair<TensorWord, TensorWord>>;
using Endo = std::function<TensorElem(const TensorWord&)>;

/// Hoffman products: av≺bw = a(v ⧢ bw), av≻bw = b(av ⧢ w), av•bw = (a.b)(v ⧢ w).
/// Star is the quasi-shuffle ⧢, Sh is the shuffle (• replaced by zero).
/// The empty word is the unit of Star and Sh; 1 op 1 for other ops is UnitMisuse.
TensorElem tv_product(const TensorWord& u, const TensorWord& v, Op op);
TensorElem tv_product(const TensorElem& a, const TensorElem& b, Op op);

/// Deconcatenation; `reduced` drops the two splits with an empty side.
TensorPairs tv_coproduct(const TensorWord& w, bool reduced = false);
TensorPairs tv_coproduct(const TensorElem& a, bool reduced = false);

/// F_σ(x_1..x_l): letter j is the product of the x_i with σ(i) = j; zero unless l = |σ|.
TensorElem f_action(const PackedWord& s, const TensorWord& w);
TensorElem f_action(const PackedWord& s, const TensorElem& a);

/// w if |w| = 1, else 0.
TensorElem pi_canonical(const TensorWord& w);

/// Linear extension of a basis-level map.
TensorElem apply_endo(const Endo& f, const TensorElem& a);

/// (f op g)(w) = Σ over reduced deconcatenations w = w' w'' of f(w') op g(w'').
Endo convolve(Endo f, Endo g, Op op);

/// The unique π_f with f = π_f + π_f ≺ f, by recursion on the deconcatenation filtration.
TensorElem pi_f(const Endo& f, const TensorWord& w);

/// a_1 ≺ (a_2 ≺ (... ≺ a_k)).
TensorElem theta_nested_left(const TensorWord& w);

/// φ_A(w) = Σ over compositions (i_1..i_k) of |w| of a_{i_1}..a_{i_k} F_{(1^{i_1} .. k^{i_k})}(w).
/// Throws OrderTooLow if order(A) < |w| and NonComposable if A(0) ≠ 0.
TensorElem phi_series_endo(const TruncatedSeries& A, const TensorWord& w);
TensorElem phi_series_endo(const TruncatedSeries& A, const TensorElem& a);

/// D_A(w) = Σ_i a_i Σ_j (w with letters j..j+i−1 multiplied together). Throws OrderTooLow.
TensorElem coderivation(const TruncatedSeries& A, const TensorWord& w);
TensorElem coderivation(const TruncatedSeries& A, const TensorElem& a);

}  // namespace qsh

#endif  // QSH_TENSOR_HPP
