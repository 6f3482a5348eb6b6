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

#ifndef QSH_DECORATED_HPP
#define QSH_DECORATED_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "qsh/lincomb.hpp"
#include "qsh/ops.hpp"
#include "qsh/packed_word.hpp"
#include "qsh/tensor.hpp"
#include "qsh/wqsym.hpp"

namespace qsh {

/// (σ, d): a packed word with a positive degree on each position.
class DecoratedPackedWord {
public:
    DecoratedPackedWord() = default;
    /// Throws InvalidDecoration on a length mismatch or a degree below 1.
    DecoratedPackedWord(PackedWord word, std::vector<int> degrees);
    /// All degrees 1.
    static DecoratedPackedWord plain(const PackedWord& word);

    const PackedWord& word() const { return word_; }
    const std::vector<int>& degrees() const { return deg_; }
    std::size_t size() const { return word_.size(); }
    bool empty() const { return word_.empty(); }
    int total_degree() const;

    friend bool operator==(const DecoratedPackedWord&, const DecoratedPackedWord&) = default;
    friend std::strong_ordering operator<=>(const DecoratedPackedWord& a, const DecoratedPackedWord& b) {
        if (auto c = a.word_ <=> b.word_; c != 0) return c;
        return a.deg_ <=> b.deg_;
    }

    /// "2,1,2;1,1,2"
    std::string to_string() const;

private:
    PackedWord word_;
    std::vector<int> deg_;
};

using DescElem = LinComb<DecoratedPackedWord>;
using DecPairs = LinComb<std::pair<DecoratedPackedWord, DecoratedPackedWord>>;

/// (σ∘τ, e) when max τ = |σ| and Σ_{τ(i)=j} e(i) = d(j) for every j; zero otherwise.
DescElem dec_compose(const DecoratedPackedWord& a, const DecoratedPackedWord& b);
DescElem dec_compose(const DescElem& a, const DescElem& b);

/// The WQSym products with decorations carried along as (d, e).
DescElem dec_product(const DecoratedPackedWord& a, const DecoratedPackedWord& b, Op op);
DescElem dec_product(const DescElem& a, const DescElem& b, Op op);

/// Value-splitting coproducts, decorations following their letters.
DecPairs dec_coproduct(const DecoratedPackedWord& a, bool reduced = false);
DecPairs dec_coproduct(const DescElem& a, bool reduced = false);
DecPairs dec_half_coproduct(const DecoratedPackedWord& a, Op side);
DecPairs dec_half_coproduct(const DescElem& a, Op side);

/// F_(σ,d)(w): F_σ(w) when |w| = |σ| and deg(w_i) = d(i), zero otherwise.
TensorElem dec_action(const DecoratedPackedWord& a, const TensorWord& w);
TensorElem dec_action(const DescElem& a, const TensorWord& w);
Endo as_endo(DescElem a);

/// Drops decorations.
WQSymElem forget_decorations(const DescElem& a);
/// Decorates every word with degree 1 everywhere.
DescElem plain_decorations(const WQSymElem& a);

/// Σ of the increasing decorated words (1..k; d) with d(1)+..+d(k) = n.
DescElem p_projection(int n);

enum class QMode { Definition, DescentFormula };

/// q_n = F_(1;n), or the alternating sum of p_{a_1} ≺ (p_{a_2} ★ ... ★ p_{a_k})
/// over compositions of n, with the convolution operations on endomorphisms.
Endo q_projection(int n, QMode mode);

}  // namespace qsh

#endif  // QSH_DECORATED_HPP
