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

#include "qsh/decorated.hpp"

#include <numeric>

#include "qsh/error.hpp"
#include "qsh/wqsym.hpp"

namespace qsh {

DecoratedPackedWord::DecoratedPackedWord(PackedWord word, std::vector<int> degrees)
    : word_(std::move(word)), deg_(std::move(degrees)) {
    if (deg_.size() != word_.size()) throw Error(ErrorKind::InvalidDecoration, "one degree per letter is required");
    for (int d : deg_) {
        if (d < 1) throw Error(ErrorKind::InvalidDecoration, "degrees must be positive");
    }
}

DecoratedPackedWord DecoratedPackedWord::plain(const PackedWord& word) {
    return DecoratedPackedWord(word, std::vector<int>(word.size(), 1));
}

int DecoratedPackedWord::total_degree() const { return std::accumulate(deg_.begin(), deg_.end(), 0); }

std::string DecoratedPackedWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(word_.letters()[i]);
    }
    out += ';';
    for (std::size_t i = 0; i < deg_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(deg_[i]);
    }
    return out;
}

DescElem dec_compose(const DecoratedPackedWord& a, const DecoratedPackedWord& b) {
    auto c = compose(a.word(), b.word());
    if (!c) return DescElem();
    std::vector<int> sums(a.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) sums[b.word().letters()[i] - 1] += b.degrees()[i];
    if (sums != a.degrees()) return DescElem();
    return DescElem(DecoratedPackedWord(*c, b.degrees()));
}

DescElem dec_compose(const DescElem& a, const DescElem& b) {
    return apply_bilinear(a, b, [](const DecoratedPackedWord& x, const DecoratedPackedWord& y) { return dec_compose(x, y); });
}

DescElem dec_product(const DecoratedPackedWord& a, const DecoratedPackedWord& b, Op op) {
    std::vector<int> deg = a.degrees();
    deg.insert(deg.end(), b.degrees().begin(), b.degrees().end());
    DescElem out;
    for (const auto& [w, c] : wq_product(a.word(), b.word(), op)) out.add_term(DecoratedPackedWord(w, deg), c);
    return out;
}

DescElem dec_product(const DescElem& a, const DescElem& b, Op op) {
    return apply_bilinear(a, b, [op](const DecoratedPackedWord& x, const DecoratedPackedWord& y) { return dec_product(x, y, op); });
}

namespace {

DecoratedPackedWord restrict_dec(const DecoratedPackedWord& a, int lo, int hi) {
    std::vector<int> deg;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int x = a.word().letters()[i];
        if (x >= lo && x <= hi) deg.push_back(a.degrees()[i]);
    }
    return DecoratedPackedWord(restrict_range(a.word(), lo, hi), std::move(deg));
}

DecPairs dec_splits(const DecoratedPackedWord& a, int from, int to) {
    DecPairs out;
    const int m = a.word().max();
    for (int k = from; k <= to; ++k) out.add_term({restrict_dec(a, 1, k), restrict_dec(a, k + 1, m)}, Rational(1));
    return out;
}

}  // namespace

DecPairs dec_coproduct(const DecoratedPackedWord& a, bool reduced) {
    const int m = a.word().max();
    return reduced ? dec_splits(a, 1, m - 1) : dec_splits(a, 0, m);
}

DecPairs dec_coproduct(const DescElem& a, bool reduced) {
    DecPairs out;
    for (const auto& [w, c] : a) out.add_scaled(dec_coproduct(w, reduced), c);
    return out;
}

DecPairs dec_half_coproduct(const DecoratedPackedWord& a, Op side) {
    if (a.empty()) throw Error(ErrorKind::EmptyWord, "half coproduct of the empty word");
    const int first = a.word()(1);
    if (side == Op::Prec) return dec_splits(a, first, a.word().max() - 1);
    if (side == Op::Succ) return dec_splits(a, 1, first - 1);
    throw Error(ErrorKind::Parse, "half coproduct side must be prec or succ");
}

DecPairs dec_half_coproduct(const DescElem& a, Op side) {
    DecPairs out;
    for (const auto& [w, c] : a) out.add_scaled(dec_half_coproduct(w, side), c);
    return out;
}

TensorElem dec_action(const DecoratedPackedWord& a, const TensorWord& w) {
    if (a.size() != w.size()) return TensorElem();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (static_cast<int>(w[i].degree()) != a.degrees()[i]) return TensorElem();
    }
    return f_action(a.word(), w);
}

TensorElem dec_action(const DescElem& a, const TensorWord& w) {
    TensorElem out;
    for (const auto& [x, c] : a) out.add_scaled(dec_action(x, w), c);
    return out;
}

Endo as_endo(DescElem a) {
    return [a = std::move(a)](const TensorWord& w) { return dec_action(a, w); };
}

WQSymElem forget_decorations(const DescElem& a) {
    WQSymElem out;
    for (const auto& [x, c] : a) out.add_term(x.word(), c);
    return out;
}

DescElem plain_decorations(const WQSymElem& a) {
    DescElem out;
    for (const auto& [w, c] : a) out.add_term(DecoratedPackedWord::plain(w), c);
    return out;
}

namespace {

void for_each_composition(int n, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
    if (n == 0) {
        f(cur);
        return;
    }
    for (int a = 1; a <= n; ++a) {
        cur.push_back(a);
        for_each_composition(n - a, cur, f);
        cur.pop_back();
    }
}

}  // namespace

DescElem p_projection(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidDecoration, "p_n needs n >= 1");
    DescElem out;
    std::vector<int> cur;
    for_each_composition(n, cur, [&out](const std::vector<int>& d) {
        std::vector<int> id(d.size());
        std::iota(id.begin(), id.end(), 1);
        out.add_term(DecoratedPackedWord(PackedWord::trusted(id, static_cast<int>(d.size())), d), Rational(1));
    });
    return out;
}

Endo q_projection(int n, QMode mode) {
    if (n < 1) throw Error(ErrorKind::InvalidDecoration, "q_n needs n >= 1");
    if (mode == QMode::Definition) return as_endo(DescElem(DecoratedPackedWord(PackedWord{1}, {n})));
    std::vector<std::pair<Endo, Rational>> terms;
    std::vector<int> cur;
    for_each_composition(n, cur, [&terms](const std::vector<int>& a) {
        const std::size_t k = a.size();
        Endo rest;
        if (k > 1) {
            rest = as_endo(p_projection(a[1]));
            for (std::size_t i = 2; i < k; ++i) rest = convolve(rest, as_endo(p_projection(a[i])), Op::Star);
        }
        Endo term = as_endo(p_projection(a[0]));
        if (k > 1) term = convolve(term, rest, Op::Prec);
        terms.emplace_back(std::move(term), Rational(k % 2 == 1 ? 1 : -1));
    });
    return [terms = std::move(terms)](const TensorWord& w) {
        TensorElem out;
        for (const auto& [f, c] : terms) out.add_scaled(f(w), c);
        return out;
    };
}

}  // namespace qsh
