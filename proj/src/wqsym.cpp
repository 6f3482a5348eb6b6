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

#include "qsh/wqsym.hpp"

#include "qsh/error.hpp"

namespace qsh {

namespace testing {
std::atomic<int> fault{0};
}  // namespace testing

std::vector<Sector> sectors_for(Op op) {
    switch (op) {
        case Op::Prec: return {Sector::Prec};
        case Op::Succ: return {Sector::Succ};
        case Op::Dot: return {Sector::Dot};
        case Op::Star: return {Sector::All};
        case Op::PrecEq: return {Sector::Prec, Sector::Dot};
        case Op::SuccEq: return {Sector::Succ, Sector::Dot};
        case Op::Sh: break;
    }
    throw Error(ErrorKind::Parse, "op sh is not defined on packed words");
}

WQSymElem wq_product(const PackedWord& s, const PackedWord& t, Op op) {
    if (s.empty() && t.empty()) {
        if (op == Op::Star) return WQSymElem(s);
        throw Error(ErrorKind::UnitMisuse, std::string(to_string(op)) + " of two units");
    }
    const PackedWord st = shifted_concat(s, t);
    WQSymElem out;
    for (Sector sec : sectors_for(op)) {
        for (const PackedWord& z : enumerate_qsh(s.max(), t.max(), sec)) {
            std::vector<int> u;
            u.reserve(st.size());
            for (int x : st.letters()) u.push_back(z(x));
            out.add_term(PackedWord::trusted(std::move(u), z.max()), Rational(1));
        }
    }
    if (op == Op::Dot && testing::fault.load() == 1) out *= Rational(2);
    return out;
}

WQSymElem wq_product(const WQSymElem& a, const WQSymElem& b, Op op) {
    return apply_bilinear(a, b, [op](const PackedWord& s, const PackedWord& t) { return wq_product(s, t, op); });
}

WQSymElem wq_compose(const PackedWord& s, const PackedWord& t) {
    auto c = compose(s, t);
    return c ? WQSymElem(*c) : WQSymElem();
}

WQSymElem wq_compose(const WQSymElem& a, const WQSymElem& b) {
    return apply_bilinear(a, b, [](const PackedWord& s, const PackedWord& t) { return wq_compose(s, t); });
}

namespace {

WordPairs value_splits(const PackedWord& s, int from, int to) {
    WordPairs out;
    for (int k = from; k <= to; ++k) {
        out.add_term({restrict_range(s, 1, k), restrict_range(s, k + 1, s.max())}, Rational(1));
    }
    return out;
}

template <class F>
WordPairs linear_pairs(const WQSymElem& a, F&& f) {
    WordPairs out;
    for (const auto& [w, c] : a) out.add_scaled(f(w), c);
    return out;
}

}  // namespace

WordPairs wq_coproduct(const PackedWord& s, bool reduced) {
    if (reduced) return value_splits(s, 1, s.max() - 1);
    return value_splits(s, 0, s.max());
}

WordPairs wq_coproduct(const WQSymElem& a, bool reduced) {
    return linear_pairs(a, [reduced](const PackedWord& w) { return wq_coproduct(w, reduced); });
}

WordPairs wq_half_coproduct(const PackedWord& s, Op side) {
    if (s.empty()) throw Error(ErrorKind::EmptyWord, "half coproduct of the empty word");
    if (side == Op::Prec) return value_splits(s, s(1), s.max() - 1);
    if (side == Op::Succ) return value_splits(s, 1, s(1) - 1);
    throw Error(ErrorKind::Parse, "half coproduct side must be prec or succ");
}

WordPairs wq_half_coproduct(const WQSymElem& a, Op side) {
    return linear_pairs(a, [side](const PackedWord& w) { return wq_half_coproduct(w, side); });
}

WQSymElem n_basis_product(const PackedWord& s, const PackedWord& t, Op side) {
    if (side != Op::Prec && side != Op::Succ) throw Error(ErrorKind::Parse, "N-basis product side must be prec or succ");
    if (s.empty() && t.empty()) throw Error(ErrorKind::UnitMisuse, "N-basis half product of two units");
    const PackedWord st = shifted_concat(s, t);
    const int k = static_cast<int>(s.size());
    WQSymElem out;
    // α(i) is the position receiving letter i of σ⊗τ.
    for (const PackedWord& alpha : enumerate_qsh(k, static_cast<int>(t.size()), Sector::Sh)) {
        const bool first_from_s = k > 0 && alpha(1) == 1;
        if (first_from_s != (side == Op::Prec)) continue;
        std::vector<int> u(st.size());
        for (std::size_t i = 1; i <= st.size(); ++i) u[alpha(i) - 1] = st(i);
        out.add_term(PackedWord::trusted(std::move(u), st.max()), Rational(1));
    }
    return out;
}

WQSymElem n_basis_product(const WQSymElem& a, const WQSymElem& b, Op side) {
    return apply_bilinear(a, b, [side](const PackedWord& s, const PackedWord& t) { return n_basis_product(s, t, side); });
}

WordPairs n_basis_coproduct(const PackedWord& s, Op piece) {
    if (s.empty()) throw Error(ErrorKind::EmptyWord, "N-basis coproduct of the empty word");
    const int n = static_cast<int>(s.size());
    int f = 0;
    int l = 0;
    for (int i = 1; i <= n; ++i) {
        if (s(i) == 1) {
            if (f == 0) f = i;
            l = i;
        }
    }
    int from = 0;
    int to = -1;
    switch (piece) {
        case Op::Prec: from = l; to = n - 1; break;
        case Op::Succ: from = 1; to = f - 1; break;
        case Op::Dot: from = f; to = l - 1; break;
        default: throw Error(ErrorKind::Parse, "N-basis coproduct piece must be prec, succ or dot");
    }
    WordPairs out;
    const auto& v = s.letters();
    for (int k = from; k <= to; ++k) {
        out.add_term({pack(std::span<const int>(v.data(), k)), pack(std::span<const int>(v.data() + k, n - k))}, Rational(1));
    }
    return out;
}

}  // namespace qsh
