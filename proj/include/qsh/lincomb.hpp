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

#ifndef QSH_LINCOMB_HPP
#define QSH_LINCOMB_HPP

#include <map>
#include <type_traits>
#include <utility>

#include "qsh/rational.hpp"

namespace qsh {

/// Finite formal rational linear combination over an ordered basis.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when their term maps are equal; iteration follows the basis order `B::operator<`.
template <class B>
class LinComb {
public:
    using Basis = B;
    using Terms = std::map<B, Rational>;
    using const_iterator = typename Terms::const_iterator;

    LinComb() = default;
    explicit LinComb(const B& b, const Rational& c = Rational(1)) { add_term(b, c); }

    void add_term(const B& b, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add_scaled(const LinComb& other, const Rational& c) {
        if (c.is_zero()) return;
        for (const auto& [b, x] : other.terms_) add_term(b, x * c);
    }

    Rational coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

template <class T>
struct is_lincomb : std::false_type {};
template <class B>
struct is_lincomb<LinComb<B>> : std::true_type {};

/// Extends a basis-level map `f: B -> LinComb<C>` by linearity.
template <class B, class F>
auto apply_linear(const LinComb<B>& x, F&& f) {
    using Out = std::decay_t<decltype(f(std::declval<const B&>()))>;
    static_assert(is_lincomb<Out>::value, "linear kernel must return a LinComb");
    Out out;
    for (const auto& [b, c] : x) out.add_scaled(f(b), c);
    return out;
}

/// Extends a basis-pair kernel `k: (A, B) -> LinComb<C>` by bilinearity.
template <class A, class B, class F>
auto apply_bilinear(const LinComb<A>& x, const LinComb<B>& y, F&& k) {
    using Out = std::decay_t<decltype(k(std::declval<const A&>(), std::declval<const B&>()))>;
    static_assert(is_lincomb<Out>::value, "bilinear kernel must return a LinComb");
    Out out;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) out.add_scaled(k(a, b), ca * cb);
    }
    return out;
}

template <class A, class B>
LinComb<std::pair<A, B>> tensor(const LinComb<A>& x, const LinComb<B>& y) {
    LinComb<std::pair<A, B>> out;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) out.add_term({a, b}, ca * cb);
    }
    return out;
}

/// Applies `f ⊗ g` to a combination of pairs.
template <class A, class B, class F, class G>
auto apply_tensor(const LinComb<std::pair<A, B>>& x, F&& f, G&& g) {
    using L = std::decay_t<decltype(f(std::declval<const A&>()))>;
    using R = std::decay_t<decltype(g(std::declval<const B&>()))>;
    LinComb<std::pair<typename L::Basis, typename R::Basis>> out;
    for (const auto& [ab, c] : x) out.add_scaled(tensor(f(ab.first), g(ab.second)), c);
    return out;
}

/// Combinations of triples, used to compare iterated coproducts.
template <class A, class B, class C>
LinComb<std::pair<A, std::pair<B, C>>> reassociate(const LinComb<std::pair<std::pair<A, B>, C>>& x) {
    LinComb<std::pair<A, std::pair<B, C>>> out;
    for (const auto& [abc, c] : x) out.add_term({abc.first.first, {abc.first.second, abc.second}}, c);
    return out;
}

}  // namespace qsh

#endif  // QSH_LINCOMB_HPP
