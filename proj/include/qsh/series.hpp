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

#ifndef QSH_SERIES_HPP
#define QSH_SERIES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qsh/rational.hpp"

namespace qsh {

/// A formal power series known up to X^order. Arithmetic between series of
/// different orders keeps the smaller order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<Rational> coeffs_from_degree_one, Rational constant = Rational(0));

    static TruncatedSeries identity(int order);  // X
    static TruncatedSeries monomial(int order, int degree, const Rational& c = Rational(1));
    static TruncatedSeries constant(int order, const Rational& c);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& constant_term() const { return c_[0]; }
    /// Coefficient of X^n; zero above the truncation order.
    Rational coeff(int n) const;
    void set_coeff(int n, const Rational& c);

    TruncatedSeries truncated(int order) const;
    TruncatedSeries derivative() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

    /// {"order": N, "coeffs": {"1": "1", "2": "1/2"}}; a nonzero constant term appears under "0".
    std::string to_json() const;
    static TruncatedSeries from_json(std::string_view json);
    /// "X + 1/2 X^2 - 1/6 X^3"
    std::string to_string() const;

private:
    std::vector<Rational> c_;  // c_[0] is the constant term
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// A∘B, requires B(0) = 0 (NonComposable otherwise).
TruncatedSeries series_compose(const TruncatedSeries& a, const TruncatedSeries& b);

/// C with C∘A = A∘C = X; requires A(0) = 0 and a_1 ≠ 0 (NonInvertible otherwise).
TruncatedSeries series_comp_inverse(const TruncatedSeries& a);

/// b/u; requires u(0) ≠ 0 (DivisionByNonUnit otherwise).
TruncatedSeries series_divide(const TruncatedSeries& b, const TruncatedSeries& u);

/// exp(B) − 1 for B(0) = 0.
TruncatedSeries series_expm1_of(const TruncatedSeries& b);

enum class StandardSeries { Expm1, Log1p, Pow1p, Scale, XLog };

StandardSeries parse_standard_series(std::string_view name);

/// exp(aX) − 1, a·ln(1+X), (1+X)^a − 1, aX, (1+X)ln(1+X).
TruncatedSeries series_standard(StandardSeries kind, int order, const Rational& a = Rational(1));

}  // namespace qsh

#endif  // QSH_SERIES_HPP
