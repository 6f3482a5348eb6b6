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

#include "qsh/rational.hpp"

#include <cctype>

#include "qsh/error.hpp"

namespace qsh {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::NonComposable: return "NonComposable";
        case ErrorKind::NonInvertible: return "NonInvertible";
        case ErrorKind::DivisionByNonUnit: return "DivisionByNonUnit";
        case ErrorKind::InvalidValueSet: return "InvalidValueSet";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::EmptyWord: return "EmptyWord";
        case ErrorKind::NotPacked: return "NotPacked";
        case ErrorKind::NotPermutation: return "NotPermutation";
        case ErrorKind::OrderTooLow: return "OrderTooLow";
        case ErrorKind::BadComposition: return "BadComposition";
        case ErrorKind::InvalidEdgeSet: return "InvalidEdgeSet";
        case ErrorKind::UnitMisuse: return "UnitMisuse";
        case ErrorKind::NotBinary: return "NotBinary";
        case ErrorKind::InvalidTree: return "InvalidTree";
        case ErrorKind::InvalidDecoration: return "InvalidDecoration";
        case ErrorKind::UnknownSuite: return "UnknownSuite";
    }
    return "Error";
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class to_mpz(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorKind::DivisionByNonUnit, "zero denominator");
    value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num)) throw Error(ErrorKind::Parse, "bad rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rational(mpq_class(to_mpz(num)));
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-') {
        throw Error(ErrorKind::Parse, "bad rational '" + std::string(text) + "'");
    }
    mpz_class d = to_mpz(den);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    mpq_class q(to_mpz(num), d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByNonUnit, "inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(unsigned e) const {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByNonUnit, "division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

}  // namespace qsh
