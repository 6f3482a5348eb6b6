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

#include "qsh/series.hpp"

#include <algorithm>

#include <json.hpp>

#include "qsh/error.hpp"

namespace qsh {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 1) throw Error(ErrorKind::OrderTooLow, "series order must be at least 1");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs, Rational constant) : TruncatedSeries(order) {
    c_[0] = std::move(constant);
    for (std::size_t i = 0; i < coeffs.size() && i + 1 < c_.size(); ++i) c_[i + 1] = std::move(coeffs[i]);
}

TruncatedSeries TruncatedSeries::identity(int order) { return monomial(order, 1); }

TruncatedSeries TruncatedSeries::monomial(int order, int degree, const Rational& c) {
    TruncatedSeries s(order);
    if (degree <= order) s.c_[static_cast<std::size_t>(degree)] = c;
    return s;
}

TruncatedSeries TruncatedSeries::constant(int order, const Rational& c) {
    TruncatedSeries s(order);
    s.c_[0] = c;
    return s;
}

Rational TruncatedSeries::coeff(int n) const {
    if (n < 0 || n > order()) return Rational(0);
    return c_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set_coeff(int n, const Rational& c) {
    if (n < 0 || n > order()) throw Error(ErrorKind::OrderTooLow, "coefficient beyond truncation order");
    c_[static_cast<std::size_t>(n)] = c;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    TruncatedSeries s(std::min(order, this->order()));
    for (int i = 0; i <= s.order(); ++i) s.c_[i] = c_[i];
    return s;
}

TruncatedSeries TruncatedSeries::derivative() const {
    // d/dX loses one order of precision; an order-1 series keeps order 1 with
    // an exact constant derivative only when nothing above X is claimed.
    TruncatedSeries s(std::max(order() - 1, 1));
    for (int i = 1; i <= order() && i - 1 <= s.order(); ++i) s.c_[i - 1] = c_[i] * Rational(i);
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s.c_[i] = a.c_[i] - b.c_[i];
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    const int n = s.order();
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (!b.c_[j].is_zero()) s.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return s;
}

TruncatedSeries operator*(const Rational& k, const TruncatedSeries& a) {
    TruncatedSeries s = a;
    for (auto& c : s.c_) c *= k;
    return s;
}

std::string TruncatedSeries::to_json() const {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (int i = 0; i <= order(); ++i) {
        if (!c_[i].is_zero()) coeffs[std::to_string(i)] = c_[i].to_string();
    }
    nlohmann::ordered_json j;
    j["order"] = order();
    j["coeffs"] = coeffs;
    return j.dump();
}

TruncatedSeries TruncatedSeries::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("series JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("order") || !j["order"].is_number_integer()) {
        throw Error(ErrorKind::Parse, "series JSON needs an integer \"order\"");
    }
    TruncatedSeries s(j["order"].get<int>());
    if (j.contains("coeffs")) {
        if (!j["coeffs"].is_object()) throw Error(ErrorKind::Parse, "\"coeffs\" must be an object");
        for (const auto& [key, value] : j["coeffs"].items()) {
            int deg = 0;
            try {
                std::size_t used = 0;
                deg = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw Error(ErrorKind::Parse, "bad degree key '" + key + "'");
            }
            if (deg < 0) throw Error(ErrorKind::Parse, "negative degree");
            if (deg > s.order()) continue;
            const std::string v = value.is_string() ? value.get<std::string>() : value.dump();
            s.c_[deg] = Rational::parse(v);
        }
    }
    return s;
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (int i = 0; i <= order(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational mag = c.abs();
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (!mag.is_one()) out += mag.to_string() + " ";
        out += i == 1 ? "X" : "X^" + std::to_string(i);
    }
    out += out.empty() ? "O(X^" : " + O(X^";
    out += std::to_string(order() + 1) + ")";
    return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries series_compose(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!b.constant_term().is_zero()) throw Error(ErrorKind::NonComposable, "inner series has a nonzero constant term");
    const int n = std::min(a.order(), b.order());
    const TruncatedSeries inner = b.truncated(n);
    // Horner: a_n, then r <- r*B + a_k.
    TruncatedSeries r = TruncatedSeries::constant(n, a.coeff(n));
    for (int k = n - 1; k >= 0; --k) r = r * inner + TruncatedSeries::constant(n, a.coeff(k));
    return r;
}

TruncatedSeries series_comp_inverse(const TruncatedSeries& a) {
    if (!a.constant_term().is_zero()) throw Error(ErrorKind::NonInvertible, "series has a nonzero constant term");
    if (a.coeff(1).is_zero()) throw Error(ErrorKind::NonInvertible, "linear coefficient is zero");
    const int n = a.order();
    // powers[k] = A^k
    std::vector<TruncatedSeries> powers;
    powers.reserve(static_cast<std::size_t>(n) + 1);
    powers.push_back(TruncatedSeries::constant(n, Rational(1)));
    for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * a);
    TruncatedSeries c(n);
    const Rational a1 = a.coeff(1);
    c.set_coeff(1, a1.inverse());
    for (int m = 2; m <= n; ++m) {
        // [X^m] sum_k c_k A^k = 0, and [X^m] A^m = a1^m.
        Rational acc(0);
        for (int k = 1; k < m; ++k) acc += c.coeff(k) * powers[k].coeff(m);
        c.set_coeff(m, -acc / a1.pow(static_cast<unsigned>(m)));
    }
    return c;
}

TruncatedSeries series_divide(const TruncatedSeries& b, const TruncatedSeries& u) {
    if (u.constant_term().is_zero()) throw Error(ErrorKind::DivisionByNonUnit, "divisor has a zero constant term");
    const int n = std::min(b.order(), u.order());
    TruncatedSeries q(n);
    const Rational u0inv = u.constant_term().inverse();
    for (int m = 0; m <= n; ++m) {
        Rational acc = b.coeff(m);
        for (int k = 0; k < m; ++k) acc -= q.coeff(k) * u.coeff(m - k);
        if (m == 0) {
            q = TruncatedSeries::constant(n, acc * u0inv);
        } else {
            q.set_coeff(m, acc * u0inv);
        }
    }
    return q;
}

TruncatedSeries series_expm1_of(const TruncatedSeries& b) {
    if (!b.constant_term().is_zero()) throw Error(ErrorKind::NonComposable, "exp argument has a nonzero constant term");
    const int n = b.order();
    TruncatedSeries out(n);
    TruncatedSeries power = TruncatedSeries::constant(n, Rational(1));
    for (int k = 1; k <= n; ++k) {
        power = power * b;
        out = out + factorial(static_cast<unsigned>(k)).inverse() * power;
    }
    return out;
}

StandardSeries parse_standard_series(std::string_view name) {
    if (name == "expm1") return StandardSeries::Expm1;
    if (name == "log1p") return StandardSeries::Log1p;
    if (name == "pow1p") return StandardSeries::Pow1p;
    if (name == "scale") return StandardSeries::Scale;
    if (name == "xlog") return StandardSeries::XLog;
    throw Error(ErrorKind::Parse, "unknown standard series '" + std::string(name) + "'");
}

TruncatedSeries series_standard(StandardSeries kind, int order, const Rational& a) {
    TruncatedSeries s(order);
    switch (kind) {
        case StandardSeries::Expm1:
            for (int n = 1; n <= order; ++n) s.set_coeff(n, a.pow(n) / factorial(static_cast<unsigned>(n)));
            return s;
        case StandardSeries::Log1p:
            for (int n = 1; n <= order; ++n) s.set_coeff(n, a * Rational(n % 2 == 1 ? 1 : -1, n));
            return s;
        case StandardSeries::Pow1p:
            return series_expm1_of(series_standard(StandardSeries::Log1p, order, a));
        case StandardSeries::Scale:
            s.set_coeff(1, a);
            return s;
        case StandardSeries::XLog: {
            const TruncatedSeries one_plus_x = TruncatedSeries::constant(order, Rational(1)) + TruncatedSeries::identity(order);
            return one_plus_x * series_standard(StandardSeries::Log1p, order);
        }
    }
    return s;
}

}  // namespace qsh
