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

#ifndef QSH_FORMAT_HPP
#define QSH_FORMAT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qsh/decorated.hpp"
#include "qsh/fqsym.hpp"
#include "qsh/lincomb.hpp"
#include "qsh/packed_word.hpp"
#include "qsh/tensor.hpp"
#include "qsh/trees.hpp"

namespace qsh {

using Json = nlohmann::ordered_json;

// Basis-level text.
inline std::string basis_text(const PackedWord& w) { return w.to_string(); }
inline std::string basis_text(const Permutation& p) { return p.to_string(); }
inline std::string basis_text(const TensorWord& w) { return w.to_string(); }
inline std::string basis_text(const DecoratedPackedWord& w) { return "(" + w.to_string() + ")"; }
inline std::string basis_text(const SchroderTree& t) { return t.encoding(); }
template <class A, class B>
std::string basis_text(const std::pair<A, B>& p) {
    return basis_text(p.first) + " ⊗ " + basis_text(p.second);
}

// Basis-level JSON fields, merged into each term object.
void basis_json(const PackedWord& w, Json& term);
void basis_json(const Permutation& p, Json& term);
void basis_json(const TensorWord& w, Json& term);
void basis_json(const DecoratedPackedWord& w, Json& term);
void basis_json(const SchroderTree& t, Json& term);
template <class A, class B>
void basis_json(const std::pair<A, B>& p, Json& term) {
    Json left = Json::object();
    Json right = Json::object();
    basis_json(p.first, left);
    basis_json(p.second, right);
    term["left"] = std::move(left);
    term["right"] = std::move(right);
}

/// Terms in descending canonical order: "(12) + 1/2 (11)"; "0" when empty.
template <class B>
std::string to_text(const LinComb<B>& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        const Rational& c = it->second;
        const bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational mag = c.abs();
        if (!mag.is_one()) out += mag.to_string() + " ";
        out += basis_text(it->first);
    }
    return out;
}

/// {"basis": tag, "terms": [...]} with terms in ascending canonical order.
template <class B>
Json to_json(const LinComb<B>& x, std::string_view basis) {
    Json terms = Json::array();
    for (const auto& [b, c] : x) {
        Json t = Json::object();
        basis_json(b, t);
        t["coeff"] = c.to_string();
        terms.push_back(std::move(t));
    }
    Json j;
    j["basis"] = std::string(basis);
    j["terms"] = std::move(terms);
    return j;
}

// Basis parsers. Each throws Parse on malformed text.
/// "212", "2,1,2", "[2,1,2]", "(212)"; "", "()" and "[]" are the empty word.
PackedWord parse_packed_word(std::string_view text);
Permutation parse_permutation(std::string_view text);
/// "x1|x2.x3"; "1" is the empty word; JSON [[1],[2,3]].
TensorWord parse_tensor_word(std::string_view text);
/// "2,1,2;1,1,2", "212;112"; JSON {"word":[2,1,2],"deg":[1,1,2]}.
DecoratedPackedWord parse_decorated(std::string_view text);

/// Splits at top-level '+' and '-' and reads an optional rational coefficient
/// before each basis element. The coefficient is separated from the element by
/// a space or '*', or is directly followed by '('.
std::vector<std::pair<Rational, std::string>> split_terms(std::string_view text);
/// True for "0" up to surrounding spaces.
bool is_zero_literal(std::string_view text);

template <class B, class P>
LinComb<B> parse_lincomb(std::string_view text, P&& parse_basis) {
    LinComb<B> out;
    if (is_zero_literal(text)) return out;
    for (const auto& [c, body] : split_terms(text)) out.add_term(parse_basis(body), c);
    return out;
}

}  // namespace qsh

#endif  // QSH_FORMAT_HPP
