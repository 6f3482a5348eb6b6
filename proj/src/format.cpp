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

#include "qsh/format.hpp"

#include <cctype>

#include "qsh/error.hpp"

namespace qsh {

void basis_json(const PackedWord& w, Json& term) { term["word"] = w.letters(); }
void basis_json(const Permutation& p, Json& term) { term["word"] = p.word().letters(); }

void basis_json(const TensorWord& w, Json& term) {
    Json word = Json::array();
    for (const Monomial& m : w.letters()) word.push_back(m.vars());
    term["word"] = std::move(word);
}

void basis_json(const DecoratedPackedWord& w, Json& term) {
    term["word"] = w.word().letters();
    term["deg"] = w.degrees();
}

void basis_json(const SchroderTree& t, Json& term) { term["tree"] = t.encoding(); }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<int> parse_int_list(std::string_view text) {
    text = trim(text);
    if ((text.starts_with('[') && text.ends_with(']')) || (text.starts_with('(') && text.ends_with(')'))) {
        text = trim(text.substr(1, text.size() - 2));
    }
    std::vector<int> out;
    if (text.empty()) return out;
    const bool commas = text.find(',') != std::string_view::npos;
    if (!commas) {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(ErrorKind::Parse, "bad letter '" + std::string(1, c) + "'");
            out.push_back(c - '0');
        }
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        const std::string_view tok = trim(text.substr(start, end - start));
        if (tok.empty()) throw Error(ErrorKind::Parse, "empty letter");
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(ErrorKind::Parse, "bad letter '" + std::string(tok) + "'");
        }
        out.push_back(std::stoi(std::string(tok)));
        start = end + 1;
    }
    return out;
}

}  // namespace

PackedWord parse_packed_word(std::string_view text) { return PackedWord(parse_int_list(text)); }

Permutation parse_permutation(std::string_view text) { return Permutation(parse_packed_word(text)); }

TensorWord parse_tensor_word(std::string_view text) {
    text = trim(text);
    if (text.empty() || text == "1") return TensorWord();
    if (text.starts_with('[')) {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::Parse, std::string("tensor word JSON: ") + e.what());
        }
        std::vector<Monomial> letters;
        try {
            for (const auto& m : j) letters.emplace_back(m.get<std::vector<int>>());
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::Parse, std::string("tensor word JSON: ") + e.what());
        }
        return TensorWord(std::move(letters));
    }
    std::vector<Monomial> letters;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('|', start), text.size());
        const std::string_view letter = trim(text.substr(start, end - start));
        std::vector<int> vars;
        std::size_t s = 0;
        while (s <= letter.size()) {
            const std::size_t e = std::min(letter.find('.', s), letter.size());
            const std::string_view v = trim(letter.substr(s, e - s));
            if (v.size() < 2 || v[0] != 'x') throw Error(ErrorKind::Parse, "expected a variable like x3, got '" + std::string(v) + "'");
            for (char c : v.substr(1)) {
                if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(ErrorKind::Parse, "bad variable '" + std::string(v) + "'");
            }
            vars.push_back(std::stoi(std::string(v.substr(1))));
            s = e + 1;
        }
        letters.emplace_back(std::move(vars));
        start = end + 1;
    }
    return TensorWord(std::move(letters));
}

DecoratedPackedWord parse_decorated(std::string_view text) {
    text = trim(text);
    if (text.starts_with('{')) {
        try {
            const Json j = Json::parse(text);
            return DecoratedPackedWord(PackedWord(j.at("word").get<std::vector<int>>()), j.at("deg").get<std::vector<int>>());
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::Parse, std::string("decorated word JSON: ") + e.what());
        }
    }
    if (text.starts_with('(') && text.ends_with(')')) text = trim(text.substr(1, text.size() - 2));
    const std::size_t semi = text.find(';');
    if (semi == std::string_view::npos) return DecoratedPackedWord::plain(parse_packed_word(text));
    return DecoratedPackedWord(parse_packed_word(text.substr(0, semi)), parse_int_list(text.substr(semi + 1)));
}

bool is_zero_literal(std::string_view text) { return trim(text) == "0"; }

std::vector<std::pair<Rational, std::string>> split_terms(std::string_view text) {
    std::vector<std::pair<Rational, std::string>> out;
    std::vector<std::pair<int, std::string_view>> raw;
    int depth = 0;
    int sign = 1;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (depth == 0 && (c == '+' || c == '-')) {
            const std::string_view piece = trim(text.substr(start, i - start));
            if (!piece.empty()) {
                raw.emplace_back(sign, piece);
            } else if (!raw.empty() || i != text.find_first_not_of(" \t")) {
                throw Error(ErrorKind::Parse, "dangling sign");
            }
            sign = c == '-' ? -1 : 1;
            start = i + 1;
        }
    }
    const std::string_view last = trim(text.substr(start));
    if (last.empty()) {
        if (!raw.empty() || start > 0) throw Error(ErrorKind::Parse, "dangling sign");
        throw Error(ErrorKind::Parse, "empty input");
    }
    raw.emplace_back(sign, last);
    for (const auto& [s, piece] : raw) {
        // Leading coefficient: digits and at most one '/', followed by ' ', '*' or '('.
        std::size_t i = 0;
        while (i < piece.size() && (std::isdigit(static_cast<unsigned char>(piece[i])) || piece[i] == '/')) ++i;
        Rational c(s);
        std::string body(piece);
        if (i > 0 && i < piece.size() && (piece[i] == ' ' || piece[i] == '*' || piece[i] == '(')) {
            c *= Rational::parse(piece.substr(0, i));
            std::size_t j = i;
            if (piece[j] == '*') ++j;
            body = std::string(trim(piece.substr(j)));
            if (!body.empty() && body.front() == '*') body = std::string(trim(std::string_view(body).substr(1)));
        }
        out.emplace_back(c, body);
    }
    return out;
}

}  // namespace qsh
