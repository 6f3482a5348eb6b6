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

#ifndef QSH_TESTS_GOLDEN_HPP
#define QSH_TESTS_GOLDEN_HPP

#include <string>
#include <utility>
#include <vector>

#include "qsh/decorated.hpp"
#include "qsh/format.hpp"
#include "qsh/fqsym.hpp"
#include "qsh/series.hpp"
#include "qsh/tensor.hpp"
#include "qsh/trees.hpp"

namespace golden {

struct Case {
    std::string name;
    std::string got;
    std::string want;
    bool ok() const { return got == want; }
};

inline qsh::Permutation perm(const char* s) { return qsh::parse_permutation(s); }

inline qsh::WQSymElem words(const char* s) { return qsh::parse_lincomb<qsh::PackedWord>(s, qsh::parse_packed_word); }

inline qsh::TensorElem tensors(const char* s) { return qsh::parse_lincomb<qsh::TensorWord>(s, qsh::parse_tensor_word); }

// Expected values are compared as canonical text after parsing, so term order in the table is free.
inline std::vector<Case> phi_table() {
    using namespace qsh;
    const std::vector<std::pair<const char*, const char*>> rows{
        {"1", "(1)"},
        {"12", "(12) + 1/2 (11)"},
        {"123", "(123) + 1/2 (112) + 1/2 (122) + 1/6 (111)"},
        {"1234", "(1234) + 1/2 (1123) + 1/2 (1223) + 1/2 (1233) + 1/4 (1122) + 1/6 (1112) + 1/6 (1222) + 1/24 (1111)"},
    };
    std::vector<Case> out;
    for (const auto& [in, want] : rows) out.push_back({std::string("Phi(") + in + ")", to_text(phi_embed(perm(in))), to_text(words(want))});
    return out;
}

inline std::vector<Case> hoffman_table() {
    using namespace qsh;
    const std::vector<std::pair<const char*, const char*>> rows{
        {"x1", "x1"},
        {"x1|x2", "x1|x2 + 1/2 x1.x2"},
        {"x1|x2|x3", "x1|x2|x3 + 1/2 x1.x2|x3 + 1/2 x1|x2.x3 + 1/6 x1.x2.x3"},
        {"x1|x2|x3|x4",
         "x1|x2|x3|x4 + 1/2 x1.x2|x3|x4 + 1/2 x1|x2.x3|x4 + 1/2 x1|x2|x3.x4 + 1/4 x1.x2|x3.x4 + 1/6 x1.x2.x3|x4"
         " + 1/6 x1|x2.x3.x4 + 1/24 x1.x2.x3.x4"},
    };
    const TruncatedSeries E = series_standard(StandardSeries::Expm1, 4);
    std::vector<Case> out;
    for (const auto& [in, want] : rows) {
        out.push_back({std::string("phi(") + in + ")", to_text(phi_series_endo(E, parse_tensor_word(in))), to_text(tensors(want))});
    }
    return out;
}

// F_σ(xyz) with x = x1, y = x2, z = x3.
inline std::vector<Case> action_table() {
    using namespace qsh;
    const std::vector<std::pair<const char*, const char*>> rows{
        {"123", "x1|x2|x3"}, {"132", "x1|x3|x2"},    {"213", "x2|x1|x3"},    {"231", "x3|x1|x2"},    {"312", "x2|x3|x1"},
        {"321", "x3|x2|x1"}, {"122", "x1|x2.x3"},    {"212", "x2|x1.x3"},    {"221", "x3|x1.x2"},    {"112", "x1.x2|x3"},
        {"121", "x1.x3|x2"}, {"211", "x2.x3|x1"},    {"111", "x1.x2.x3"},
    };
    const TensorWord xyz = TensorWord::distinct(3);
    std::vector<Case> out;
    for (const auto& [s, want] : rows) {
        out.push_back({std::string("F_(") + s + ")(xyz)", to_text(f_action(parse_packed_word(s), xyz)), to_text(tensors(want))});
    }
    return out;
}

// Trees of degree ≤ 3 with their Ω and ω values.
inline std::vector<Case> tree_tables() {
    using namespace qsh;
    struct Row {
        const char* tree;
        const char* omega_embed;
        const char* omega;
    };
    const std::vector<Row> rows{
        {"(|,|)", "(1)", "1"},
        {"((|,|),|)", "(21)", "21"},
        {"(|,(|,|))", "(12)", "12"},
        {"(|,|,|)", "(11)", "11"},
        {"(((|,|),|),|)", "(321)", "321"},
        {"((|,(|,|)),|)", "(231)", "231"},
        {"(|,((|,|),|))", "(132)", "132"},
        {"(|,(|,(|,|)))", "(123)", "123"},
        {"((|,|),(|,|))", "(212) + (312) + (213)", "212"},
        {"((|,|,|),|)", "(221)", "221"},
        {"((|,|),|,|)", "(211)", "211"},
        {"(|,(|,|),|)", "(121)", "121"},
        {"(|,|,(|,|))", "(112)", "112"},
        {"(|,(|,|,|))", "(122)", "122"},
        {"(|,|,|,|)", "(111)", "111"},
    };
    std::vector<Case> out;
    for (const auto& r : rows) {
        const SchroderTree t = parse_tree(r.tree);
        out.push_back({std::string("Omega") + r.tree, to_text(forget_decorations(omega_embed(t, EmbedMode::Recursive))),
                       to_text(words(r.omega_embed))});
        out.push_back({std::string("Omega oracle") + r.tree, to_text(forget_decorations(omega_embed(t, EmbedMode::Oracle))),
                       to_text(words(r.omega_embed))});
        out.push_back({std::string("omega") + r.tree, omega_section(t).word().to_string(), parse_packed_word(r.omega).to_string()});
    }
    return out;
}

// Ψ(σ) read off the Hasse graphs of Surj_2 and Surj_3.
inline std::vector<Case> psi_table() {
    using namespace qsh;
    const std::vector<std::pair<const char*, const char*>> rows{
        {"12", "(12) + (11)"},
        {"21", "(21)"},
        {"123", "(123) + (122) + (112) + (111)"},
        {"132", "(132) + (121)"},
        {"213", "(213) + (212)"},
        {"231", "(231) + (221)"},
        {"312", "(312) + (211)"},
        {"321", "(321)"},
    };
    std::vector<Case> out;
    for (const auto& [in, want] : rows) out.push_back({std::string("Psi(") + in + ")", to_text(psi_embed(qsh::parse_packed_word(in))), to_text(words(want))});
    return out;
}

inline std::vector<Case> all() {
    std::vector<Case> out;
    for (auto f : {phi_table, hoffman_table, action_table, tree_tables, psi_table}) {
        for (auto& c : f()) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace golden

#endif  // QSH_TESTS_GOLDEN_HPP
