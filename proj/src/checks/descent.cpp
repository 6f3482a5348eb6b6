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

#include <map>

#include "checks/common.hpp"
#include "checks/laws.hpp"
#include "qsh/decorated.hpp"
#include "qsh/tensor.hpp"

namespace qsh::checks {

namespace {

// Every tensor word of degree d on distinct variables x_1..x_d, up to renaming: F_σ(x_1...x_d).
std::vector<TensorWord> words_up_to_degree(int max_degree) {
    std::vector<TensorWord> out;
    for (int d = 1; d <= max_degree; ++d) {
        const TensorWord x = TensorWord::distinct(d);
        for (const auto& s : enumerate_packed(d)) out.push_back(f_action(s, x).begin()->first);
    }
    return out;
}

std::vector<DecoratedPackedWord> decorated_words(int max_length, int max_degree) {
    std::vector<DecoratedPackedWord> out;
    for (int n = 0; n <= max_length; ++n) {
        for (const auto& w : enumerate_packed(n)) {
            std::vector<int> d(n, 1);
            while (true) {
                out.emplace_back(w, d);
                int i = n - 1;
                while (i >= 0 && d[i] == max_degree) d[i--] = 1;
                if (i < 0) break;
                ++d[i];
            }
        }
    }
    return out;
}

}  // namespace

void suite_descent_qn(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length;
    const auto words = words_up_to_degree(L);
    for (int n = 1; n <= L; ++n) {
        const Endo def = q_projection(n, QMode::Definition);
        const Endo formula = q_projection(n, QMode::DescentFormula);
        for (const auto& w : words) {
            rec.equal("q_n descent formula", "n=" + std::to_string(n) + " w=" + w.to_string(), formula(w), def(w));
        }
    }
    for (const auto& w : words) {
        TensorElem sum;
        for (int n = 1; n <= L; ++n) sum += dec_action(p_projection(n), w);
        rec.equal("sum of p_n = Id", w.to_string(), sum, TensorElem(w));
        if (w.degree() <= 3) rec.equal("q_1 = p_1", w.to_string(), q_projection(1, QMode::DescentFormula)(w), dec_action(p_projection(1), w));
    }

    // Tridendriform laws for the convolution operations on endomorphisms.
    std::vector<std::pair<std::string, Endo>> gens{
        {"p1", as_endo(p_projection(1))},
        {"p2", as_endo(p_projection(2))},
        {"q1", q_projection(1, QMode::Definition)},
    };
    for (int n = 1; n <= 2; ++n) {
        for (const auto& s : enumerate_packed(n)) {
            gens.emplace_back("F" + s.to_string(), [s](const TensorWord& w) { return f_action(s, w); });
        }
    }
    using Named = std::pair<std::string, Endo>;
    const auto conv = [](const Named& f, const Named& g, Op op) {
        return Named{"(" + f.first + " " + std::string(to_string(op)) + " " + g.first + ")", convolve(f.second, g.second, op)};
    };
    for (const auto& f : gens) {
        for (const auto& g : gens) {
            for (const auto& h : gens) {
                tridendriform_laws("End", f, g, h, conv, [&](const std::string& law, const Named& lhs, const Named& rhs) {
                    bool ok = true;
                    std::string at;
                    for (const auto& w : words) {
                        if (lhs.second(w) != rhs.second(w)) {
                            ok = false;
                            at = w.to_string();
                            break;
                        }
                    }
                    rec.truth(law, lhs.first + " vs " + rhs.first + (ok ? "" : " at " + at), ok);
                });
            }
            const Endo star = convolve(f.second, g.second, Op::Star);
            const auto dsum = [&](const TensorWord& w) {
                TensorElem out;
                for (const auto& [p, c] : tv_coproduct(w, true)) out.add_scaled(tv_product(f.second(p.first), g.second(p.second), Op::Star), c);
                return out;
            };
            for (const auto& w : words) {
                rec.equal("star = convolution product", f.first + "," + g.first + " w=" + w.to_string(), star(w), dsum(w));
            }
        }
    }

    // Decorated composition: associativity with zero propagation.
    const auto dw = decorated_words(3, 3);
    std::map<std::pair<std::size_t, std::size_t>, DescElem> comp;
    for (std::size_t i = 0; i < dw.size(); ++i) {
        for (std::size_t j = 0; j < dw.size(); ++j) {
            DescElem c = dec_compose(dw[i], dw[j]);
            if (!c.is_zero()) comp.emplace(std::pair{i, j}, std::move(c));
        }
    }
    const auto composed = [&](std::size_t i, std::size_t j) {
        const auto it = comp.find({i, j});
        return it == comp.end() ? DescElem() : it->second;
    };
    std::size_t assoc_fail = 0, assoc_cases = 0;
    std::string first_fail;
    for (std::size_t j = 0; j < dw.size(); ++j) {
        for (std::size_t i = 0; i < dw.size(); ++i) {
            const DescElem ij = composed(i, j);
            for (std::size_t k = 0; k < dw.size(); ++k) {
                const DescElem jk = composed(j, k);
                if (ij.is_zero() && jk.is_zero()) continue;
                ++assoc_cases;
                if (dec_compose(ij, DescElem(dw[k])) != dec_compose(DescElem(dw[i]), jk)) {
                    if (assoc_fail++ == 0) first_fail = dw[i].to_string() + " o " + dw[j].to_string() + " o " + dw[k].to_string();
                }
            }
        }
    }
    rec.truth("decorated composition associative (" + std::to_string(assoc_cases) + " nonzero triples)", first_fail, assoc_fail == 0);

    // Decorated products: decorations concatenate and forgetting them recovers the WQSym products.
    const auto small = decorated_words(2, 2);
    for (const auto& x : small) {
        for (const auto& y : small) {
            if (x.empty() || y.empty()) continue;
            for (Op op : {Op::Prec, Op::Succ, Op::Dot}) {
                const DescElem p = dec_product(x, y, op);
                std::vector<int> de = x.degrees();
                de.insert(de.end(), y.degrees().begin(), y.degrees().end());
                bool ok = true;
                for (const auto& [t, c] : p) ok = ok && t.degrees() == de;
                const std::string in = x.to_string() + " " + std::string(to_string(op)) + " " + y.to_string();
                rec.truth("decorations concatenate", in, ok);
                rec.equal("forgetting decorations", in, forget_decorations(p), wq_product(x.word(), y.word(), op));
            }
        }
    }
    // Σ_d F_(σ,d) = F_σ on words whose letters have degree ≤ 3.
    for (const auto& w : words) {
        bool low = w.size() <= 3;
        for (const auto& m : w.letters()) low = low && m.degree() <= 3;
        if (!low) continue;
        for (const auto& s : enumerate_packed(w.size())) {
            TensorElem sum;
            for (const auto& x : dw) {
                if (x.word() == s) sum += dec_action(x, w);
            }
            rec.equal("sum over decorations", s.to_string() + " on " + w.to_string(), sum, f_action(s, w));
        }
    }
}

}  // namespace qsh::checks
