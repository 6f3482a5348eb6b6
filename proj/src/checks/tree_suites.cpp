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

#include <set>

#include "checks/common.hpp"
#include "checks/laws.hpp"
#include "qsh/decorated.hpp"
#include "qsh/fqsym.hpp"
#include "qsh/trees.hpp"

namespace qsh::checks {

namespace {

// All re-decorations of t with values in 1..max_dec.
std::vector<SchroderTree> decorations_of(const SchroderTree& t, int max_dec) {
    if (t.is_leaf()) return {t};
    std::vector<std::vector<SchroderTree>> kids;
    for (const auto& c : t.children()) kids.push_back(decorations_of(c, max_dec));
    std::vector<SchroderTree> out;
    std::vector<SchroderTree> ch(kids.size());
    std::vector<int> decs(t.decorations().size(), 1);
    std::function<void(std::size_t)> pick = [&](std::size_t i) {
        if (i == kids.size()) {
            std::function<void(std::size_t)> dec = [&](std::size_t j) {
                if (j == decs.size()) {
                    out.emplace_back(ch, decs);
                    return;
                }
                for (int d = 1; d <= max_dec; ++d) {
                    decs[j] = d;
                    dec(j + 1);
                }
            };
            dec(0);
            return;
        }
        for (const auto& k : kids[i]) {
            ch[i] = k;
            pick(i + 1);
        }
    };
    pick(0);
    return out;
}

std::vector<SchroderTree> trees_up_to(int max_degree, int max_dec) {
    std::vector<SchroderTree> out;
    for (int n = 1; n <= max_degree; ++n) {
        for (const auto& t : enumerate_trees(n)) {
            for (auto& u : decorations_of(t, max_dec)) out.push_back(std::move(u));
        }
    }
    return out;
}

std::string show(const SchroderTree& t, const SchroderTree& u) { return "t=" + t.encoding() + " u=" + u.encoding(); }

TreeComb binary_part(const TreeComb& a) {
    TreeComb out;
    for (const auto& [t, c] : a) {
        if (t.is_binary()) out.add_term(t, c);
    }
    return out;
}

}  // namespace

void suite_trees_omega(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length;
    const auto trees = trees_up_to(L, 1);
    const auto decorated = trees_up_to(std::min(L, 3), 2);
    for (const auto& t : decorated) {
        rec.equal("rho o omega = Id", t.encoding(), rho(omega_section(t)), t);
        rec.equal("Omega recursive = oracle", t.encoding(), omega_embed(t, EmbedMode::Recursive), omega_embed(t, EmbedMode::Oracle));
    }
    for (const auto& t : trees) {
        if (t.degree() > 3) {
            rec.equal("rho o omega = Id", t.encoding(), rho(omega_section(t)), t);
            rec.equal("Omega recursive = oracle", t.encoding(), omega_embed(t, EmbedMode::Recursive), omega_embed(t, EmbedMode::Oracle));
        }
    }
    // Injectivity: images are nonzero with pairwise disjoint supports.
    {
        std::vector<SchroderTree> all = decorated;
        for (const auto& t : trees) {
            if (t.degree() > 3) all.push_back(t);
        }
        std::set<DecoratedPackedWord> seen;
        bool ok = true;
        std::string at;
        for (const auto& t : all) {
            const DescElem img = omega_embed(t, EmbedMode::Recursive);
            bool fresh = !img.is_zero();
            for (const auto& [w, c] : img) fresh = seen.insert(w).second && fresh;
            if (!fresh && ok) at = t.encoding();
            ok = ok && fresh;
        }
        rec.truth("Omega injective", at, ok);
    }
    // Ω is a morphism of NQSh algebras.
    for (const auto& t : trees) {
        for (const auto& u : trees) {
            if (t.degree() + u.degree() > L) continue;
            for (Op op : {Op::Prec, Op::Succ, Op::Dot}) {
                rec.equal("Omega(t " + std::string(to_string(op)) + " u)", show(t, u),
                          omega_embed(tree_product(t, u, op), EmbedMode::Recursive),
                          dec_product(omega_embed(t, EmbedMode::Recursive), omega_embed(u, EmbedMode::Recursive), op));
            }
        }
    }
    for (const auto& t : decorated) {
        for (const auto& u : decorated) {
            if (t.degree() + u.degree() > L || (t.is_plain() && u.is_plain())) continue;
            for (Op op : {Op::Prec, Op::Succ, Op::Dot}) {
                rec.equal("Omega(t " + std::string(to_string(op)) + " u)", show(t, u),
                          omega_embed(tree_product(t, u, op), EmbedMode::Recursive),
                          dec_product(omega_embed(t, EmbedMode::Recursive), omega_embed(u, EmbedMode::Recursive), op));
            }
        }
    }
    // Tridendriform laws on trees, and the binary projection of ≺, ≻.
    const auto P = [](const TreeComb& x, const TreeComb& y, Op op) { return tree_product(x, y, op); };
    for (const auto& x : trees) {
        for (const auto& y : trees) {
            for (const auto& z : trees) {
                if (x.degree() + y.degree() + z.degree() > L) continue;
                const std::string in = show(x, y) + " z=" + z.encoding();
                tridendriform_laws("trees", TreeComb(x), TreeComb(y), TreeComb(z), P,
                                   [&](const std::string& law, const TreeComb& l, const TreeComb& r) { rec.equal(law, in, l, r); });
            }
            if (x.is_binary() && y.is_binary() && x.degree() + y.degree() <= L) {
                for (Op op : {Op::Prec, Op::Succ}) {
                    rec.equal("binary projection of " + std::string(to_string(op)), show(x, y), binary_part(tree_product(x, y, op)),
                              pbt_product(x, y, op));
                }
            }
        }
    }
    // ϱ and ω are poset morphisms.
    for (int n = 1; n <= L; ++n) {
        const auto& words = enumerate_packed(n);
        bool ok = true;
        std::string at;
        for (const auto& s : words) {
            for (const auto& t : words) {
                if (word_leq(s, t) && !tree_leq(rho(s), rho(t))) {
                    ok = false;
                    at = s.to_string() + " <= " + t.to_string();
                }
            }
        }
        rec.truth("rho poset morphism", "n=" + std::to_string(n) + " " + at, ok);
    }
    // ω is not monotone: contracting the root edge of the balanced tree gives 211, incomparable with 212.
    if (L >= 3) {
        const SchroderTree u = parse_tree("((|,|),(|,|))");
        const SchroderTree t = parse_tree("((|,|),|,|)");
        const PackedWord wt = omega_section(t).word(), wu = omega_section(u).word();
        rec.truth("omega order counterexample", show(t, u),
                  tree_leq(t, u) && wt == PackedWord{2, 1, 1} && wu == PackedWord{2, 1, 2} && !word_leq(wt, wu) && !word_leq(wu, wt));
    }
}

void suite_trees_psi(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length;
    for (int n = 1; n <= L; ++n) {
        const auto& ts = enumerate_trees(n);
        bool refl = true, anti = true, trans = true, same = true, trip = true;
        for (const auto& t : ts) {
            refl = refl && tree_leq(t, t);
            const Binarized bt = binarize(t);
            trip = trip && bt.tree.is_binary() && contract(bt.tree, bt.edges) == t;
            for (const auto& u : ts) {
                const bool le = tree_leq(t, u);
                same = same && le == tree_leq_by_contraction(t, u);
                if (!le) continue;
                anti = anti && (!tree_leq(u, t) || t == u);
                for (const auto& v : ts) trans = trans && (!tree_leq(u, v) || tree_leq(t, v));
            }
        }
        const std::string in = "degree " + std::to_string(n);
        rec.truth("tree order reflexive", in, refl);
        rec.truth("tree order antisymmetric", in, anti);
        rec.truth("tree order transitive", in, trans);
        rec.truth("tree order = contraction order", in, same);
        rec.truth("contract(binarize(t)) = t", in, trip);
    }
    std::vector<SchroderTree> bins;
    for (int n = 1; n <= L; ++n) {
        for (auto& t : enumerate_binary_trees(n)) {
            rec.equal("psi poset = psi recursive", t.encoding(), psi_tree(t, EmbedMode::Oracle), psi_tree(t, EmbedMode::Recursive));
            bins.push_back(std::move(t));
        }
    }
    for (const auto& t : bins) {
        for (const auto& u : bins) {
            if (t.degree() + u.degree() > L) continue;
            const TreeComb pt = psi_tree(t, EmbedMode::Oracle), pu = psi_tree(u, EmbedMode::Oracle);
            rec.equal("psi(t < u) = psi(t) <= psi(u)", show(t, u), psi_tree(pbt_product(t, u, Op::Prec), EmbedMode::Oracle),
                      tree_product(pt, pu, Op::PrecEq));
            rec.equal("psi(t > u) = psi(t) > psi(u)", show(t, u), psi_tree(pbt_product(t, u, Op::Succ), EmbedMode::Oracle),
                      tree_product(pt, pu, Op::Succ));
        }
    }
}

void suite_diagram(Recorder& rec, const CheckBounds& b) {
    const int L = b.max_length;
    for (int n = 1; n <= L; ++n) {
        for (const auto& t : enumerate_binary_trees(n)) {
            const WQSymElem lhs = forget_decorations(omega_embed(psi_tree(t, EmbedMode::Oracle), EmbedMode::Recursive));
            rec.equal("Omega o psi = Psi o Omega'", t.encoding(), lhs, psi_embed(omega_prime(t)));
            rec.equal("Xi o Omega = Omega'", t.encoding(), xi_project(forget_decorations(omega_embed(t, EmbedMode::Recursive))),
                      omega_prime(t));
        }
    }
}

}  // namespace qsh::checks
