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

#include "qsh/trees.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "qsh/error.hpp"
#include "qsh/wqsym.hpp"

namespace qsh {

SchroderTree::SchroderTree() = default;

SchroderTree::SchroderTree(std::vector<SchroderTree> children, std::vector<int> decorations)
    : children_(std::move(children)), decs_(std::move(decorations)) {
    if (children_.size() < 2) throw Error(ErrorKind::InvalidTree, "an internal node needs at least two children");
    if (decs_.size() + 1 != children_.size()) throw Error(ErrorKind::InvalidTree, "one decoration between each pair of children");
    degree_ = static_cast<int>(decs_.size());
    enc_ = "(";
    for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i > 0) enc_ += ',';
        enc_ += children_[i].enc_;
        degree_ += children_[i].degree_;
    }
    enc_ += ")d=[";
    for (std::size_t i = 0; i < decs_.size(); ++i) {
        if (decs_[i] < 1) throw Error(ErrorKind::InvalidTree, "decorations must be positive");
        if (i > 0) enc_ += ',';
        enc_ += std::to_string(decs_[i]);
    }
    enc_ += "]";
}

SchroderTree SchroderTree::vee(int d) { return SchroderTree({leaf(), leaf()}, {d}); }

bool SchroderTree::is_binary() const {
    if (is_leaf()) return true;
    return children_.size() == 2 && children_[0].is_binary() && children_[1].is_binary();
}

bool SchroderTree::is_plain() const {
    if (std::any_of(decs_.begin(), decs_.end(), [](int d) { return d != 1; })) return false;
    return std::all_of(children_.begin(), children_.end(), [](const SchroderTree& c) { return c.is_plain(); });
}

namespace {

bool unit_case(const SchroderTree& t, const SchroderTree& u, Op op, TreeComb& out) {
    if (t.is_leaf() && u.is_leaf()) {
        if (op != Op::Star) throw Error(ErrorKind::UnitMisuse, std::string(to_string(op)) + " of two units");
        out = TreeComb(t);
        return true;
    }
    if (t.is_leaf()) {
        out = (op == Op::Succ || op == Op::SuccEq || op == Op::Star) ? TreeComb(u) : TreeComb();
        return true;
    }
    if (u.is_leaf()) {
        out = (op == Op::Prec || op == Op::PrecEq || op == Op::Star) ? TreeComb(t) : TreeComb();
        return true;
    }
    return false;
}

template <class F>
TreeComb graft(const TreeComb& middle, F&& build) {
    TreeComb out;
    for (const auto& [s, c] : middle) out.add_term(build(s), c);
    return out;
}

std::vector<SchroderTree> tail(const std::vector<SchroderTree>& v) { return {v.begin() + 1, v.end()}; }
std::vector<SchroderTree> init(const std::vector<SchroderTree>& v) { return {v.begin(), v.end() - 1}; }

}  // namespace

TreeComb tree_product(const SchroderTree& t, const SchroderTree& u, Op op) {
    TreeComb out;
    if (unit_case(t, u, op, out)) return out;
    switch (op) {
        case Op::Succ:
            return graft(tree_product(t, u.children().front(), Op::Star), [&](const SchroderTree& s) {
                std::vector<SchroderTree> ch{s};
                const auto rest = tail(u.children());
                ch.insert(ch.end(), rest.begin(), rest.end());
                return SchroderTree(std::move(ch), u.decorations());
            });
        case Op::Prec:
            return graft(tree_product(t.children().back(), u, Op::Star), [&](const SchroderTree& s) {
                auto ch = init(t.children());
                ch.push_back(s);
                return SchroderTree(std::move(ch), t.decorations());
            });
        case Op::Dot:
            return graft(tree_product(t.children().back(), u.children().front(), Op::Star), [&](const SchroderTree& s) {
                auto ch = init(t.children());
                ch.push_back(s);
                const auto rest = tail(u.children());
                ch.insert(ch.end(), rest.begin(), rest.end());
                std::vector<int> d = t.decorations();
                d.insert(d.end(), u.decorations().begin(), u.decorations().end());
                return SchroderTree(std::move(ch), std::move(d));
            });
        case Op::Star:
            out = tree_product(t, u, Op::Prec);
            out += tree_product(t, u, Op::Succ);
            out += tree_product(t, u, Op::Dot);
            return out;
        case Op::PrecEq:
            return tree_product(t, u, Op::Prec) + tree_product(t, u, Op::Dot);
        case Op::SuccEq:
            return tree_product(t, u, Op::Succ) + tree_product(t, u, Op::Dot);
        case Op::Sh:
            break;
    }
    throw Error(ErrorKind::Parse, "op sh is not defined on Schröder trees");
}

TreeComb tree_product(const TreeComb& a, const TreeComb& b, Op op) {
    return apply_bilinear(a, b, [op](const SchroderTree& t, const SchroderTree& u) { return tree_product(t, u, op); });
}

TreeComb pbt_product(const SchroderTree& t, const SchroderTree& u, Op op) {
    if (!t.is_binary() || !u.is_binary()) throw Error(ErrorKind::NotBinary, "binary products need binary trees");
    if (op != Op::Prec && op != Op::Succ && op != Op::Star) throw Error(ErrorKind::Parse, "binary tree products are prec, succ and star");
    TreeComb out;
    if (unit_case(t, u, op, out)) return out;
    if (op == Op::Star) return pbt_product(t, u, Op::Prec) + pbt_product(t, u, Op::Succ);
    if (op == Op::Succ) {
        return graft(pbt_product(t, u.children()[0], Op::Star), [&](const SchroderTree& s) {
            return SchroderTree({s, u.children()[1]}, u.decorations());
        });
    }
    return graft(pbt_product(t.children()[1], u, Op::Star), [&](const SchroderTree& s) {
        return SchroderTree({t.children()[0], s}, t.decorations());
    });
}

TreeComb pbt_product(const TreeComb& a, const TreeComb& b, Op op) {
    return apply_bilinear(a, b, [op](const SchroderTree& t, const SchroderTree& u) { return pbt_product(t, u, op); });
}

namespace {

SchroderTree rho_rec(const std::vector<int>& vals, const std::vector<int>& deg) {
    if (vals.empty()) return SchroderTree::leaf();
    const int m = *std::min_element(vals.begin(), vals.end());
    std::vector<SchroderTree> children;
    std::vector<int> decs;
    std::vector<int> bv;
    std::vector<int> bd;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] == m) {
            children.push_back(rho_rec(bv, bd));
            decs.push_back(deg[i]);
            bv.clear();
            bd.clear();
        } else {
            bv.push_back(vals[i]);
            bd.push_back(deg[i]);
        }
    }
    children.push_back(rho_rec(bv, bd));
    return SchroderTree(std::move(children), std::move(decs));
}

}  // namespace

SchroderTree rho(const DecoratedPackedWord& w) { return rho_rec(w.word().letters(), w.degrees()); }

SchroderTree rho(const PackedWord& w) { return rho(DecoratedPackedWord::plain(w)); }

DecoratedPackedWord omega_section(const SchroderTree& t) {
    if (t.is_leaf()) return DecoratedPackedWord();
    std::vector<int> letters;
    std::vector<int> deg;
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i > 0) {
            letters.push_back(1);
            deg.push_back(t.decorations()[i - 1]);
        }
        const DecoratedPackedWord sub = omega_section(t.children()[i]);
        for (int x : sub.word().letters()) letters.push_back(x + 1);
        deg.insert(deg.end(), sub.degrees().begin(), sub.degrees().end());
    }
    return DecoratedPackedWord(PackedWord(std::move(letters)), std::move(deg));
}

DecoratedPackedWord ins(const DecoratedPackedWord& w, const std::vector<int>& blocks, const std::vector<int>& decs) {
    if (blocks.size() < 2 || decs.size() + 1 != blocks.size()) {
        throw Error(ErrorKind::BadComposition, "ins needs k >= 2 blocks and k-1 decorations");
    }
    int total = 0;
    for (int b : blocks) {
        if (b < 0) throw Error(ErrorKind::BadComposition, "negative block size");
        total += b;
    }
    if (total != static_cast<int>(w.size())) throw Error(ErrorKind::BadComposition, "block sizes must sum to the word length");
    std::vector<int> letters;
    std::vector<int> deg;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (j > 0) {
            letters.push_back(1);
            deg.push_back(decs[j - 1]);
        }
        for (int i = 0; i < blocks[j]; ++i, ++pos) {
            letters.push_back(w.word().letters()[pos] + 1);
            deg.push_back(w.degrees()[pos]);
        }
    }
    return DecoratedPackedWord(PackedWord::trusted(std::move(letters), w.word().max() + 1), std::move(deg));
}

DescElem ins(const DescElem& a, const std::vector<int>& blocks, const std::vector<int>& decs) {
    DescElem out;
    for (const auto& [w, c] : a) out.add_term(ins(w, blocks, decs), c);
    return out;
}

namespace {

// Fills deg at the positions in `pos` when ρ of the subword `vals` has the shape of t.
bool match_rho(const std::vector<int>& vals, const std::vector<std::size_t>& pos, const SchroderTree& t,
               std::vector<int>& deg) {
    if (t.is_leaf()) return vals.empty();
    if (vals.empty()) return false;
    const int m = *std::min_element(vals.begin(), vals.end());
    const auto ones = static_cast<std::size_t>(std::count(vals.begin(), vals.end(), m));
    if (ones + 1 != t.children().size()) return false;
    std::vector<int> bv;
    std::vector<std::size_t> bp;
    std::size_t child = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] == m) {
            if (!match_rho(bv, bp, t.children()[child], deg)) return false;
            deg[pos[i]] = t.decorations()[child];
            ++child;
            bv.clear();
            bp.clear();
        } else {
            bv.push_back(vals[i]);
            bp.push_back(pos[i]);
        }
    }
    return match_rho(bv, bp, t.children()[child], deg);
}

}  // namespace

DescElem omega_embed(const SchroderTree& t, EmbedMode mode) {
    if (mode == EmbedMode::Oracle) {
        DescElem out;
        const auto n = static_cast<std::size_t>(t.degree());
        std::vector<std::size_t> pos(n);
        for (std::size_t i = 0; i < n; ++i) pos[i] = i;
        for (const PackedWord& s : enumerate_packed(n)) {
            std::vector<int> deg(n, 0);
            if (match_rho(s.letters(), pos, t, deg)) out.add_term(DecoratedPackedWord(s, std::move(deg)), Rational(1));
        }
        return out;
    }
    if (t.is_leaf()) return DescElem(DecoratedPackedWord());
    DescElem prod(DecoratedPackedWord{});
    std::vector<int> blocks;
    for (const SchroderTree& c : t.children()) {
        prod = dec_product(prod, omega_embed(c, mode), Op::Star);
        blocks.push_back(c.degree());
    }
    return ins(prod, blocks, t.decorations());
}

DescElem omega_embed(const TreeComb& a, EmbedMode mode) {
    DescElem out;
    for (const auto& [t, c] : a) out.add_scaled(omega_embed(t, mode), c);
    return out;
}

FQSymElem omega_prime(const SchroderTree& t) {
    if (!t.is_plain()) throw Error(ErrorKind::InvalidDecoration, "omega-prime is defined on undecorated trees");
    FQSymElem out;
    for (const auto& [w, c] : omega_embed(t, EmbedMode::Oracle)) {
        if (is_permutation(w.word())) out.add_term(Permutation(w.word()), c);
    }
    return out;
}

FQSymElem omega_prime(const TreeComb& a) {
    FQSymElem out;
    for (const auto& [t, c] : a) out.add_scaled(omega_prime(t), c);
    return out;
}

namespace {

void collect_right_edges(const SchroderTree& t, TreePath& path, std::vector<TreePath>& out) {
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        const SchroderTree& c = t.children()[i];
        if (c.is_leaf()) continue;
        path.push_back(static_cast<int>(i));
        if (i + 1 == t.children().size()) out.push_back(path);
        collect_right_edges(c, path, out);
        path.pop_back();
    }
}

SchroderTree contract_rec(const SchroderTree& t, TreePath& path, const std::vector<TreePath>& edges) {
    if (t.is_leaf()) return t;
    std::vector<SchroderTree> children;
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        path.push_back(static_cast<int>(i));
        children.push_back(contract_rec(t.children()[i], path, edges));
        path.pop_back();
    }
    std::vector<int> decs = t.decorations();
    path.push_back(static_cast<int>(children.size()) - 1);
    const bool splice = std::binary_search(edges.begin(), edges.end(), path);
    path.pop_back();
    if (splice) {
        SchroderTree last = children.back();
        children.pop_back();
        children.insert(children.end(), last.children().begin(), last.children().end());
        decs.insert(decs.end(), last.decorations().begin(), last.decorations().end());
    }
    return SchroderTree(std::move(children), std::move(decs));
}

}  // namespace

std::vector<TreePath> right_edges(const SchroderTree& t) {
    std::vector<TreePath> out;
    TreePath path;
    collect_right_edges(t, path, out);
    std::sort(out.begin(), out.end());
    return out;
}

SchroderTree contract(const SchroderTree& t, const std::vector<TreePath>& edges) {
    const auto r = right_edges(t);
    std::vector<TreePath> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& e : sorted) {
        if (!std::binary_search(r.begin(), r.end(), e)) throw Error(ErrorKind::InvalidEdgeSet, "edge is not a right internal edge");
    }
    TreePath path;
    return contract_rec(t, path, sorted);
}

namespace {

SchroderTree binarize_rec(const SchroderTree& t, TreePath& path, std::vector<TreePath>& created) {
    if (t.is_leaf()) return t;
    const std::size_t k = t.children().size();
    std::vector<SchroderTree> bs;
    // Child j sits at path + [1]*j + [0], the last one at path + [1]*(k-1).
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t depth = j + 1 < k ? j : k - 1;
        for (std::size_t s = 0; s < depth; ++s) path.push_back(1);
        if (j + 1 < k) path.push_back(0);
        bs.push_back(binarize_rec(t.children()[j], path, created));
        path.resize(path.size() - depth - (j + 1 < k ? 1 : 0));
    }
    for (std::size_t m = 1; m + 1 < k; ++m) {
        TreePath e = path;
        e.insert(e.end(), m, 1);
        created.push_back(std::move(e));
    }
    SchroderTree acc = bs[k - 1];
    for (std::size_t j = k - 1; j-- > 0;) acc = SchroderTree({bs[j], acc}, {t.decorations()[j]});
    return acc;
}

}  // namespace

Binarized binarize(const SchroderTree& t) {
    Binarized b;
    TreePath path;
    b.tree = binarize_rec(t, path, b.edges);
    std::sort(b.edges.begin(), b.edges.end());
    return b;
}

bool tree_leq(const SchroderTree& t, const SchroderTree& u) {
    const Binarized bt = binarize(t);
    const Binarized bu = binarize(u);
    if (!(bt.tree == bu.tree)) return false;
    return std::includes(bt.edges.begin(), bt.edges.end(), bu.edges.begin(), bu.edges.end());
}

bool tree_leq_by_contraction(const SchroderTree& t, const SchroderTree& u) {
    if (t.degree() != u.degree()) return false;
    const auto r = right_edges(u);
    for (std::size_t mask = 0; mask < (std::size_t{1} << r.size()); ++mask) {
        std::vector<TreePath> sub;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (mask >> i & 1) sub.push_back(r[i]);
        }
        if (contract(u, sub) == t) return true;
    }
    return false;
}

TreeComb psi_tree(const SchroderTree& t, EmbedMode mode) {
    if (!t.is_binary()) throw Error(ErrorKind::NotBinary, "psi is defined on binary trees");
    if (t.is_leaf()) return TreeComb(t);
    if (mode == EmbedMode::Oracle) {
        TreeComb out;
        const auto r = right_edges(t);
        for (std::size_t mask = 0; mask < (std::size_t{1} << r.size()); ++mask) {
            std::vector<TreePath> sub;
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (mask >> i & 1) sub.push_back(r[i]);
            }
            out.add_term(contract(t, sub), Rational(1));
        }
        return out;
    }
    const TreeComb left = psi_tree(t.children()[0], mode);
    const TreeComb right = psi_tree(t.children()[1], mode);
    const TreeComb v(SchroderTree::vee(t.decorations()[0]));
    return tree_product(left, tree_product(v, right, Op::PrecEq), Op::Succ);
}

TreeComb psi_tree(const TreeComb& a, EmbedMode mode) {
    TreeComb out;
    for (const auto& [t, c] : a) out.add_scaled(psi_tree(t, mode), c);
    return out;
}

namespace {

std::vector<SchroderTree> trees_with_leaves(int leaves, bool binary);

// Ordered lists of at least two trees, each with fewer than `total` leaves,
// whose leaf counts add up to `leaves`.
void forests(int leaves, int total, bool binary, std::vector<SchroderTree>& cur,
             std::vector<std::vector<SchroderTree>>& out) {
    if (leaves == 0) {
        if (cur.size() >= 2 && (!binary || cur.size() == 2)) out.push_back(cur);
        return;
    }
    if (binary && cur.size() == 2) return;
    for (int l = 1; l <= leaves && l < total; ++l) {
        for (const SchroderTree& t : trees_with_leaves(l, binary)) {
            cur.push_back(t);
            forests(leaves - l, total, binary, cur, out);
            cur.pop_back();
        }
    }
}

std::vector<SchroderTree> trees_with_leaves(int leaves, bool binary) {
    thread_local std::map<std::pair<int, bool>, std::vector<SchroderTree>> cache;
    const auto key = std::make_pair(leaves, binary);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::vector<SchroderTree> out;
    if (leaves == 1) {
        out.push_back(SchroderTree::leaf());
    } else {
        std::vector<SchroderTree> cur;
        std::vector<std::vector<SchroderTree>> lists;
        forests(leaves, leaves, binary, cur, lists);
        for (auto& ch : lists) {
            std::vector<int> decs(ch.size() - 1, 1);
            out.emplace_back(std::move(ch), std::move(decs));
        }
    }
    std::sort(out.begin(), out.end());
    return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

const std::vector<SchroderTree>& enumerate_trees(int degree) {
    thread_local std::map<int, std::vector<SchroderTree>> cache;
    if (auto it = cache.find(degree); it != cache.end()) return it->second;
    return cache.emplace(degree, trees_with_leaves(degree + 1, false)).first->second;
}

std::vector<SchroderTree> enumerate_binary_trees(int degree) { return trees_with_leaves(degree + 1, true); }

namespace {

class TreeParser {
public:
    explicit TreeParser(std::string_view s) : s_(s) {}

    SchroderTree parse_all() {
        SchroderTree t = parse();
        skip();
        if (i_ != s_.size()) fail("trailing characters");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::Parse, "tree at offset " + std::to_string(i_) + ": " + why);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    int number() {
        skip();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a number");
        return std::stoi(std::string(s_.substr(start, i_ - start)));
    }
    SchroderTree parse() {
        if (eat('|')) return SchroderTree::leaf();
        if (!eat('(')) fail("expected '|' or '('");
        std::vector<SchroderTree> children{parse()};
        while (eat(',')) children.push_back(parse());
        if (!eat(')')) fail("expected ')'");
        std::vector<int> decs;
        if (eat('d')) {
            if (!eat('=') || !eat('[')) fail("expected d=[...]");
            decs.push_back(number());
            while (eat(',')) decs.push_back(number());
            if (!eat(']')) fail("expected ']'");
        } else if (children.size() >= 2) {
            decs.assign(children.size() - 1, 1);
        }
        try {
            return SchroderTree(std::move(children), std::move(decs));
        } catch (const Error& e) {
            fail(e.what());
        }
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

SchroderTree parse_tree(std::string_view text) { return TreeParser(text).parse_all(); }

}  // namespace qsh
