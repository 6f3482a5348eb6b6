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

#ifndef QSH_TREES_HPP
#define QSH_TREES_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "qsh/decorated.hpp"
#include "qsh/fqsym.hpp"
#include "qsh/lincomb.hpp"
#include "qsh/ops.hpp"

namespace qsh {

/// Reduced planar rooted tree t_1 ∨_{d_1} t_2 ... ∨_{d_{k-1}} t_k, or a leaf.
class SchroderTree {
public:
    /// The leaf.
    SchroderTree();
    /// Throws InvalidTree unless there are at least two children, one
    /// decoration between each pair of neighbours, and every decoration is positive.
    SchroderTree(std::vector<SchroderTree> children, std::vector<int> decorations);

    static SchroderTree leaf() { return SchroderTree(); }
    /// | ∨_d |
    static SchroderTree vee(int d = 1);

    bool is_leaf() const { return children_.empty(); }
    const std::vector<SchroderTree>& children() const { return children_; }
    const std::vector<int>& decorations() const { return decs_; }
    /// Number of leaves minus one.
    int degree() const { return degree_; }
    bool is_binary() const;
    bool is_plain() const;  // every decoration is 1

    /// "|" for the leaf, "(|,|)d=[1]" for ∨.
    const std::string& encoding() const { return enc_; }

    friend bool operator==(const SchroderTree& a, const SchroderTree& b) { return a.enc_ == b.enc_; }
    friend std::strong_ordering operator<=>(const SchroderTree& a, const SchroderTree& b) {
        if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
        return a.enc_ <=> b.enc_;
    }

private:
    std::vector<SchroderTree> children_;
    std::vector<int> decs_;
    int degree_ = 0;
    std::string enc_ = "|";
};

using TreeComb = LinComb<SchroderTree>;
/// Child indices from the root; identifies the edge ending at that node.
using TreePath = std::vector<int>;

/// Free NQSh products; the leaf is the Star unit and 1 op 1 is UnitMisuse.
TreeComb tree_product(const SchroderTree& t, const SchroderTree& u, Op op);
TreeComb tree_product(const TreeComb& a, const TreeComb& b, Op op);

/// Dendriform products on binary trees: t≻u = (t★u_1)∨u_2, t≺u = t_1∨(t_2★u),
/// Star = Prec + Succ. Throws NotBinary.
TreeComb pbt_product(const SchroderTree& t, const SchroderTree& u, Op op);
TreeComb pbt_product(const TreeComb& a, const TreeComb& b, Op op);

/// Splits at the positions of 1 and grafts the trees of the packed blocks.
SchroderTree rho(const DecoratedPackedWord& w);
SchroderTree rho(const PackedWord& w);

/// ω(t_1 ∨ ... ∨ t_k) = ω(t_1)[1] 1 ω(t_2)[1] ... 1 ω(t_k)[1].
DecoratedPackedWord omega_section(const SchroderTree& t);

/// Shifts every letter up by one and inserts a 1 decorated d_j after block j.
/// Throws BadComposition.
DecoratedPackedWord ins(const DecoratedPackedWord& w, const std::vector<int>& blocks, const std::vector<int>& decs);
DescElem ins(const DescElem& a, const std::vector<int>& blocks, const std::vector<int>& decs);

enum class EmbedMode { Recursive, Oracle };

/// Ω(t): Σ of the decorated packed words σ with ρ(σ) = t.
DescElem omega_embed(const SchroderTree& t, EmbedMode mode);
DescElem omega_embed(const TreeComb& a, EmbedMode mode);

/// Ω′(t): Σ of the permutations σ with ρ(σ) = t. Needs a plain tree.
FQSymElem omega_prime(const SchroderTree& t);
FQSymElem omega_prime(const TreeComb& a);

/// Edges to internal nodes that are the last child of their parent.
std::vector<TreePath> right_edges(const SchroderTree& t);
/// Splices each listed child into its parent. Throws InvalidEdgeSet.
SchroderTree contract(const SchroderTree& t, const std::vector<TreePath>& edges);

struct Binarized {
    SchroderTree tree;
    std::vector<TreePath> edges;  // sorted
};

/// Expands every node with k ≥ 3 children into a right comb; `edges` are the new edges.
Binarized binarize(const SchroderTree& t);

/// t ≤ u iff b(t) = b(u) and I(t) ⊇ I(u).
bool tree_leq(const SchroderTree& t, const SchroderTree& u);
/// t ≤ u iff t = u / J for some J ⊆ R(u).
bool tree_leq_by_contraction(const SchroderTree& t, const SchroderTree& u);

/// ψ(t) = Σ_{u ≤ t} u. Poset mode sums contractions over subsets of R(t);
/// recursive mode uses ψ(t_1 ∨ t_2) = ψ(t_1) ≻ ∨ ⪯ ψ(t_2). Throws NotBinary.
TreeComb psi_tree(const SchroderTree& t, EmbedMode mode);
TreeComb psi_tree(const TreeComb& a, EmbedMode mode);

/// Plain Schröder trees of the given degree, in canonical order.
const std::vector<SchroderTree>& enumerate_trees(int degree);
/// Plain binary trees of the given degree, in canonical order.
std::vector<SchroderTree> enumerate_binary_trees(int degree);

/// Parses the encoding produced by SchroderTree::encoding(). Throws Parse.
SchroderTree parse_tree(std::string_view text);

}  // namespace qsh

#endif  // QSH_TREES_HPP
