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

#ifndef QSH_WQSYM_HPP
#define QSH_WQSYM_HPP

#include <atomic>
#include <utility>

#include "qsh/lincomb.hpp"
#include "qsh/ops.hpp"
#include "qsh/packed_word.hpp"

namespace qsh {

using WQSymElem = LinComb<PackedWord>;
using WordPair = std::pair<PackedWord, PackedWord>;
using WordPairs = LinComb<WordPair>;

namespace testing {
/// Nonzero values corrupt selected operations so the check harness can be
/// seen to fail. 1: WQSym dot product picks up a factor 2.
extern std::atomic<int> fault;
}  // namespace testing

/// Sectors of QSh making up a product.
std::vector<Sector> sectors_for(Op op);

/// Σ over ζ in the matching sectors of QSh_{max σ, max τ} of ζ∘(σ⊗τ).
/// The empty word is the Star unit; 1 op 1 for any other op is UnitMisuse.
WQSymElem wq_product(const PackedWord& s, const PackedWord& t, Op op);
WQSymElem wq_product(const WQSymElem& a, const WQSymElem& b, Op op);

/// σ∘τ if max(τ) = |σ|, zero otherwise.
WQSymElem wq_compose(const PackedWord& s, const PackedWord& t);
WQSymElem wq_compose(const WQSymElem& a, const WQSymElem& b);

/// Δ(σ) = Σ_{k=0}^{max} σ|{1..k} ⊗ σ|{k+1..max}; `reduced` drops k = 0 and k = max.
WordPairs wq_coproduct(const PackedWord& s, bool reduced = false);
WordPairs wq_coproduct(const WQSymElem& a, bool reduced = false);

/// Δ≺ (side Prec) splits at i = σ(1) .. max−1, Δ≻ (side Succ) at i = 1 .. σ(1)−1.
WordPairs wq_half_coproduct(const PackedWord& s, Op side);
WordPairs wq_half_coproduct(const WQSymElem& a, Op side);

/// N_σ ≺ N_τ (Prec) and N_σ ≻ N_τ (Succ): positional shuffles of σ and
/// τ[max σ] whose first letter comes from σ, respectively from τ.
WQSymElem n_basis_product(const PackedWord& s, const PackedWord& t, Op side);
WQSymElem n_basis_product(const WQSymElem& a, const WQSymElem& b, Op side);

/// Pieces of the reduced N coproduct: with f, l the first and last positions
/// of 1 and n = |σ|, Prec cuts at k in [l, n−1], Succ at [1, f−1], Dot at [f, l−1].
WordPairs n_basis_coproduct(const PackedWord& s, Op piece);

}  // namespace qsh

#endif  // QSH_WQSYM_HPP
