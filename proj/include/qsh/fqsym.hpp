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

#ifndef QSH_FQSYM_HPP
#define QSH_FQSYM_HPP

#include <utility>

#include "qsh/lincomb.hpp"
#include "qsh/ops.hpp"
#include "qsh/packed_word.hpp"
#include "qsh/wqsym.hpp"

namespace qsh {

using FQSymElem = LinComb<Permutation>;
using PermPairs = LinComb<std::pair<Permutation, Permutation>>;

/// Σ over shuffles ζ ∈ Sh_{k,l} of ζ∘(σ⊗τ); Prec keeps ζ(1) = 1, Succ keeps ζ(k+1) = 1.
FQSymElem fq_product(const Permutation& s, const Permutation& t, Op op);
FQSymElem fq_product(const FQSymElem& a, const FQSymElem& b, Op op);

WordPairs fq_coproduct_words(const Permutation& s, bool reduced = false);
PermPairs fq_coproduct(const Permutation& s, bool reduced = false);
PermPairs fq_coproduct(const FQSymElem& a, bool reduced = false);

/// Keeps the bijective words.
FQSymElem xi_project(const WQSymElem& a);
/// The inclusion of permutations into packed words.
WQSymElem as_words(const FQSymElem& a);

/// Φ(σ) = Σ_{τ ∝ σ} τ / τ!.
WQSymElem phi_embed(const Permutation& s);
WQSymElem phi_embed(const FQSymElem& a);
/// The same sum, by filtering every packed word of length |σ| with finer_than.
WQSymElem phi_embed_oracle(const Permutation& s);

/// Ψ(σ) = Σ_{τ ≤ σ} τ.
WQSymElem psi_embed(const PackedWord& s);
WQSymElem psi_embed(const FQSymElem& a);

}  // namespace qsh

#endif  // QSH_FQSYM_HPP
