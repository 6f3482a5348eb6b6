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

#ifndef QSH_PACKED_WORD_HPP
#define QSH_PACKED_WORD_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsh/rational.hpp"

namespace qsh {

/// A surjection {1..n} -> {1..m}, stored as its word of values.
class PackedWord {
public:
    PackedWord() = default;
    /// Throws NotPacked unless the values are exactly {1..m}.
    explicit PackedWord(std::vector<int> letters);
    PackedWord(std::initializer_list<int> letters) : PackedWord(std::vector<int>(letters)) {}

    /// Skips validation; for callers that build packed words by construction.
    static PackedWord trusted(std::vector<int> letters, int max_value);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int max() const { return max_; }
    /// 1-based position, 1-based values.
    int operator()(std::size_t i) const { return letters_[i - 1]; }
    const std::vector<int>& letters() const { return letters_; }

    friend bool operator==(const PackedWord& a, const PackedWord& b) { return a.letters_ == b.letters_; }
    friend std::strong_ordering operator<=>(const PackedWord& a, const PackedWord& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        return a.letters_ <=> b.letters_;
    }

    /// "(212)" when every letter is at most 9, "(2,10,1,...)" otherwise; "()" when empty.
    std::string to_string() const;

private:
    std::vector<int> letters_;
    int max_ = 0;
};

/// A bijective packed word.
class Permutation {
public:
    Permutation() = default;
    /// Throws NotPermutation.
    explicit Permutation(PackedWord w);
    Permutation(std::initializer_list<int> letters) : Permutation(PackedWord(letters)) {}

    const PackedWord& word() const { return w_; }
    std::size_t size() const { return w_.size(); }
    int operator()(std::size_t i) const { return w_(i); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) { return a.w_ <=> b.w_; }

    std::string to_string() const { return w_.to_string(); }

private:
    PackedWord w_;
};

bool is_permutation(const PackedWord& w);
Permutation identity_permutation(std::size_t n);
Permutation inverse(const Permutation& p);

PackedWord pack(std::span<const int> word);
inline PackedWord pack(const std::vector<int>& word) { return pack(std::span<const int>(word)); }

/// Letters with values in `values`, packed. Throws InvalidValueSet if some
/// value lies outside {1..max(w)}.
PackedWord restrict_values(const PackedWord& w, const std::vector<int>& values);
/// Letters with values in [lo, hi], packed.
PackedWord restrict_range(const PackedWord& w, int lo, int hi);

/// w with every letter increased by k.
std::vector<int> shift(const PackedWord& w, int k);
/// σ followed by τ[max σ].
PackedWord shifted_concat(const PackedWord& s, const PackedWord& t);

/// Pointwise composition (σ∘τ)(i) = σ(τ(i)); nullopt unless max(τ) = |σ|.
std::optional<PackedWord> compose(const PackedWord& s, const PackedWord& t);

/// All packed words of length n in canonical order.
const std::vector<PackedWord>& enumerate_packed(std::size_t n);
/// All permutations of length n in canonical order.
const std::vector<Permutation>& enumerate_permutations(std::size_t n);

enum class Sector { All, Prec, Succ, Dot, Sh };

/// Quasi-shuffles ζ of length k+l, increasing on {1..k} and on {k+1..k+l}.
/// Prec: ζ⁻¹(1) = {1}; Succ: ζ⁻¹(1) = {k+1}; Dot: ζ⁻¹(1) = {1, k+1};
/// Sh: the bijective ones. When one side is empty the single word lies in
/// Prec (l = 0) or Succ (k = 0).
const std::vector<PackedWord>& enumerate_qsh(int k, int l, Sector sector);

/// τ ∝ σ: σ(i) ≤ σ(j) implies τ(i) ≤ τ(j).
bool finer_than(const PackedWord& tau, const Permutation& sigma);
/// σ ≤ τ: τ(i) ≤ τ(j) ⟹ σ(i) ≤ σ(j), and i < j, τ(i) > τ(j) ⟹ σ(i) > σ(j).
bool word_leq(const PackedWord& s, const PackedWord& t);

/// ∏ |τ⁻¹(i)|!.
Rational word_factorial(const PackedWord& tau);

/// First position of the value 1. Throws EmptyWord.
std::size_t iota(const PackedWord& s);

}  // namespace qsh

#endif  // QSH_PACKED_WORD_HPP
