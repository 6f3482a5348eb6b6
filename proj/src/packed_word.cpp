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

#include "qsh/packed_word.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "qsh/error.hpp"

namespace qsh {

PackedWord::PackedWord(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int x : letters_) {
        if (x < 1) throw Error(ErrorKind::NotPacked, "letters must be positive");
        max_ = std::max(max_, x);
    }
    std::vector<bool> seen(static_cast<std::size_t>(max_) + 1, false);
    for (int x : letters_) seen[x] = true;
    for (int v = 1; v <= max_; ++v) {
        if (!seen[v]) throw Error(ErrorKind::NotPacked, "value " + std::to_string(v) + " is missing");
    }
}

PackedWord PackedWord::trusted(std::vector<int> letters, int max_value) {
    PackedWord w;
    w.letters_ = std::move(letters);
    w.max_ = max_value;
    return w;
}

std::string PackedWord::to_string() const {
    std::string out = "(";
    const bool compact = max_ <= 9;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(letters_[i]);
    }
    return out + ")";
}

bool is_permutation(const PackedWord& w) { return static_cast<std::size_t>(w.max()) == w.size(); }

Permutation::Permutation(PackedWord w) : w_(std::move(w)) {
    if (!is_permutation(w_)) throw Error(ErrorKind::NotPermutation, w_.to_string() + " is not bijective");
}

Permutation identity_permutation(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(PackedWord::trusted(std::move(v), static_cast<int>(n)));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> v(p.size());
    for (std::size_t i = 1; i <= p.size(); ++i) v[p(i) - 1] = static_cast<int>(i);
    return Permutation(PackedWord::trusted(std::move(v), static_cast<int>(p.size())));
}

PackedWord pack(std::span<const int> word) {
    std::vector<int> values(word.begin(), word.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<int> out;
    out.reserve(word.size());
    for (int x : word) {
        out.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), x) - values.begin()) + 1);
    }
    return PackedWord::trusted(std::move(out), static_cast<int>(values.size()));
}

PackedWord restrict_values(const PackedWord& w, const std::vector<int>& values) {
    std::vector<bool> keep(static_cast<std::size_t>(w.max()) + 1, false);
    for (int v : values) {
        if (v < 1 || v > w.max()) throw Error(ErrorKind::InvalidValueSet, "value " + std::to_string(v) + " out of range");
        keep[v] = true;
    }
    std::vector<int> sub;
    for (int x : w.letters()) {
        if (keep[x]) sub.push_back(x);
    }
    return pack(sub);
}

PackedWord restrict_range(const PackedWord& w, int lo, int hi) {
    std::vector<int> sub;
    for (int x : w.letters()) {
        if (x >= lo && x <= hi) sub.push_back(x - lo + 1);
    }
    return PackedWord::trusted(std::move(sub), std::max(0, hi - lo + 1));
}

std::vector<int> shift(const PackedWord& w, int k) {
    std::vector<int> out = w.letters();
    for (int& x : out) x += k;
    return out;
}

PackedWord shifted_concat(const PackedWord& s, const PackedWord& t) {
    std::vector<int> out = s.letters();
    out.reserve(s.size() + t.size());
    for (int x : t.letters()) out.push_back(x + s.max());
    return PackedWord::trusted(std::move(out), s.max() + t.max());
}

std::optional<PackedWord> compose(const PackedWord& s, const PackedWord& t) {
    if (static_cast<std::size_t>(t.max()) != s.size()) return std::nullopt;
    std::vector<int> out;
    out.reserve(t.size());
    for (int x : t.letters()) out.push_back(s(x));
    // s∘t hits every value of s since t is onto {1..|s|}.
    return PackedWord::trusted(std::move(out), s.max());
}

namespace {

void fill_packed(std::size_t n, std::vector<int>& cur, std::vector<PackedWord>& out) {
    if (cur.size() == n) {
        const int m = cur.empty() ? 0 : *std::max_element(cur.begin(), cur.end());
        std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
        for (int x : cur) seen[x] = true;
        for (int v = 1; v <= m; ++v) {
            if (!seen[v]) return;
        }
        out.push_back(PackedWord::trusted(cur, m));
        return;
    }
    for (int v = 1; v <= static_cast<int>(n); ++v) {
        cur.push_back(v);
        fill_packed(n, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<PackedWord>& enumerate_packed(std::size_t n) {
    thread_local std::map<std::size_t, std::vector<PackedWord>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<PackedWord> out;
    std::vector<int> cur;
    fill_packed(n, cur, out);
    return cache.emplace(n, std::move(out)).first->second;
}

const std::vector<Permutation>& enumerate_permutations(std::size_t n) {
    thread_local std::map<std::size_t, std::vector<Permutation>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Permutation> out;
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        out.emplace_back(PackedWord::trusted(v, static_cast<int>(n)));
    } while (std::next_permutation(v.begin(), v.end()));
    return cache.emplace(n, std::move(out)).first->second;
}

namespace {

// Walk both chains at once; each step gives the next value to the next
// letter of the first block, of the second block, or of both.
void merge_chains(int k, int l, int i, int j, int value, bool allow_both, std::vector<int>& cur,
                  std::vector<PackedWord>& out) {
    if (i == k && j == l) {
        out.push_back(PackedWord::trusted(cur, value));
        return;
    }
    if (i < k) {
        cur[i] = value + 1;
        merge_chains(k, l, i + 1, j, value + 1, allow_both, cur, out);
    }
    if (j < l) {
        cur[k + j] = value + 1;
        merge_chains(k, l, i, j + 1, value + 1, allow_both, cur, out);
    }
    if (allow_both && i < k && j < l) {
        cur[i] = cur[k + j] = value + 1;
        merge_chains(k, l, i + 1, j + 1, value + 1, allow_both, cur, out);
    }
}

Sector sector_of(const PackedWord& z, int k, int l) {
    if (k == 0) return Sector::Succ;
    if (l == 0) return Sector::Prec;
    const bool first = z(1) == 1;
    const bool second = z(static_cast<std::size_t>(k) + 1) == 1;
    if (first && second) return Sector::Dot;
    return first ? Sector::Prec : Sector::Succ;
}

}  // namespace

const std::vector<PackedWord>& enumerate_qsh(int k, int l, Sector sector) {
    thread_local std::map<std::tuple<int, int, Sector>, std::vector<PackedWord>> cache;
    const auto key = std::make_tuple(k, l, sector);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<PackedWord> all;
    std::vector<int> cur(static_cast<std::size_t>(k + l));
    merge_chains(k, l, 0, 0, 0, sector != Sector::Sh, cur, all);
    std::vector<PackedWord> out;
    for (auto& z : all) {
        if (sector == Sector::All || sector == Sector::Sh || sector_of(z, k, l) == sector) out.push_back(std::move(z));
    }
    std::sort(out.begin(), out.end());
    return cache.emplace(key, std::move(out)).first->second;
}

bool finer_than(const PackedWord& tau, const Permutation& sigma) {
    if (tau.size() != sigma.size()) throw Error(ErrorKind::LengthMismatch, "finer_than needs equal lengths");
    for (std::size_t i = 1; i <= tau.size(); ++i) {
        for (std::size_t j = 1; j <= tau.size(); ++j) {
            if (sigma(i) <= sigma(j) && tau(i) > tau(j)) return false;
        }
    }
    return true;
}

bool word_leq(const PackedWord& s, const PackedWord& t) {
    if (s.size() != t.size()) throw Error(ErrorKind::LengthMismatch, "word_leq needs equal lengths");
    for (std::size_t i = 1; i <= s.size(); ++i) {
        for (std::size_t j = 1; j <= s.size(); ++j) {
            if (t(i) <= t(j) && s(i) > s(j)) return false;
            if (i < j && t(i) > t(j) && s(i) <= s(j)) return false;
        }
    }
    return true;
}

Rational word_factorial(const PackedWord& tau) {
    std::vector<unsigned> counts(static_cast<std::size_t>(tau.max()) + 1, 0);
    for (int x : tau.letters()) ++counts[x];
    Rational r(1);
    for (int v = 1; v <= tau.max(); ++v) r *= factorial(counts[v]);
    return r;
}

std::size_t iota(const PackedWord& s) {
    if (s.empty()) throw Error(ErrorKind::EmptyWord, "iota of the empty word");
    for (std::size_t i = 1; i <= s.size(); ++i) {
        if (s(i) == 1) return i;
    }
    return 0;
}

}  // namespace qsh
