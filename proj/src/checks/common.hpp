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

#ifndef QSH_CHECKS_COMMON_HPP
#define QSH_CHECKS_COMMON_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qsh/checks.hpp"
#include "qsh/format.hpp"
#include "qsh/ops.hpp"

namespace qsh::checks {

constexpr std::size_t kKeptFailures = 20;

class Recorder {
public:
    explicit Recorder(CheckReport& r) : r_(r) {}

    template <class T>
    void equal(const std::string& law, const std::string& input, const T& lhs, const T& rhs) {
        ++r_.cases;
        if (lhs == rhs) return;
        fail(law, input, text(lhs), text(rhs));
    }

    void truth(const std::string& law, const std::string& input, bool ok) {
        ++r_.cases;
        if (!ok) fail(law, input, "false", "true");
    }

    void fail(const std::string& law, const std::string& input, std::string lhs, std::string rhs) {
        ++r_.failure_count;
        if (r_.failures.size() < kKeptFailures) r_.failures.push_back({law, input, std::move(lhs), std::move(rhs)});
    }

private:
    template <class T>
    static std::string text(const T& x) {
        if constexpr (requires { to_text(x); }) {
            return to_text(x);
        } else if constexpr (requires { x.to_string(); }) {
            return x.to_string();
        } else {
            return "?";
        }
    }

    CheckReport& r_;
};

/// An NQSh bialgebra presented through its products and reduced coproduct on linear combinations.
template <class B>
struct Algebra {
    using Elem = LinComb<B>;
    using Pairs = LinComb<std::pair<B, B>>;
    std::function<Elem(const Elem&, const Elem&, Op)> product;
    std::function<Pairs(const Elem&)> reduced_coproduct;
};

/// Componentwise product on A⊗A: (a⊗b) op1/op2 (c⊗d) summed over both arguments.
template <class B, class P>
LinComb<std::pair<B, B>> pair_product(const LinComb<std::pair<B, B>>& x, const LinComb<std::pair<B, B>>& y, P&& prod,
                                      Op left, Op right) {
    LinComb<std::pair<B, B>> out;
    for (const auto& [p, c] : x) {
        for (const auto& [q, d] : y) {
            out.add_scaled(tensor(prod(LinComb<B>(p.first), LinComb<B>(q.first), left),
                                  prod(LinComb<B>(p.second), LinComb<B>(q.second), right)),
                           c * d);
        }
    }
    return out;
}

/// Σ f(x') ⊗ g(x'') over the pairs of x.
template <class B, class F, class G>
LinComb<std::pair<B, B>> map_pairs(const LinComb<std::pair<B, B>>& x, F&& f, G&& g) {
    LinComb<std::pair<B, B>> out;
    for (const auto& [p, c] : x) out.add_scaled(tensor(f(p.first), g(p.second)), c);
    return out;
}

template <class B>
LinComb<std::pair<B, B>> single_pair(const LinComb<B>& a, const LinComb<B>& b) {
    return tensor(a, b);
}

/// Splits n into ordered parts of size ≥ 1.
void for_each_composition(int n, int parts, const std::function<void(const std::vector<int>&)>& f);

// Suites.
void suite_tridendriform(Recorder& rec, const CheckBounds& b);
void suite_hopf_wqsym(Recorder& rec, const CheckBounds& b);
void suite_hopf_fqsym(Recorder& rec, const CheckBounds& b);
void suite_duality(Recorder& rec, const CheckBounds& b);
void suite_bidendriform(Recorder& rec, const CheckBounds& b);
void suite_phi_morphism(Recorder& rec, const CheckBounds& b);
void suite_psi_morphism(Recorder& rec, const CheckBounds& b);
void suite_hoffman_iso(Recorder& rec, const CheckBounds& b);
void suite_series_group(Recorder& rec, const CheckBounds& b);
void suite_coderivations(Recorder& rec, const CheckBounds& b);
void suite_gradation(Recorder& rec, const CheckBounds& b);
void suite_descent_qn(Recorder& rec, const CheckBounds& b);
void suite_trees_omega(Recorder& rec, const CheckBounds& b);
void suite_trees_psi(Recorder& rec, const CheckBounds& b);
void suite_diagram(Recorder& rec, const CheckBounds& b);

}  // namespace qsh::checks

#endif  // QSH_CHECKS_COMMON_HPP
