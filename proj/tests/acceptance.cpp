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

// Acceptance runner: one PASS/FAIL line per criterion, each within its time budget.
// Usage: qsh_acceptance PATH_TO_QSH_BINARY

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "golden.hpp"
#include "oracles.hpp"
#include "qsh/checks.hpp"
#include "qsh/packed_word.hpp"

using namespace qsh;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<std::string()> run;  // empty on success, otherwise a reason
};

std::string suites(const std::vector<std::string>& names, const CheckBounds& b) {
    std::string bad;
    for (const auto& n : names) {
        const CheckReport r = run_checks(n, b);
        if (!r.passed()) bad += r.to_text();
    }
    return bad;
}

CheckBounds bounds(int max_length, int order = 6) {
    CheckBounds b;
    b.max_length = max_length;
    b.order = order;
    return b;
}

std::string golden_values() {
    std::string bad;
    for (const auto& c : golden::all()) {
        if (!c.ok()) bad += c.name + ": got " + c.got + ", want " + c.want + "\n";
    }
    return bad;
}

std::string counting() {
    std::string bad;
    const std::vector<long> bell{1, 1, 3, 13, 75, 541};
    for (int n = 0; n <= 5; ++n) {
        const long got = static_cast<long>(enumerate_packed(n).size());
        if (got != bell[n] || got != oracle::ordered_bell(n)) bad += "ordered Bell " + std::to_string(n) + "\n";
    }
    for (int k = 0; k <= 4; ++k) {
        for (int l = 0; l <= 4; ++l) {
            const auto& sh = enumerate_qsh(k, l, Sector::Sh);
            if (Rational(static_cast<std::int64_t>(sh.size())) != binomial(k + l, k)) bad += "shuffle count\n";
            if (k == 0 || l == 0) continue;
            std::set<PackedWord> parts;
            std::size_t total = 0;
            for (Sector s : {Sector::Prec, Sector::Succ, Sector::Dot}) {
                for (const auto& u : enumerate_qsh(k, l, s)) parts.insert(u);
                total += enumerate_qsh(k, l, s).size();
            }
            const auto& all = enumerate_qsh(k, l, Sector::All);
            if (total != all.size() || parts != std::set<PackedWord>(all.begin(), all.end())) bad += "sector partition\n";
        }
    }
    return bad;
}

std::string cli_all(const std::string& qsh) {
    const std::string cmd = "\"" + qsh + "\" check --suite all --max-length 4 > /dev/null";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return "could not run " + qsh + "\n";
    const int code = WEXITSTATUS(status);
    return code == 0 ? "" : "exit code " + std::to_string(code) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: qsh_acceptance PATH_TO_QSH\n";
        return 2;
    }
    const std::string qsh = argv[1];
    const std::vector<Criterion> criteria{
        {1, "golden values of Phi, phi, the action table, Omega, omega and Psi", 1, golden_values},
        {2, "tridendriform and bialgebra laws on WQSym and T(V)", 60,
         [] { return suites({"tridendriform", "hopf-wqsym", "bidendriform"}, bounds(4)); }},
        {3, "Phi and Psi morphisms, equivariance, Xi after Phi, negative test", 60,
         [] { return suites({"phi-morphism", "psi-morphism"}, bounds(4)); }},
        {4, "Hoffman isomorphism and the series group law", 30,
         [] { return suites({"hoffman-iso", "series-group"}, bounds(4, 6)); }},
        {5, "coderivations, conjugation and gradation", 30,
         [] { return suites({"coderivations", "gradation"}, bounds(4)); }},
        {6, "descent identity for q_n", 30, [] { return suites({"descent-qn"}, bounds(4)); }},
        {7, "tree embeddings, orders and the commuting diagram", 60,
         [] { return suites({"trees-omega", "trees-psi", "diagram"}, bounds(4)); }},
        {8, "duality between the F and N bases", 30, [] { return suites({"duality"}, bounds(4)); }},
        {9, "counting sanity", 5, counting},
        {10, "qsh check --suite all --max-length 4", 120, [&qsh] { return cli_all(qsh); }},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string reason;
        try {
            reason = c.run();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what() + "\n";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (reason.empty() && secs > c.budget_s) reason = "over budget\n";
        const bool ok = reason.empty();
        failed += ok ? 0 : 1;
        std::printf("criterion %2d: %s (%.2f s of %.0f s) %s\n", c.id, ok ? "PASS" : "FAIL", secs, c.budget_s, c.title.c_str());
        if (!ok) std::cout << reason;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
