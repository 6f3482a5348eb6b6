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

#include "qsh/checks.hpp"

#include <functional>
#include <map>

#include "checks/common.hpp"
#include "qsh/error.hpp"

namespace qsh {

namespace {

using SuiteFn = void (*)(checks::Recorder&, const CheckBounds&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"tridendriform", checks::suite_tridendriform},
        {"hopf-wqsym", checks::suite_hopf_wqsym},
        {"hopf-fqsym", checks::suite_hopf_fqsym},
        {"phi-morphism", checks::suite_phi_morphism},
        {"psi-morphism", checks::suite_psi_morphism},
        {"hoffman-iso", checks::suite_hoffman_iso},
        {"series-group", checks::suite_series_group},
        {"coderivations", checks::suite_coderivations},
        {"gradation", checks::suite_gradation},
        {"descent-qn", checks::suite_descent_qn},
        {"bidendriform", checks::suite_bidendriform},
        {"trees-omega", checks::suite_trees_omega},
        {"trees-psi", checks::suite_trees_psi},
        {"diagram", checks::suite_diagram},
        {"duality", checks::suite_duality},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        v.emplace_back("all");
        return v;
    }();
    return names;
}

void CheckReport::merge(const CheckReport& other) {
    cases += other.cases;
    failure_count += other.failure_count;
    for (const auto& f : other.failures) {
        if (failures.size() < checks::kKeptFailures) failures.push_back(f);
    }
}

Json CheckReport::to_json() const {
    Json j;
    j["suite"] = suite;
    j["bounds"] = {{"max_length", bounds.max_length}, {"order", bounds.order}, {"seed", bounds.seed}};
    j["cases"] = cases;
    j["failure_count"] = failure_count;
    Json fs = Json::array();
    for (const auto& f : failures) fs.push_back({{"law", f.law}, {"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    j["failures"] = std::move(fs);
    j["passed"] = passed();
    return j;
}

std::string CheckReport::to_text() const {
    std::string out = "suite " + suite + ": " + std::to_string(cases) + " cases, " + std::to_string(failure_count) +
                      " failures (max-length " + std::to_string(bounds.max_length) + ", order " +
                      std::to_string(bounds.order) + ")\n";
    for (const auto& f : failures) {
        out += "  FAIL " + f.law + " at " + f.input + "\n    lhs: " + f.lhs + "\n    rhs: " + f.rhs + "\n";
    }
    if (failures.size() < failure_count) out += "  ... " + std::to_string(failure_count - failures.size()) + " more\n";
    out += passed() ? "PASS\n" : "FAIL\n";
    return out;
}

CheckReport run_checks(std::string_view suite, const CheckBounds& bounds) {
    CheckReport report;
    report.suite = std::string(suite);
    report.bounds = bounds;
    checks::Recorder rec(report);
    bool found = false;
    for (const auto& [name, fn] : registry()) {
        if (suite == "all" || suite == name) {
            fn(rec, bounds);
            found = true;
        }
    }
    if (!found) throw Error(ErrorKind::UnknownSuite, "no suite named '" + std::string(suite) + "'");
    return report;
}

namespace checks {

void for_each_composition(int n, int parts, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> cur;
    std::function<void(int)> go = [&](int left) {
        if (static_cast<int>(cur.size()) == parts) {
            if (left == 0) f(cur);
            return;
        }
        for (int a = 1; a <= left; ++a) {
            cur.push_back(a);
            go(left - a);
            cur.pop_back();
        }
    };
    go(n);
}

}  // namespace checks

}  // namespace qsh
