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

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qsh/checks.hpp"
#include "qsh/decorated.hpp"
#include "qsh/error.hpp"
#include "qsh/format.hpp"
#include "qsh/fqsym.hpp"
#include "qsh/series.hpp"
#include "qsh/tensor.hpp"
#include "qsh/trees.hpp"
#include "qsh/wqsym.hpp"

namespace {

using namespace qsh;

struct Options {
    std::string format = "text";
    std::string op;
    std::string mode;
    std::string series;
    std::string param = "1";
    std::string coeffs;
    std::string suite = "all";
    int order = 6;
    int max_length = 4;
    std::uint64_t seed = CheckBounds{}.seed;
    bool reduced = false;
    std::vector<std::string> args;
};

// Raised for malformed user input; mapped to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
auto parsed(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

void need(const Options& o, std::size_t n) {
    if (o.args.size() != n) throw InputError("expected " + std::to_string(n) + " argument(s), got " + std::to_string(o.args.size()));
}

Op op_or(const Options& o, Op fallback) {
    return o.op.empty() ? fallback : parsed([&] { return parse_op(o.op); });
}

bool json(const Options& o) { return o.format == "json"; }

template <class B>
void emit(const Options& o, const LinComb<B>& x, std::string_view basis) {
    if (json(o)) {
        std::cout << to_json(x, basis).dump() << "\n";
    } else {
        std::cout << to_text(x) << "\n";
    }
}

WQSymElem words(const std::string& s) {
    return parsed([&] { return parse_lincomb<PackedWord>(s, parse_packed_word); });
}
FQSymElem perms(const std::string& s) {
    return parsed([&] { return parse_lincomb<Permutation>(s, parse_permutation); });
}
TensorElem tensors(const std::string& s) {
    return parsed([&] { return parse_lincomb<TensorWord>(s, parse_tensor_word); });
}
DescElem decorated(const std::string& s) {
    return parsed([&] { return parse_lincomb<DecoratedPackedWord>(s, parse_decorated); });
}
TreeComb trees(const std::string& s) {
    return parsed([&] { return parse_lincomb<SchroderTree>(s, parse_tree); });
}
int integer(const std::string& s) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError("expected an integer, got '" + s + "'");
}

// A series given as JSON, a standard name (with --param), or a coefficient list from degree 1.
TruncatedSeries series_arg(const Options& o, const std::string& text) {
    if (!text.empty() && text.front() == '{') return parsed([&] { return TruncatedSeries::from_json(text); });
    const bool named = !text.empty() && std::isalpha(static_cast<unsigned char>(text.front()));
    if (named) {
        const StandardSeries kind = parsed([&] { return parse_standard_series(text); });
        const Rational a = parsed([&] { return Rational::parse(o.param); });
        return series_standard(kind, o.order, a);
    }
    std::vector<Rational> c;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        c.push_back(parsed([&] { return Rational::parse(text.substr(start, end - start)); }));
        start = end + 1;
    }
    return TruncatedSeries(std::max(o.order, static_cast<int>(c.size())), c);
}

TruncatedSeries series_opt(const Options& o) {
    if (!o.coeffs.empty()) return series_arg(o, o.coeffs);
    if (o.series.empty()) throw InputError("give --series or --coeffs");
    return series_arg(o, o.series);
}

EmbedMode embed_mode(const Options& o, EmbedMode fallback) {
    if (o.mode.empty()) return fallback;
    if (o.mode == "recursive") return EmbedMode::Recursive;
    if (o.mode == "oracle" || o.mode == "poset") return EmbedMode::Oracle;
    throw InputError("unknown mode '" + o.mode + "'");
}

void emit_series(const Options& o, const TruncatedSeries& s) {
    std::cout << (json(o) ? s.to_json() : s.to_string()) << "\n";
}

int run_check(const Options& o) {
    CheckBounds b;
    b.max_length = o.max_length;
    b.order = o.order;
    b.seed = o.seed;
    std::vector<std::string> names;
    if (o.suite == "all") {
        for (const auto& n : suite_names()) {
            if (n != "all") names.push_back(n);
        }
    } else {
        names.push_back(o.suite);
    }
    CheckReport total;
    total.suite = o.suite;
    total.bounds = b;
    Json reports = Json::array();
    for (const auto& name : names) {
        const CheckReport r = parsed([&] { return run_checks(name, b); });
        if (json(o)) {
            reports.push_back(r.to_json());
        } else if (names.size() > 1) {
            std::cout << r.suite << ": " << r.cases << " cases, " << r.failure_count << " failures\n";
            if (!r.passed()) std::cout << r.to_text();
        } else {
            std::cout << r.to_text();
        }
        total.merge(r);
    }
    if (json(o)) {
        Json j = total.to_json();
        j["suites"] = std::move(reports);
        std::cout << j.dump() << "\n";
    } else if (names.size() > 1) {
        std::cout << (total.passed() ? "PASS" : "FAIL") << " (" << total.cases << " cases, " << total.failure_count
                  << " failures)\n";
    }
    return total.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in quasi-shuffle Hopf algebras", "qsh"};
    app.require_subcommand(1);
    Options o;
    int code = 0;

    const auto leaf = [&o](CLI::App* parent, const std::string& name, const std::string& help) {
        CLI::App* c = parent->add_subcommand(name, help);
        c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        c->add_option("--order", o.order, "series truncation order");
        c->add_option("--max-length", o.max_length, "bound for property checks");
        c->add_option("--op", o.op, "prec, succ, dot, star, preceq, succeq, sh");
        c->add_option("args", o.args, "elements");
        return c;
    };
    const auto group = [&app](const std::string& name, const std::string& help) {
        CLI::App* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        return g;
    };
    const auto on = [&code](CLI::App* c, std::function<int()> f) {
        c->callback([&code, f = std::move(f)] { code = f(); });
        return c;
    };

    CLI::App* word = group("word", "packed words (F basis of WQSym)");
    on(leaf(word, "mul", "product of two elements"), [&] {
        need(o, 2);
        emit(o, wq_product(words(o.args[0]), words(o.args[1]), op_or(o, Op::Star)), "F");
        return 0;
    });
    CLI::App* wcomul = leaf(word, "comul", "coproduct");
    wcomul->add_flag("--reduced", o.reduced, "drop the trivial terms");
    on(wcomul, [&] {
        need(o, 1);
        emit(o, wq_coproduct(words(o.args[0]), o.reduced), "F⊗F");
        return 0;
    });
    on(leaf(word, "halfcomul", "half coproduct (--op prec or succ)"), [&] {
        need(o, 1);
        emit(o, wq_half_coproduct(words(o.args[0]), op_or(o, Op::Prec)), "F⊗F");
        return 0;
    });
    on(leaf(word, "compose", "internal composition"), [&] {
        need(o, 2);
        emit(o, wq_compose(words(o.args[0]), words(o.args[1])), "F");
        return 0;
    });

    CLI::App* nbasis = group("nbasis", "dual N basis");
    on(leaf(nbasis, "mul", "N-basis half product (--op prec or succ)"), [&] {
        need(o, 2);
        emit(o, n_basis_product(words(o.args[0]), words(o.args[1]), op_or(o, Op::Prec)), "N");
        return 0;
    });
    on(leaf(nbasis, "comul", "N-basis coproduct piece (--op prec, succ or dot)"), [&] {
        need(o, 1);
        WordPairs out;
        for (const auto& [w, c] : words(o.args[0])) out.add_scaled(n_basis_coproduct(w, op_or(o, Op::Prec)), c);
        emit(o, out, "N⊗N");
        return 0;
    });

    CLI::App* perm = group("perm", "permutations (FQSym)");
    on(leaf(perm, "mul", "product (--op prec, succ or star)"), [&] {
        need(o, 2);
        emit(o, fq_product(perms(o.args[0]), perms(o.args[1]), op_or(o, Op::Star)), "P");
        return 0;
    });
    CLI::App* pcomul = leaf(perm, "comul", "coproduct");
    pcomul->add_flag("--reduced", o.reduced, "drop the trivial terms");
    on(pcomul, [&] {
        need(o, 1);
        emit(o, fq_coproduct(perms(o.args[0]), o.reduced), "P⊗P");
        return 0;
    });

    CLI::App* morph = group("morph", "morphisms between FQSym and WQSym");
    on(leaf(morph, "xi", "projection onto permutations"), [&] {
        need(o, 1);
        emit(o, xi_project(words(o.args[0])), "P");
        return 0;
    });
    on(leaf(morph, "phi", "rational embedding"), [&] {
        need(o, 1);
        emit(o, phi_embed(perms(o.args[0])), "F");
        return 0;
    });
    on(leaf(morph, "psi", "order-sum embedding"), [&] {
        need(o, 1);
        emit(o, psi_embed(perms(o.args[0])), "F");
        return 0;
    });

    CLI::App* tens = group("tensor", "tensor quasi-shuffle algebra T(V)");
    const auto add_series = [&o](CLI::App* c) {
        c->add_option("--series", o.series, "expm1, log1p, pow1p, scale, xlog, JSON, or coefficients a1,a2,...");
        c->add_option("--param", o.param, "parameter a of the standard series");
        c->add_option("--coeffs", o.coeffs, "coefficients a1,a2,...");
    };
    on(leaf(tens, "mul", "product"), [&] {
        need(o, 2);
        emit(o, tv_product(tensors(o.args[0]), tensors(o.args[1]), op_or(o, Op::Star)), "T");
        return 0;
    });
    CLI::App* tcomul = leaf(tens, "comul", "deconcatenation");
    tcomul->add_flag("--reduced", o.reduced, "drop the trivial terms");
    on(tcomul, [&] {
        need(o, 1);
        emit(o, tv_coproduct(tensors(o.args[0]), o.reduced), "T⊗T");
        return 0;
    });
    on(leaf(tens, "act", "F_sigma acting on a tensor: act SIGMA WORD"), [&] {
        need(o, 2);
        const WQSymElem s = words(o.args[0]);
        const TensorElem w = tensors(o.args[1]);
        TensorElem out;
        for (const auto& [p, c] : s) out.add_scaled(f_action(p, w), c);
        emit(o, out, "T");
        return 0;
    });
    on(leaf(tens, "pi", "canonical projection onto primitives"), [&] {
        need(o, 1);
        emit(o, apply_endo(pi_canonical, tensors(o.args[0])), "T");
        return 0;
    });
    CLI::App* phia = leaf(tens, "phiA", "coalgebra endomorphism of a series");
    add_series(phia);
    on(phia, [&] {
        need(o, 1);
        const TruncatedSeries A = series_opt(o);
        const TensorElem w = tensors(o.args[0]);
        emit(o, phi_series_endo(A, w), "T");
        return 0;
    });
    CLI::App* coder = leaf(tens, "coderiv", "coderivation of a series");
    add_series(coder);
    on(coder, [&] {
        need(o, 1);
        const TruncatedSeries A = series_opt(o);
        const TensorElem w = tensors(o.args[0]);
        emit(o, coderivation(A, w), "T");
        return 0;
    });
    on(leaf(tens, "theta", "right-nested prec product of the letters"), [&] {
        need(o, 1);
        emit(o, apply_endo(theta_nested_left, tensors(o.args[0])), "T");
        return 0;
    });

    CLI::App* desc = group("desc", "decorated packed words and the descent elements");
    on(leaf(desc, "p", "p N [WORD]: the projection p_N, or its value on a tensor"), [&] {
        if (o.args.empty() || o.args.size() > 2) need(o, 1);
        const int n = integer(o.args[0]);
        const DescElem p = p_projection(n);
        if (o.args.size() == 1) {
            emit(o, p, "D");
        } else {
            emit(o, apply_endo(as_endo(p), tensors(o.args[1])), "T");
        }
        return 0;
    });
    on(leaf(desc, "q", "q N WORD (--mode definition or formula)"), [&] {
        need(o, 2);
        const int n = integer(o.args[0]);
        QMode mode = QMode::Definition;
        if (o.mode == "formula") {
            mode = QMode::DescentFormula;
        } else if (!o.mode.empty() && o.mode != "definition") {
            throw InputError("unknown mode '" + o.mode + "'");
        }
        const TensorElem w = tensors(o.args[1]);
        emit(o, apply_endo(q_projection(n, mode), w), "T");
        return 0;
    })->add_option("--mode", o.mode, "definition or formula");
    on(leaf(desc, "compose", "composition of decorated words"), [&] {
        need(o, 2);
        emit(o, dec_compose(decorated(o.args[0]), decorated(o.args[1])), "D");
        return 0;
    });
    on(leaf(desc, "mul", "product of decorated words"), [&] {
        need(o, 2);
        emit(o, dec_product(decorated(o.args[0]), decorated(o.args[1]), op_or(o, Op::Star)), "D");
        return 0;
    });

    CLI::App* tree = group("tree", "Schroder trees");
    on(leaf(tree, "mul", "product"), [&] {
        need(o, 2);
        emit(o, tree_product(trees(o.args[0]), trees(o.args[1]), op_or(o, Op::Star)), "S");
        return 0;
    });
    on(leaf(tree, "rho", "tree of a (decorated) packed word"), [&] {
        need(o, 1);
        const DecoratedPackedWord w = parsed([&] {
            return o.args[0].find(';') == std::string::npos && o.args[0].front() != '{'
                       ? DecoratedPackedWord::plain(parse_packed_word(o.args[0]))
                       : parse_decorated(o.args[0]);
        });
        const SchroderTree t = rho(w);
        if (json(o)) {
            std::cout << Json{{"tree", t.encoding()}}.dump() << "\n";
        } else {
            std::cout << t.encoding() << "\n";
        }
        return 0;
    });
    on(leaf(tree, "omega", "section word of a tree"), [&] {
        need(o, 1);
        const SchroderTree t = parsed([&] { return parse_tree(o.args[0]); });
        const DecoratedPackedWord w = omega_section(t);
        if (json(o)) {
            Json j = Json::object();
            basis_json(w, j);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (t.is_plain() ? w.word().to_string() : basis_text(w)) << "\n";
        }
        return 0;
    });
    on(leaf(tree, "omega-embed", "embedding into decorated packed words (--mode recursive or oracle)"), [&] {
        need(o, 1);
        const TreeComb t = trees(o.args[0]);
        bool plain = true;
        for (const auto& [u, c] : t) plain = plain && u.is_plain();
        const DescElem img = omega_embed(t, embed_mode(o, EmbedMode::Recursive));
        if (plain) {
            emit(o, forget_decorations(img), "F");
        } else {
            emit(o, img, "D");
        }
        return 0;
    })->add_option("--mode", o.mode, "recursive or oracle");
    on(leaf(tree, "omega-prime", "permutations of a binary tree"), [&] {
        need(o, 1);
        emit(o, omega_prime(trees(o.args[0])), "P");
        return 0;
    });
    on(leaf(tree, "psi", "sum of the trees below a binary tree (--mode poset or recursive)"), [&] {
        need(o, 1);
        emit(o, psi_tree(trees(o.args[0]), embed_mode(o, EmbedMode::Oracle)), "S");
        return 0;
    })->add_option("--mode", o.mode, "poset or recursive");
    on(leaf(tree, "leq", "LEQ T U: whether T <= U"), [&] {
        need(o, 2);
        const SchroderTree t = parsed([&] { return parse_tree(o.args[0]); });
        const SchroderTree u = parsed([&] { return parse_tree(o.args[1]); });
        const bool r = tree_leq(t, u);
        if (json(o)) {
            std::cout << Json{{"result", r}}.dump() << "\n";
        } else {
            std::cout << (r ? "true" : "false") << "\n";
        }
        return 0;
    });

    CLI::App* ser = group("series", "truncated power series");
    on(leaf(ser, "compose", "A o B"), [&] {
        need(o, 2);
        emit_series(o, series_compose(series_arg(o, o.args[0]), series_arg(o, o.args[1])));
        return 0;
    });
    on(leaf(ser, "invert", "compositional inverse"), [&] {
        need(o, 1);
        emit_series(o, series_comp_inverse(series_arg(o, o.args[0])));
        return 0;
    });
    CLI::App* std_series = leaf(ser, "std", "standard series NAME (--param a)");
    std_series->add_option("--param", o.param, "parameter a");
    on(std_series, [&] {
        need(o, 1);
        emit_series(o, series_arg(o, o.args[0]));
        return 0;
    });

    CLI::App* check = app.add_subcommand("check", "run property-check suites");
    check->add_option("--suite", o.suite, "suite name or all");
    check->add_option("--max-length", o.max_length, "length and degree bound");
    check->add_option("--order", o.order, "series order");
    check->add_option("--seed", o.seed, "random seed");
    check->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    on(check, [&] { return run_check(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const InputError& e) {
        std::cerr << "qsh: parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "qsh: " << e.what() << "\n";
        return 3;
    }
    return code;
}
