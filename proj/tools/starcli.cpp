// starcli: evaluate expressions over the star-product algebra, run seeded
// property suites, and print witness constructions, as text or JSON.
//
// Exit codes: 0 success, 1 evaluation error, 2 usage error,
// 3 property counterexample.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starprod/checks.hpp"
#include "starprod/eval.hpp"
#include "starprod/float_scalar.hpp"
#include "starprod/json_io.hpp"
#include "starprod/rational.hpp"

using nlohmann::json;
using namespace starprod;

namespace {

constexpr int kExitEval = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

struct Options {
    std::string backend = "rational";
    bool as_json = false;
    std::vector<std::string> lets;

    std::string expression;

    std::string property;
    std::uint64_t trials = 200;
    std::uint64_t seed = 0;
    bool exhaustive = false;

    std::string witness_name;
    std::string witness_arg;
};

template <ScalarBackend S>
Environment<S> build_env(const std::vector<std::string>& lets) {
    Environment<S> env;
    for (const auto& binding : lets) {
        auto eq = binding.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InvalidArgument("--let expects NAME=EXPR, got '" + binding + "'");
        std::string name = binding.substr(0, eq);
        env[name] = eval_text<S>(binding.substr(eq + 1), env);
    }
    return env;
}

template <ScalarBackend S>
int cmd_eval(const Options& opt) {
    Value<S> v = eval_text<S>(opt.expression, build_env<S>(opt.lets));
    if (opt.as_json)
        std::cout << encode_value<S>(v).dump() << "\n";
    else
        std::cout << format_value(v) << "\n";
    return 0;
}

json report_to_json(const CheckReport& r) {
    return {{"property", r.property}, {"backend", r.backend}, {"trials", r.trials},
            {"seed", r.seed},         {"failures", r.failures}, {"elapsed_ms", r.elapsed_ms}};
}

int cmd_check(const Options& opt) {
    CheckOptions copts;
    copts.trials = opt.trials;
    copts.seed = opt.seed;
    copts.exhaustive = opt.exhaustive;
    copts.backend = opt.backend == "float" ? Backend::Float : Backend::Rational;

    CheckReport report;
    try {
        report = run_check(opt.property, copts);
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (opt.as_json) {
        std::cout << report_to_json(report).dump() << "\n";
    } else {
        std::cout << "property=" << report.property << " backend=" << report.backend
                  << " trials=" << report.trials << " seed=" << report.seed
                  << " failures=" << report.failures.size() << " elapsed_ms=" << report.elapsed_ms
                  << "\n";
        for (const auto& f : report.failures) std::cout << "counterexample: " << f << "\n";
        std::cout << (report.passed() ? "PASS" : "FAIL") << "\n";
    }
    return report.passed() ? 0 : kExitCounterexample;
}

template <ScalarBackend S>
json matrix_json(const Matrix<S>& m) {
    return encode_matrix(m);
}

int cmd_witness(const Options& opt) {
    using R = Rational;
    if (opt.witness_name == "nonassoc3") {
        NonAssocWitness<R> w = nonassoc_witness<R>(3);
        if (opt.as_json) {
            json j = {{"A", matrix_json(w.a)},     {"B", matrix_json(w.b)},
                      {"C", matrix_json(w.c)},     {"lhs", matrix_json(w.lhs)},
                      {"rhs", matrix_json(w.rhs)}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "A = " << format_value<R>(w.a) << "\n"
                      << "B = " << format_value<R>(w.b) << "\n"
                      << "C = " << format_value<R>(w.c) << "\n"
                      << "(A @ B) @ C = " << format_value<R>(w.lhs) << "\n"
                      << "A @ (B @ C) = " << format_value<R>(w.rhs) << "\n";
        }
        return 0;
    }
    if (opt.witness_name == "zerodiv") {
        if (opt.witness_arg.empty()) {
            std::cerr << "error: witness zerodiv requires a matrix argument\n";
            return kExitUsage;
        }
        Value<R> v = eval_text<R>(opt.witness_arg);
        auto* m = std::get_if<Matrix<R>>(&v);
        if (!m) throw InvalidArgument("witness zerodiv argument must be a matrix");
        Matrix<R> b = zero_divisor_witness(*m);
        Matrix<R> product = star(*m, b);
        if (opt.as_json) {
            json j = {{"A", matrix_json(*m)}, {"B", matrix_json(b)},
                      {"A_star_B", matrix_json(product)}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "A = " << format_value<R>(*m) << "\n"
                      << "B = " << format_value<R>(b) << "\n"
                      << "A @ B = " << format_value<R>(product) << "\n";
        }
        return 0;
    }
    if (opt.witness_name == "rho-raw-reading") {
        auto [a, b] = find_rho_raw_counterexample();
        Matrix<R> lhs = rho_raw_reading(star(a, b));
        Matrix<R> rhs = rho_raw_reading(a) * rho_raw_reading(b);
        Matrix<R> good_lhs = rho(star(a, b));
        Matrix<R> good_rhs = rho(a) * rho(b);
        if (opt.as_json) {
            json j = {{"A", matrix_json(a)},
                      {"B", matrix_json(b)},
                      {"raw_lhs", matrix_json(lhs)},
                      {"raw_rhs", matrix_json(rhs)},
                      {"rho_lhs", matrix_json(good_lhs)},
                      {"rho_rhs", matrix_json(good_rhs)}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "A = " << format_value<R>(a) << "\n"
                      << "B = " << format_value<R>(b) << "\n"
                      << "raw reading:  rho(A @ B) = " << format_value<R>(lhs) << "\n"
                      << "              rho(A) * rho(B) = " << format_value<R>(rhs) << "\n"
                      << "param reading: rho(A @ B) = rho(A) * rho(B) = "
                      << format_value<R>(good_lhs) << " (holds: "
                      << (good_lhs == good_rhs ? "yes" : "no") << ")\n";
        }
        return 0;
    }
    std::cerr << "error: unknown witness '" << opt.witness_name << "'\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"star-product matrix algebra calculator and property checker"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--backend", opt.backend, "Scalar backend")
            ->check(CLI::IsMember({"rational", "float"}))
            ->capture_default_str();
        sub->add_flag("--json", opt.as_json, "Emit JSON instead of text");
    };

    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
    eval_cmd->add_option("expression", opt.expression, "Expression to evaluate")->required();
    eval_cmd->add_option("--let", opt.lets, "Bind NAME=EXPR for use in the expression");
    add_common(eval_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "Run a seeded property suite");
    check_cmd->add_option("property", opt.property, "Property name")->required();
    check_cmd->add_option("--trials", opt.trials, "Number of random trials")
        ->capture_default_str();
    check_cmd->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    check_cmd->add_flag("--exhaustive", opt.exhaustive,
                        "Exhaustive mode (assoc2: all entries in {-1,0,1})");
    add_common(check_cmd);

    CLI::App* witness_cmd =
        app.add_subcommand("witness", "Print a verified witness construction");
    witness_cmd->add_option("name", opt.witness_name,
                            "One of: nonassoc3, zerodiv, rho-raw-reading")
        ->required();
    witness_cmd->add_option("matrix", opt.witness_arg, "Matrix argument (zerodiv only)");
    add_common(witness_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (eval_cmd->parsed())
            return opt.backend == "float" ? cmd_eval<FloatScalar>(opt) : cmd_eval<Rational>(opt);
        if (check_cmd->parsed()) return cmd_check(opt);
        return cmd_witness(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what();
        if (e.source_span)
            std::cerr << " (span " << e.source_span->begin << ".." << e.source_span->end << ")";
        std::cerr << "\n";
        return kExitEval;
    }
}
