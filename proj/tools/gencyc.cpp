#include "gencyc/builtin.hpp"
#include "gencyc/report.hpp"
#include "gencyc/scenario.hpp"
#include "gencyc/suite.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace gencyc;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

/// "builtin:<name>" loads a built-in document with default parameters; anything else is a path.
Scenario open_scenario(const std::string& where) {
    const std::string prefix = "builtin:";
    if (where.rfind(prefix, 0) == 0)
        return load_scenario(builtin_document(where.substr(prefix.size())));
    return load_scenario_file(where);
}

void print_trace(const Trace& trace) {
    for (std::size_t i = 0; i < trace.size(); ++i)
        std::cout << "  " << i + 1 << ". " << trace[i].rule << ": " << trace[i].formula
                  << (trace[i].detail.empty() ? "" : "\n       " + trace[i].detail) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gencyc: exact diamond and bulletL products of generalized cycle classes"};
    app.require_subcommand(1);

    bool json = false;
    bool trace_on = false;
    std::string expr;
    std::string scenario_path;
    std::string point;
    std::string builtin_name;
    int samples = 500;
    std::uint64_t seed = SuiteOptions{}.seed;
    int m = 3, n = 4, k = 2;

    auto* verify = app.add_subcommand("verify", "Run the built-in verification suite");
    verify->add_flag("--json", json, "Machine-readable output");
    verify->add_option("--samples", samples, "Random instances per ambient")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "Random seed");

    auto* eval = app.add_subcommand("eval", "Evaluate an expression in a scenario");
    eval->add_option("expr", expr, "Expression")->required();
    eval->add_option("--scenario", scenario_path, "Scenario file or builtin:<name>")->required();
    eval->add_flag("--trace", trace_on, "Show the derivation");
    eval->add_flag("--json", json, "Machine-readable output");

    auto* deg = app.add_subcommand("deg", "Degree of a class expression");
    deg->add_option("expr", expr, "Class expression")->required();
    deg->add_option("--scenario", scenario_path, "Scenario file or builtin:<name>")->required();
    deg->add_flag("--json", json, "Machine-readable output");

    auto* mult = app.add_subcommand("mult", "Multiplicities of a class expression at a marked point");
    mult->add_option("expr", expr, "Class expression")->required();
    mult->add_option("--point", point, "Marked point id")->required();
    mult->add_option("--scenario", scenario_path, "Scenario file or builtin:<name>")->required();
    mult->add_flag("--json", json, "Machine-readable output");

    auto* check = app.add_subcommand("check", "Check the expected values recorded in a scenario");
    check->add_option("--scenario", scenario_path, "Scenario file or builtin:<name>")->required();
    check->add_flag("--json", json, "Machine-readable output");

    auto* dump = app.add_subcommand("scenario", "Print a built-in scenario document");
    dump->add_option("name", builtin_name, "kokong, segre, blowup or planes")->required();
    dump->add_option("--m", m, "kokong parameter");
    dump->add_option("--n", n, "planes: ambient dimension");
    dump->add_option("--k", k, "planes: plane dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*verify) {
            const auto results = verify_suite({samples, seed});
            if (json)
                std::cout << suite_json(results).dump(2) << "\n";
            else
                std::cout << suite_text(results);
            return all_passed(results) ? kOk : kVerificationFailure;
        }
        if (*dump) {
            std::cout << builtin_document(builtin_name, m, n, k).dump(2) << "\n";
            return kOk;
        }

        const Scenario s = open_scenario(scenario_path);

        if (*check) {
            const auto results = check_expectations(s);
            bool ok = true;
            nlohmann::json out = nlohmann::json::array();
            for (const auto& r : results) {
                ok = ok && r.passed;
                if (json)
                    out.push_back({{"expr", r.expectation.expr}, {"passed", r.passed}, {"actual", r.actual},
                                   {"expected", r.expected}, {"error", r.error}});
                else
                    std::cout << (r.passed ? "PASS " : "FAIL ") << r.expectation.expr << " = "
                              << (r.error.empty() ? r.actual : "error: " + r.error)
                              << (r.passed ? "" : " (expected " + r.expected + ")") << "\n";
            }
            if (json)
                std::cout << nlohmann::json{{"scenario", s.name}, {"passed", ok}, {"checks", out}}.dump(2) << "\n";
            return ok ? kOk : kVerificationFailure;
        }

        Trace trace;
        if (*eval) {
            const Value v = evaluate(expr, s, trace_on ? &trace : nullptr);
            if (json) {
                nlohmann::json out = {{"scenario", s.name}, {"expr", expr}, {"result", value_json(s, v)}};
                if (trace_on)
                    out["trace"] = trace_json(trace);
                std::cout << out.dump(2) << "\n";
            } else {
                if (trace_on) {
                    std::cout << "derivation:\n";
                    print_trace(trace);
                }
                std::cout << value_text(s, v) << "\n";
            }
            return kOk;
        }

        const GCycleClass mu = evaluate_class(parse(expr), s);
        if (*deg) {
            const Integer d = deg_L(s.space(), mu);
            if (json)
                std::cout << nlohmann::json{{"expr", expr}, {"degree", decimal(d)}}.dump(2) << "\n";
            else
                std::cout << d << "\n";
            return kOk;
        }
        if (!s.space().has_point(point))
            throw ArgumentError("unknown marked point '" + point + "'");
        const MultMap mm = mult_at(s.space(), mu, point);
        if (json)
            std::cout << nlohmann::json{{"expr", expr}, {"point", point}, {"multiplicities", multiplicities_json(mm)},
                                        {"total", decimal(total(mm))}}
                             .dump(2)
                      << "\n";
        else
            std::cout << value_text(s, mm) << "\n";
        return kOk;
    } catch (const InvariantFailure& e) {
        std::cerr << "gencyc: invariant failure: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "gencyc: " << e.what() << "\n";
        return kInputError;
    }
}
