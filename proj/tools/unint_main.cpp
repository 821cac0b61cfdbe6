#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unint/closedforms.hpp"
#include "unint/errors.hpp"
#include "unint/integrals.hpp"
#include "unint/montecarlo.hpp"
#include "unint/tables.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitStatistical = 5;

unint::IntegralSpec parse_input(const std::string& input) {
    std::size_t first = input.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && input[first] == '{')
        return unint::IntegralSpec::from_json(nlohmann::json::parse(input));
    return unint::IntegralSpec::parse_text(input);
}

void print_value(const unint::RatFunc& value, bool json_only, bool latex_only) {
    if (latex_only) {
        std::cout << value.to_latex() << "\n";
        return;
    }
    if (json_only) {
        std::cout << value.to_json().dump() << "\n";
        return;
    }
    std::cout << value.to_string() << "\n";
    std::cout << value.to_json().dump() << "\n";
}

int run_eval(const std::string& input, bool json_only, bool latex_only) {
    unint::IntegralSpec spec = parse_input(input);
    unint::CanonicalResult result = unint::canonicalize(spec);
    if (std::holds_alternative<unint::ZeroIntegral>(result)) {
        std::cerr << std::get<unint::ZeroIntegral>(result).describe() << "\n";
        print_value(unint::RatFunc(), json_only, latex_only);
        return kExitOk;
    }
    print_value(unint::evaluate_gtm(std::get<unint::CanonicalIntegral>(result)), json_only,
                latex_only);
    return kExitOk;
}

int run_tables(int pmax, bool json_only) {
    if (pmax > unint::kDegreeCap)
        throw unint::DegreeTooLarge("tables cover p <= " + std::to_string(unint::kDegreeCap));
    if (json_only)
        std::cout << unint::tables_json(pmax).dump(2) << "\n";
    else
        std::cout << unint::render_all_tables(pmax) << "\n";
    return kExitOk;
}

int run_classify(const std::string& input, bool json_only) {
    unint::IntegralSpec spec = parse_input(input);
    unint::CanonicalResult result = unint::canonicalize(spec);
    if (std::holds_alternative<unint::ZeroIntegral>(result)) {
        const auto& zero = std::get<unint::ZeroIntegral>(result);
        if (json_only)
            std::cout << nlohmann::json{{"zero", true}, {"reason", zero.describe()}}.dump() << "\n";
        else
            std::cout << zero.describe() << "\n";
        return kExitOk;
    }
    const auto& ci = std::get<unint::CanonicalIntegral>(result);
    unint::ClassCounts counts = unint::class_counts(ci);
    std::string orderly = unint::to_string(unint::classify_orderly(ci));
    if (json_only) {
        nlohmann::json jcounts = nlohmann::json::object();
        for (const auto& [c, count] : counts.counts)
            if (count != 0) jcounts[c.to_string()] = count.get_str();
        std::cout << nlohmann::json{{"degree", ci.degree},
                                    {"I", ci.rows},
                                    {"J", ci.cols},
                                    {"JQ", ci.exchanged_cols},
                                    {"Q", ci.exchange.to_cycles()},
                                    {"orders",
                                     {{"G_I", ci.row_group.size()},
                                      {"G_J", ci.col_group.size()},
                                      {"G_JQ", ci.exchanged_col_group.size()}}},
                                    {"class", orderly},
                                    {"counts", jcounts}}
                         .dump()
                  << "\n";
        return kExitOk;
    }
    std::cout << "degree: " << ci.degree << "\n";
    auto seq = [](const std::vector<int>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i] + 1);
        return out;
    };
    std::cout << "I:  " << seq(ci.rows) << "\n";
    std::cout << "J:  " << seq(ci.cols) << "\n";
    std::cout << "JQ: " << seq(ci.exchanged_cols) << "\n";
    std::cout << "Q:  " << ci.exchange.to_cycles() << "\n";
    std::cout << "|G_I|=" << ci.row_group.size() << " |G_J|=" << ci.col_group.size()
              << " |G_JQ|=" << ci.exchanged_col_group.size() << "\n";
    std::cout << "orderly: " << orderly << "\n";
    std::cout << "N[c]:";
    for (const auto& [c, count] : counts.counts)
        if (count != 0) std::cout << " (" << c.to_string() << "):" << count.get_str();
    std::cout << "\n";
    return kExitOk;
}

int run_closed(const std::string& expr_text, bool json_only, bool latex_only, bool cross_check) {
    unint::ClosedExpr expr = unint::parse_closed_expr(expr_text);
    unint::RatFunc value = unint::evaluate_closed_expr(expr);
    print_value(value, json_only, latex_only);
    if (cross_check) {
        unint::RatFunc via_gtm = unint::evaluate_gtm(unint::spec_for_closed_expr(expr));
        if (!(via_gtm == value)) {
            std::cerr << "cross-check mismatch: closed form " << value.to_string()
                      << " vs group-theoretic " << via_gtm.to_string() << "\n";
            return kExitMismatch;
        }
        std::cout << "cross-check: ok\n";
    }
    return kExitOk;
}

std::vector<unint::IntegralSpec> suite_specs(const std::string& name) {
    using unint::Partition;
    std::vector<unint::IntegralSpec> specs;
    auto add_primitives = [&specs](int p) {
        auto classes = unint::partitions_of(p);
        std::reverse(classes.begin(), classes.end());
        for (const auto& c : classes) specs.push_back(unint::spec_for_primitive(c));
    };
    if (name == "table1") {
        for (int p = 1; p <= 3; ++p) add_primitives(p);
        return specs;
    }
    if (name == "paper") {
        for (int p = 1; p <= 3; ++p) add_primitives(p);
        // sigma: rows (b,b,a,a), columns (e,d,d,c), direct
        specs.push_back(unint::IntegralSpec::parse_text(
            "conj: 1,1; 1,2; 2,2; 2,3; plain: 1,1; 1,2; 2,2; 2,3"));
        specs.push_back(unint::spec_for_z(2, 1, 1));
        specs.push_back(unint::spec_for_branches(
            {{1, 2, 2, 1}, {1, 0, 0, 1}}));  // [Aa+2Ab][Aa]
        specs.push_back(unint::spec_for_branches(
            {{2, 2, 1, 1}, {1, 1, 1, 1}}));  // [Aa+Ab+Ba][Aa+Ab]
        specs.push_back(unint::IntegralSpec::parse_text("plain: 1,1"));  // vanishing
        return specs;
    }
    throw unint::ParseError("unknown suite '" + name + "'", 0);
}

int run_mc_check(const std::string& input, const std::string& suite, int n, std::uint64_t samples,
                 std::uint64_t seed, int jobs, double threshold) {
    std::vector<unint::IntegralSpec> specs;
    if (!suite.empty())
        specs = suite_specs(suite);
    else
        specs.push_back(parse_input(input));
    auto reports = unint::check_suite(specs, {n}, samples, seed, jobs, threshold);
    bool all_ok = true;
    for (const auto& report : reports) {
        std::cout << report.to_json().dump() << "\n";
        all_ok = all_ok && report.ok;
    }
    return all_ok ? kExitOk : kExitStatistical;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact monomial integrals over the unitary group U(n)"};
    app.require_subcommand(1);

    std::string input, expr_text, suite;
    bool json_only = false, latex_only = false, cross_check = false;
    int pmax = 3;
    int n = 3;
    int jobs = 1;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    double threshold = 5.0;

    auto* eval = app.add_subcommand("eval", "Evaluate a monomial integral exactly");
    eval->add_option("input", input, "integral (text grammar or JSON)")->required();
    eval->add_flag("--json", json_only, "print only the JSON value");
    eval->add_flag("--latex", latex_only, "print only the LaTeX value");

    auto* tables = app.add_subcommand("tables", "Reproduce the value and character tables");
    tables->add_option("--pmax", pmax, "largest degree");
    tables->add_flag("--json", json_only, "JSON output");

    auto* classify = app.add_subcommand("classify", "Canonical form and orderliness");
    classify->add_option("input", input, "integral (text grammar or JSON)")->required();
    classify->add_flag("--json", json_only, "JSON output");

    auto* closed = app.add_subcommand("closed", "Evaluate a closed-form family");
    closed->add_option("expr", expr_text, "fan m | z m1 m2 m3 | stack p1 p2 .. | [Aa+2Ab][Aa]")
        ->required();
    closed->add_flag("--json", json_only, "print only the JSON value");
    closed->add_flag("--latex", latex_only, "print only the LaTeX value");
    closed->add_flag("--cross-check", cross_check,
                     "re-derive through the group-theoretic engine and compare");

    auto* mc = app.add_subcommand("mc-check", "Monte-Carlo verification at fixed n");
    mc->add_option("input", input, "integral (text grammar or JSON)");
    mc->add_option("--suite", suite, "built-in suite: table1 | paper");
    mc->add_option("--n", n, "matrix dimension")->required();
    mc->add_option("--samples", samples, "number of Haar samples");
    mc->add_option("--seed", seed, "master seed (64-bit)");
    mc->add_option("--jobs", jobs, "worker threads");
    mc->add_option("--threshold", threshold, "|z| acceptance threshold");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return run_eval(input, json_only, latex_only);
        if (tables->parsed()) return run_tables(pmax, json_only);
        if (classify->parsed()) return run_classify(input, json_only);
        if (closed->parsed()) return run_closed(expr_text, json_only, latex_only, cross_check);
        if (mc->parsed()) {
            if (suite.empty() && input.empty()) {
                std::cerr << "mc-check needs an integral or --suite\n";
                return kExitParse;
            }
            if (jobs < 1) jobs = static_cast<int>(std::thread::hardware_concurrency());
            return run_mc_check(input, suite, n, samples, seed, jobs, threshold);
        }
    } catch (const unint::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const unint::IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const unint::DegreeTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
