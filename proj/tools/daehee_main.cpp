// Command-line front end: poly, number, table, series, verify.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "daehee/cli.hpp"

namespace {

using daehee::Rat;
using namespace daehee::cli;

std::vector<Rat> parse_samples(const std::vector<std::string>& raw) {
    std::vector<Rat> out;
    for (const auto& s : raw) {
        try {
            out.push_back(Rat::parse(s));
        } catch (const std::exception&) {
            throw usage_error("not a rational number: " + s);
        }
    }
    return out;
}

std::optional<int> opt_int(CLI::Option* opt, int value) {
    if (opt->count() == 0) return std::nullopt;
    return value;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Daehee, Bernoulli, Stirling and hyperharmonic computations with identity verification"};
    app.require_subcommand(1);
    app.footer("Environment:\n  DAEHEE_SERIES_ORDER  default series order for `series` and `verify` (30 if unset)\n\n"
               "Exit status: 0 success / all checks passed, 1 a check failed, 2 usage error.");

    std::string format = "plain";
    bool verbose = false;
    std::string seed;
    auto common = [&](CLI::App* sub, const std::string& formats) {
        sub->add_option("--format", format, "Output format: " + formats)->capture_default_str();
        sub->add_option("--seed", seed, "Reserved; every computation is deterministic");
        sub->add_flag("--verbose,-v", verbose, "Per-check progress on stderr (verify)");
    };

    std::string family;
    int k = 0;
    int r = 0;

    auto* poly = app.add_subcommand("poly", "Print a polynomial family member");
    poly->add_option("family", family, "bernoulli_poly, power_sum, daehee1, daehee2, daehee_order_r, "
                                       "hyperharmonic_poly, harmonic_poly")->required();
    poly->add_option("--k", k, "Index k")->required();
    auto* poly_r = poly->add_option("--r", r, "Order r (daehee_order_r only)");
    common(poly, "plain, json, latex");

    std::vector<long> number_args;
    auto* number = app.add_subcommand("number", "Print a number family member");
    number->add_option("family", family, "bernoulli, daehee1, daehee2, norlund_neg (r j), harmonic, "
                                         "hyperharmonic (index order), hyperharmonic_neg (index order), "
                                         "gen_hyperharmonic (n p r), polybernoulli_neg (j k)")->required();
    number->add_option("args", number_args, "Integer arguments")->allow_extra_args();
    common(number, "plain, json, latex");

    std::string kind;
    int rows = 0;
    auto* table = app.add_subcommand("table", "Print a Stirling or r-Stirling triangle");
    table->add_option("kind", kind, "s1, s2, rs1, rs2 (rs tables use the shifted index convention)")->required();
    table->add_option("--rows", rows, "Number of rows")->required();
    auto* table_r = table->add_option("--r", r, "r for rs1/rs2");
    common(table, "plain, csv, json");

    SeriesArgs sargs;
    std::string x_single;
    std::string norm = "ordinary";
    std::optional<int> order_flag;
    int order_value = 0;
    auto* series = app.add_subcommand("series", "Expand a generating function");
    series->add_option("gf", sargs.gf, "gf1, gf2, gfh, gfhp, gfhap, stirl1, stirl2, rstirl1, rstirl2, norlund_neg, "
                                       "bernoulli, daehee_order")->required();
    auto* series_x = series->add_option("--x", x_single, "Rational parameter x");
    auto* series_k = series->add_option("--k", k, "Column k (Stirling EGFs)");
    auto* series_r = series->add_option("--r", r, "Parameter r");
    auto* series_order = series->add_option("--order", order_value, "Truncation order");
    series->add_option("--norm", norm, "ordinary or egf")->capture_default_str();
    common(series, "plain, json");

    VerifyArgs vargs;
    std::vector<std::string> x_raw;
    auto* verify = app.add_subcommand("verify", "Run an identity suite");
    verify->add_option("suite", vargs.suite, "all, core, hyperharmonic, boyadzhiev, harmonicpoly, rstirling, series")
        ->capture_default_str();
    verify->add_option("--max-k", vargs.max_k, "Largest k")->capture_default_str();
    verify->add_option("--max-r", vargs.max_r, "Largest r")->capture_default_str();
    verify->add_option("--x", x_raw, "Rational sample (repeatable); defaults to -3 -5/2 -1 0 1/3 1 2 7/2");
    auto* verify_order = verify->add_option("--order", order_value, "Series order");
    verify->add_flag("--fail-fast", vargs.fail_fast, "Stop after the first failing check");
    verify->add_option("--jobs,-j", vargs.jobs, "Worker threads")->capture_default_str();
    common(verify, "plain, json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const OutputFormat fmt = format_from_string(format);
        if (poly->parsed()) {
            std::cout << cmd_poly(family, k, opt_int(poly_r, r), fmt);
        } else if (number->parsed()) {
            std::cout << cmd_number(family, number_args, fmt);
        } else if (table->parsed()) {
            std::cout << cmd_table(kind, rows, opt_int(table_r, r), fmt);
        } else if (series->parsed()) {
            if (series_x->count()) sargs.x = parse_samples({x_single}).front();
            sargs.k = opt_int(series_k, k);
            sargs.r = opt_int(series_r, r);
            sargs.order = series_order->count() ? order_value : default_series_order();
            sargs.norm = normalization_from_string(norm);
            std::cout << cmd_series(sargs, fmt);
        } else if (verify->parsed()) {
            if (!x_raw.empty()) vargs.x_samples = parse_samples(x_raw);
            vargs.order = verify_order->count() ? order_value : default_series_order();
            const auto outcome = cmd_verify(vargs, fmt, verbose ? &std::cerr : nullptr);
            std::cout << outcome.text;
            return outcome.exit_code;
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const daehee::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const daehee::lookup_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
