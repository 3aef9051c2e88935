/**
 * @file cli.hpp
 * @brief Command implementations behind the `daehee` executable.
 *
 * Each command returns the rendered text. Bad arguments raise usage_error,
 * which the executable maps to exit status 2.
 */
#pragma once

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "format.hpp"
#include "sequences.hpp"
#include "series.hpp"
#include "stirling.hpp"
#include "verify/report.hpp"
#include "verify/runner.hpp"

namespace daehee::cli {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { PLAIN, JSON, CSV, LATEX };

inline OutputFormat format_from_string(std::string_view s) {
    if (s == "plain") return OutputFormat::PLAIN;
    if (s == "json") return OutputFormat::JSON;
    if (s == "csv") return OutputFormat::CSV;
    if (s == "latex") return OutputFormat::LATEX;
    throw usage_error("unknown format: " + std::string(s));
}

inline std::string_view to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::PLAIN: return "plain";
        case OutputFormat::JSON: return "json";
        case OutputFormat::CSV: return "csv";
        case OutputFormat::LATEX: return "latex";
    }
    return "?";
}

/// Series order from DAEHEE_SERIES_ORDER, or the built-in default.
inline int default_series_order() {
    if (const char* env = std::getenv("DAEHEE_SERIES_ORDER")) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(env, &used);
            if (used == std::string_view(env).size() && v >= 0) return v;
        } catch (const std::exception&) {
        }
        throw usage_error("DAEHEE_SERIES_ORDER must be a nonnegative integer");
    }
    return verify::kDefaultSeriesOrder;
}

namespace detail {

inline std::string unsupported(std::string_view what, OutputFormat f) {
    return std::string(what) + " cannot be rendered as " + std::string(to_string(f));
}

inline FamilyId lookup_family(std::string_view name) {
    try {
        return family_from_string(name);
    } catch (const lookup_error& e) {
        throw usage_error(e.what());
    }
}

/// Number-command aliases: "daehee1"/"daehee2" mean the Daehee numbers.
inline FamilyId number_family(std::string_view name) {
    if (name == "daehee1") return FamilyId::DAEHEE1_NUM;
    if (name == "daehee2") return FamilyId::DAEHEE2_NUM;
    const FamilyId id = lookup_family(name);
    if (family_info(id).is_poly) throw usage_error(std::string(name) + " is a polynomial family; use `poly`");
    return id;
}

inline int narrow(long v) {
    if (v < -100000 || v > 100000) throw usage_error("argument out of range: " + std::to_string(v));
    return static_cast<int>(v);
}

}  // namespace detail

inline Poly family_poly(FamilyId id, int k, std::optional<int> r) {
    const bool needs_r = id == FamilyId::DAEHEE_ORDER_R;
    if (needs_r && !r) throw usage_error("daehee_order_r requires --r");
    if (!needs_r && r) throw usage_error(std::string(to_string(id)) + " takes no --r");
    if (k < 0) throw usage_error("k must be nonnegative");
    if (needs_r && *r < 1) throw usage_error("r must be at least 1");
    switch (id) {
        case FamilyId::BERNOULLI_POLY: return bernoulli_poly(k);
        case FamilyId::POWER_SUM: return power_sum_poly(k);
        case FamilyId::DAEHEE1: return daehee_poly(k);
        case FamilyId::DAEHEE2: return daehee2_poly(k);
        case FamilyId::DAEHEE_ORDER_R: return daehee_order_r_poly(k, *r);
        case FamilyId::HYPERHARMONIC_POLY: return hyperharmonic_poly(k);
        case FamilyId::HARMONIC_POLY: return harmonic_poly(k);
        default: throw usage_error(std::string(to_string(id)) + " is not a polynomial family; use `number`");
    }
}

inline std::string cmd_poly(std::string_view family, int k, std::optional<int> r, OutputFormat format) {
    const Poly p = family_poly(detail::lookup_family(family), k, r);
    switch (format) {
        case OutputFormat::PLAIN: return to_plain(p) + "\n";
        case OutputFormat::LATEX: return to_latex(p) + "\n";
        case OutputFormat::JSON: return poly_to_json(p).dump() + "\n";
        case OutputFormat::CSV: break;
    }
    throw usage_error(detail::unsupported("a polynomial", format));
}

inline Rat family_number(FamilyId id, const std::vector<long>& args) {
    const auto& info = family_info(id);
    if (static_cast<int>(args.size()) != info.arity)
        throw usage_error(std::string(info.name) + " takes " + std::to_string(info.arity) + " argument(s), got " +
                          std::to_string(args.size()));
    std::vector<int> a;
    for (long v : args) a.push_back(detail::narrow(v));
    auto nonneg = [](int v, const char* what) {
        if (v < 0) throw usage_error(std::string(what) + " must be nonnegative");
        return v;
    };
    switch (id) {
        case FamilyId::BERNOULLI_NUM: return bernoulli_number(nonneg(a[0], "k"));
        case FamilyId::DAEHEE1_NUM: return daehee_number(nonneg(a[0], "k"));
        case FamilyId::DAEHEE2_NUM: return daehee2_number(nonneg(a[0], "k"));
        case FamilyId::HARMONIC_NUM: return harmonic_number(nonneg(a[0], "n"));
        case FamilyId::HYPERHARMONIC_NUM: return hyperharmonic_number(a[0], a[1]);
        case FamilyId::HYPERHARMONIC_NEG:
            if (a[0] < 1 || a[1] < 1) throw usage_error("hyperharmonic_neg takes index >= 1 and order >= 1");
            return hyperharmonic_neg(a[0], a[1]);
        case FamilyId::GEN_HYPERHARMONIC:
            if (a[0] < 1 || a[2] < 0) throw usage_error("gen_hyperharmonic takes n >= 1, p, r >= 0");
            return gen_hyperharmonic(a[0], a[1], a[2]);
        case FamilyId::POLYBERNOULLI_NEG: return polybernoulli_neg(nonneg(a[0], "j"), nonneg(a[1], "k"));
        case FamilyId::NORLUND_NEG: {
            if (a[0] < 1) throw usage_error("norlund_neg takes r >= 1");
            const int j = nonneg(a[1], "j");
            return norlund_neg(a[0], j)[static_cast<std::size_t>(j)];
        }
        default: break;
    }
    throw usage_error(std::string(info.name) + " is not a number family");
}

inline std::string cmd_number(std::string_view family, const std::vector<long>& args, OutputFormat format) {
    const FamilyId id = detail::number_family(family);
    const Rat v = family_number(id, args);
    switch (format) {
        case OutputFormat::PLAIN: return v.to_string() + "\n";
        case OutputFormat::LATEX: return to_latex(v) + "\n";
        case OutputFormat::JSON: {
            nlohmann::ordered_json j;
            j["family"] = std::string(to_string(id));
            j["args"] = args;
            j["value"] = v.to_string();
            return j.dump() + "\n";
        }
        case OutputFormat::CSV: break;
    }
    throw usage_error(detail::unsupported("a number", format));
}

/// Rows 0..rows-1 of s1, s2 (unsigned) or, in the shifted convention, rs1/rs2.
inline IntRows stirling_rows(std::string_view kind, int rows, std::optional<int> r) {
    if (rows < 1) throw usage_error("rows must be at least 1");
    const bool shifted = kind == "rs1" || kind == "rs2";
    if (!shifted && kind != "s1" && kind != "s2") throw usage_error("unknown table kind: " + std::string(kind));
    if (shifted && !r) throw usage_error(std::string(kind) + " requires --r");
    if (!shifted && r) throw usage_error(std::string(kind) + " takes no --r");
    if (r && *r < 0) throw usage_error("r must be nonnegative");
    const StirlingKind sk = (kind == "s1" || kind == "rs1") ? StirlingKind::first : StirlingKind::second;
    IntRows out;
    for (int n = 0; n < rows; ++n) {
        std::vector<BigInt> row;
        for (int k = 0; k <= n; ++k) {
            if (shifted)
                row.push_back(sk == StirlingKind::first ? rstirling1(n, k, *r) : rstirling2(n, k, *r));
            else
                row.push_back(sk == StirlingKind::first ? stirling1_unsigned(n, k) : stirling2(n, k));
        }
        out.push_back(std::move(row));
    }
    return out;
}

inline std::string cmd_table(std::string_view kind, int rows, std::optional<int> r, OutputFormat format) {
    const IntRows t = stirling_rows(kind, rows, r);
    switch (format) {
        case OutputFormat::PLAIN: return rows_to_plain(t);
        case OutputFormat::CSV: return rows_to_csv(t);
        case OutputFormat::JSON: return rows_to_json(t).dump() + "\n";
        case OutputFormat::LATEX: break;
    }
    throw usage_error(detail::unsupported("a table", format));
}

enum class Normalization { ORDINARY, EGF };

inline Normalization normalization_from_string(std::string_view s) {
    if (s == "ordinary") return Normalization::ORDINARY;
    if (s == "egf") return Normalization::EGF;
    throw usage_error("unknown normalization: " + std::string(s));
}

struct SeriesArgs {
    std::string gf;
    std::optional<Rat> x;
    std::optional<int> k;
    std::optional<int> r;
    int order = verify::kDefaultSeriesOrder;
    Normalization norm = Normalization::ORDINARY;
};

inline constexpr std::string_view kSeriesNames[] = {"gf1",     "gf2",     "gfh",         "gfhp",      "gfhap",       "stirl1",
                                                    "stirl2",  "rstirl1", "rstirl2",     "norlund_neg", "bernoulli", "daehee_order"};

inline GfSelector series_selector(const SeriesArgs& a) {
    auto need_x = [&] {
        if (!a.x) throw usage_error(a.gf + " requires --x");
        return *a.x;
    };
    auto need_int = [&](const std::optional<int>& v, const char* flag, int min) {
        if (!v) throw usage_error(a.gf + " requires " + flag);
        if (*v < min) throw usage_error(std::string(flag) + " must be at least " + std::to_string(min));
        return *v;
    };
    const std::string& g = a.gf;
    const bool takes_x = g == "gf1" || g == "gf2" || g == "gfhp" || g == "gfhap" || g == "bernoulli" || g == "daehee_order";
    const bool takes_k = g == "stirl1" || g == "stirl2" || g == "rstirl1" || g == "rstirl2";
    const bool takes_r = g == "rstirl1" || g == "rstirl2" || g == "norlund_neg" || g == "daehee_order";
    if (a.x && !takes_x) throw usage_error(g + " takes no --x");
    if (a.k && !takes_k) throw usage_error(g + " takes no --k");
    if (a.r && !takes_r) throw usage_error(g + " takes no --r");
    if (g == "gf1") return gf::Daehee1{need_x()};
    if (g == "gf2") return gf::Daehee2{need_x()};
    if (g == "gfh") return gf::Harmonic{};
    if (g == "gfhp") return gf::Hyperharmonic{need_x()};
    if (g == "gfhap") return gf::HarmonicPoly{need_x()};
    if (g == "stirl1") return gf::Stirling1{need_int(a.k, "--k", 0)};
    if (g == "stirl2") return gf::Stirling2{need_int(a.k, "--k", 0)};
    if (g == "rstirl1") return gf::RStirling1{need_int(a.k, "--k", 0), need_int(a.r, "--r", 0)};
    if (g == "rstirl2") return gf::RStirling2{need_int(a.k, "--k", 0), need_int(a.r, "--r", 0)};
    if (g == "norlund_neg") return gf::NorlundNeg{need_int(a.r, "--r", 1)};
    if (g == "bernoulli") return gf::Bernoulli{need_x()};
    if (g == "daehee_order") return gf::DaeheeOrder{need_x(), need_int(a.r, "--r", 1)};
    throw usage_error("unknown generating function: " + g);
}

inline std::vector<Rat> series_coefficients(const SeriesArgs& a) {
    if (a.order < 0) throw usage_error("order must be nonnegative");
    const TruncSeries s = gf_build(series_selector(a), a.order);
    std::vector<Rat> out;
    for (int n = 0; n <= a.order; ++n) out.push_back(a.norm == Normalization::EGF ? egf_coeff(s, n) : s[n]);
    return out;
}

inline std::string cmd_series(const SeriesArgs& a, OutputFormat format) {
    const auto coeffs = series_coefficients(a);
    switch (format) {
        case OutputFormat::PLAIN: {
            std::string out;
            for (const auto& c : coeffs) out += c.to_string() + "\n";
            return out;
        }
        case OutputFormat::JSON: return rats_to_json(coeffs).dump() + "\n";
        case OutputFormat::CSV:
        case OutputFormat::LATEX: break;
    }
    throw usage_error(detail::unsupported("a series", format));
}

struct VerifyArgs {
    std::string suite = "all";
    int max_k = 12;
    int max_r = 4;
    std::vector<Rat> x_samples = verify::default_x_samples();
    int order = verify::kDefaultSeriesOrder;
    bool fail_fast = false;
    int jobs = 1;
};

struct VerifyOutcome {
    std::string text;
    int exit_code = 0;
};

/// Runs a suite. `progress`, when set, receives one line per finished check.
inline VerifyOutcome cmd_verify(const VerifyArgs& a, OutputFormat format, std::ostream* progress = nullptr) {
    if (format != OutputFormat::PLAIN && format != OutputFormat::JSON)
        throw usage_error(detail::unsupported("a report", format));
    verify::Suite suite;
    try {
        suite = verify::suite_from_string(a.suite);
    } catch (const lookup_error& e) {
        throw usage_error(e.what());
    }
    verify::RunOptions opts;
    opts.jobs = a.jobs;
    opts.fail_fast = a.fail_fast;
    opts.order = a.order;
    if (progress) opts.progress = [progress](const verify::CheckResult& r) { *progress << verify::render_line(r) << '\n'; };
    verify::SuiteReport report;
    try {
        report = verify::run_suite(suite, a.max_k, a.max_r, a.x_samples, opts);
    } catch (const domain_error& e) {
        throw usage_error(e.what());
    }
    VerifyOutcome out;
    out.text = format == OutputFormat::JSON ? verify::to_json(report).dump(2) + "\n" : verify::render_plain(report);
    out.exit_code = report.passed() ? 0 : 1;
    return out;
}

}  // namespace daehee::cli
