#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "daehee/cli.hpp"
#include "daehee/memo.hpp"
#include "test_support.hpp"

using namespace daehee;
using testing_support::R;

namespace {

struct Run {
    int code;
    std::string out;
};

/// Runs the CLI with `args`, capturing stdout; stderr is discarded.
Run run(const std::string& args) {
    const std::string cmd = std::string(DAEHEE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, Poly) {
    EXPECT_EQ(run("poly daehee1 --k 2").out, "x^2 - 2x + 2/3\n");
    EXPECT_EQ(run("poly daehee1 --k 3 --format latex").out, "x^3 - \\tfrac{9}{2}x^2 + \\tfrac{11}{2}x - \\tfrac{3}{2}\n");
    EXPECT_EQ(run("poly hyperharmonic_poly --k 3 --format json").out, "{\"var\":\"x\",\"coeffs\":[\"1/3\",\"1\",\"1/2\"]}\n");
    EXPECT_EQ(run("poly daehee_order_r --k 2 --r 2 --format json").out,
              "{\"var\":\"x\",\"coeffs\":[\"11/6\",\"-3\",\"1\"]}\n");
}

TEST(Cli, PolyJsonRoundTrips) {
    for (const char* fam : {"bernoulli_poly", "power_sum", "daehee1", "daehee2", "hyperharmonic_poly", "harmonic_poly"}) {
        for (int k = 0; k <= 10; k += 5) {
            const auto r = run(std::string("poly ") + fam + " --k " + std::to_string(k) + " --format json");
            ASSERT_EQ(r.code, 0) << fam;
            const Poly p = poly_from_json(r.out);
            const Poly expected = cli::family_poly(family_from_string(fam), k, std::nullopt);
            EXPECT_EQ(p, expected) << fam << " " << k;
        }
    }
}

TEST(Cli, Number) {
    EXPECT_EQ(run("number bernoulli 2").out, "1/6\n");
    EXPECT_EQ(run("number hyperharmonic 3 2").out, "13/3\n");
    EXPECT_EQ(run("number daehee2 3").out, "-1/2\n");
    EXPECT_EQ(run("number polybernoulli_neg 3 3").out, "230\n");
    EXPECT_EQ(run("number norlund_neg 2 2").out, "11/12\n");
    EXPECT_EQ(run("number harmonic 4 --format json").out, "{\"family\":\"harmonic\",\"args\":[4],\"value\":\"25/12\"}\n");
    EXPECT_EQ(run("number daehee1 3 --format latex").out, "-\\tfrac{3}{2}\n");
}

TEST(Cli, Table) {
    const auto csv = run("table s2 --rows 5 --format csv");
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out, "1\n0,1\n0,1,1\n0,1,3,1\n0,1,7,6,1\n");
    EXPECT_EQ(run("table rs2 --rows 3 --r 2 --format json").out, "[[\"1\"],[\"2\",\"1\"],[\"4\",\"5\",\"1\"]]\n");
    EXPECT_EQ(run("table s1 --rows 4").out, "1\n0 1\n0 1 1\n0 2 3 1\n");
}

TEST(Cli, Series) {
    EXPECT_EQ(run("series gf1 --x 0 --order 3 --norm egf --format json").out, "[\"1\",\"-1/2\",\"2/3\",\"-3/2\"]\n");
    EXPECT_EQ(run("series gfh --order 3").out, "0\n1\n3/2\n11/6\n");
    EXPECT_EQ(run("series gfhp --x 2 --order 3 --format json").out, "[\"0\",\"1\",\"5/2\",\"13/3\"]\n");
    EXPECT_EQ(run("series stirl2 --k 2 --order 4 --norm egf").out, "0\n0\n1\n3\n7\n");
    EXPECT_EQ(run("series norlund_neg --r 2 --order 3 --format json").out, "[\"1\",\"-1\",\"11/12\",\"-5/6\"]\n");
}

TEST(Cli, Verify) {
    const auto ok = run("verify core --max-k 6 --max-r 1 --x 0 --x 1");
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("suite core: PASS"), std::string::npos);
    const auto js = run("verify harmonicpoly --max-k 4 --max-r 1 --x 1/3 --format json");
    EXPECT_EQ(js.code, 0);
    const auto parsed = nlohmann::ordered_json::parse(js.out);
    EXPECT_EQ(parsed["suite"], "harmonicpoly");
    EXPECT_EQ(parsed["status"], "pass");
    EXPECT_FALSE(parsed["checks"].empty());
}

TEST(Cli, UsageErrorsExitWithTwo) {
    for (const char* args : {"poly daehee1 --k -1", "poly daehee_order_r --k 2", "poly nope --k 2", "number bernoulli",
                             "number bernoulli 1 2", "number daehee1_poly 2", "table rs2 --rows 3", "table s3 --rows 2",
                             "series gf1 --order 3", "series gfh --x 1 --order 3", "series nope", "verify bogus",
                             "verify core --max-k -1", "verify core --x 1/0", "poly daehee1 --k 2 --format csv",
                             "poly daehee1 --k x", "frobnicate", "poly daehee1 --k 2 --format yaml"})
        EXPECT_EQ(run(args).code, 2) << args;
}

TEST(Cli, HelpExitsZero) {
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("verify --help").code, 0);
}

TEST(Cli, OutputIsByteDeterministic) {
    for (const char* args : {"poly daehee2 --k 9 --format latex", "table rs1 --rows 12 --r 3 --format csv",
                             "series gfhap --x -5/2 --order 15 --format json", "number gen_hyperharmonic 6 -2 3"}) {
        const auto a = run(args);
        const auto b = run(args);
        EXPECT_EQ(a.code, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_FALSE(a.out.empty()) << args;
    }
}

TEST(Cli, SeriesOrderFromEnvironment) {
    ::setenv("DAEHEE_SERIES_ORDER", "5", 1);
    EXPECT_EQ(cli::default_series_order(), 5);
    EXPECT_EQ(run("series gfh --format json").out, "[\"0\",\"1\",\"3/2\",\"11/6\",\"25/12\",\"137/60\"]\n");
    ::setenv("DAEHEE_SERIES_ORDER", "five", 1);
    EXPECT_THROW(cli::default_series_order(), cli::usage_error);
    EXPECT_EQ(run("series gfh").code, 2);
    ::unsetenv("DAEHEE_SERIES_ORDER");
    EXPECT_EQ(cli::default_series_order(), verify::kDefaultSeriesOrder);
}

TEST(Cli, VerifyExitCodeOneOnFailure) {
    cli::VerifyArgs args;
    args.suite = "core";
    args.max_k = 6;
    args.max_r = 1;
    args.x_samples = {0};
    EXPECT_EQ(cli::cmd_verify(args, cli::OutputFormat::PLAIN).exit_code, 0);
    fault::ScopedCorruption c(FaultTable::daehee1, 2, R("1/2"));
    const auto outcome = cli::cmd_verify(args, cli::OutputFormat::PLAIN);
    EXPECT_EQ(outcome.exit_code, 1);
    EXPECT_NE(outcome.text.find("FAIL THM1_D1"), std::string::npos);
    EXPECT_NE(outcome.text.find("at k=2"), std::string::npos);
}
