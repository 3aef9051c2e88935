#include <gtest/gtest.h>

#include <set>
#include <string>

#include "daehee/memo.hpp"
#include "daehee/verify/catalog.hpp"
#include "daehee/verify/report.hpp"
#include "daehee/verify/runner.hpp"
#include "test_support.hpp"

using namespace daehee;
using namespace daehee::verify;
using testing_support::R;

namespace {

std::string param(const CheckResult& r, const std::string& name) {
    if (!r.counterexample) return "";
    for (const auto& p : r.counterexample->params)
        if (p.name == name) return p.value;
    return "";
}

/// Runs `id` at small ranges and expects a failure.
void expect_detects(const char* id, int max_k = 8, int max_r = 3) {
    Overrides o;
    o.max_k = max_k;
    o.max_r = max_r;
    o.x_samples = std::vector<Rat>{0, 1, R("-5/2")};
    o.order = 12;
    const auto r = run_identity(id, o);
    EXPECT_FALSE(r.passed) << id << " did not notice the corrupted entry";
    EXPECT_TRUE(r.counterexample.has_value()) << id;
}

}  // namespace

TEST(Catalog, IdsAreUniqueAndDescribed) {
    std::set<std::string> ids;
    for (const auto& c : list_identities()) {
        EXPECT_TRUE(ids.insert(c.id).second) << "duplicate id " << c.id;
        EXPECT_FALSE(c.description.empty()) << c.id;
        EXPECT_NE(c.suite, Suite::ALL) << c.id;
        EXPECT_TRUE(static_cast<bool>(c.body)) << c.id;
    }
    EXPECT_GE(ids.size(), 80u);
}

TEST(Catalog, ContainsEveryFamilyOfIdentities) {
    for (const char* id : {"ORTH_S1S2", "THM1_D1", "THM1_D2", "INV_D1", "INV_D2", "REL", "RES11", "INTEGRAL", "FRAC", "DIL",
                           "CERE1", "BOYA1", "WANG", "HH_CLOSED", "HH1", "CHEON33", "HYPER_R", "RSTIR_EGF", "SGEN1", "BENYI",
                           "FINAL", "SER_GF1", "SER_RING"})
        EXPECT_NO_THROW(find_identity(id)) << id;
}

TEST(Catalog, SuitesPartitionTheCatalog) {
    std::size_t total = 0;
    for (const auto s : {Suite::CORE, Suite::HYPERHARMONIC, Suite::BOYADZHIEV, Suite::HARMONICPOLY, Suite::RSTIRLING,
                         Suite::SERIES}) {
        const auto checks = suite_checks(s);
        EXPECT_FALSE(checks.empty()) << to_string(s);
        for (const auto* c : checks) EXPECT_EQ(c->suite, s);
        total += checks.size();
    }
    EXPECT_EQ(total, list_identities().size());
    EXPECT_EQ(suite_checks(Suite::ALL).size(), list_identities().size());
}

TEST(Catalog, SuiteNames) {
    EXPECT_EQ(suite_from_string("core"), Suite::CORE);
    EXPECT_EQ(suite_from_string("RStirling"), Suite::RSTIRLING);
    EXPECT_EQ(to_string(Suite::SERIES), "series");
    EXPECT_THROW(suite_from_string("bogus"), lookup_error);
}

TEST(Catalog, RunIdentityAppliesOverrides) {
    const auto full = run_identity("THM1_D1");
    EXPECT_TRUE(full.passed);
    Overrides o;
    o.max_k = 6;
    const auto small = run_identity("THM1_D1", o);
    EXPECT_TRUE(small.passed);
    EXPECT_EQ(small.trials, 7);
    EXPECT_GT(full.trials, small.trials);
    EXPECT_FALSE(small.counterexample.has_value());
}

TEST(Catalog, Errors) {
    EXPECT_THROW(run_identity("NOT_AN_ID"), lookup_error);
    Overrides bad_k;
    bad_k.max_k = -1;
    EXPECT_THROW(run_identity("THM1_D1", bad_k), domain_error);
    Overrides bad_x;
    bad_x.x_samples = std::vector<Rat>{};
    EXPECT_THROW(run_identity("SER_GF1", bad_x), domain_error);
    EXPECT_THROW(run_suite(Suite::CORE, 4, -1, {0}), domain_error);
    EXPECT_THROW(run_suite(Suite::CORE, 4, 1, {}), domain_error);
}

TEST(Runner, CoreAtTheSmallestRange) {
    const auto report = run_suite(Suite::CORE, 0, 1, {0});
    EXPECT_TRUE(report.passed()) << render_plain(report);
    EXPECT_EQ(report.suite, "core");
    EXPECT_EQ(report.checks.size(), suite_checks(Suite::CORE).size());
}

TEST(Runner, SeriesSuiteOnMixedSamples) {
    RunOptions opts;
    opts.order = 10;
    const auto report = run_suite(Suite::SERIES, 8, 3, {0, 1, -2, R("1/3")}, opts);
    EXPECT_TRUE(report.passed()) << render_plain(report);
    for (const auto& c : report.checks) EXPECT_GT(c.trials, 0) << c.id;
}

TEST(Runner, EverySuitePassesAtModerateRanges) {
    RunOptions opts;
    opts.jobs = 4;
    opts.order = 12;
    const auto report = run_suite(Suite::ALL, 9, 3, {R("-5/2"), 0, R("1/3"), 2}, opts);
    EXPECT_TRUE(report.passed()) << render_plain(report);
    EXPECT_EQ(report.checks.size(), list_identities().size());
}

TEST(Runner, ParallelMatchesSerial) {
    RunOptions serial;
    serial.order = 8;
    RunOptions parallel = serial;
    parallel.jobs = 6;
    const auto a = run_suite(Suite::ALL, 6, 2, {0, R("7/2")}, serial);
    const auto b = run_suite(Suite::ALL, 6, 2, {0, R("7/2")}, parallel);
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        EXPECT_EQ(a.checks[i].id, b.checks[i].id);
        EXPECT_EQ(a.checks[i].passed, b.checks[i].passed);
        EXPECT_EQ(a.checks[i].trials, b.checks[i].trials);
    }
}

TEST(Runner, ProgressCallbackSeesEveryCheck) {
    RunOptions opts;
    opts.jobs = 3;
    opts.order = 6;
    std::set<std::string> seen;
    opts.progress = [&](const CheckResult& r) { seen.insert(r.id); };
    const auto report = run_suite(Suite::HARMONICPOLY, 5, 2, {0}, opts);
    EXPECT_EQ(seen.size(), report.checks.size());
}

TEST(FaultInjection, CorruptedDaeheeIsReportedAtThatIndex) {
    fault::ScopedCorruption c(FaultTable::daehee1, 3, R("1/5"));
    Overrides o;
    o.max_k = 8;
    const auto r = run_identity("THM1_D1", o);
    ASSERT_FALSE(r.passed);
    EXPECT_EQ(param(r, "k"), "3");
    EXPECT_EQ(r.counterexample->lhs, "[-13/10, 11/2, -9/2, 1]");
    EXPECT_EQ(r.counterexample->rhs, "[-3/2, 11/2, -9/2, 1]");
}

TEST(FaultInjection, CleanAgainAfterScopeEnds) {
    {
        fault::ScopedCorruption c(FaultTable::daehee1, 3, Rat(1));
        EXPECT_FALSE(run_identity("THM1_D1").passed);
    }
    EXPECT_TRUE(run_identity("THM1_D1").passed);
}

TEST(FaultInjection, EveryTableIsWatched) {
    {
        fault::ScopedCorruption c(FaultTable::stirling1, 5, 2, 0, Rat(1));
        expect_detects("ORTH_S1S2");
    }
    {
        fault::ScopedCorruption c(FaultTable::stirling2, 5, 2, 0, Rat(1));
        expect_detects("ORTH_S1S2");
        expect_detects("BER1");
    }
    {
        fault::ScopedCorruption c(FaultTable::rstirling1, 3, 1, 2, Rat(-1));
        expect_detects("RSTIR_ORTH");
    }
    {
        fault::ScopedCorruption c(FaultTable::rstirling2, 3, 1, 2, Rat(1));
        expect_detects("RSTIR_ORTH");
    }
    {
        fault::ScopedCorruption c(FaultTable::bernoulli, 4, R("1/3"));
        expect_detects("BER1");
        expect_detects("BOYA1");
    }
    {
        fault::ScopedCorruption c(FaultTable::harmonic, 5, R("1/7"));
        expect_detects("BOYA1");
        expect_detects("SER_GFH");
    }
    {
        fault::ScopedCorruption c(FaultTable::daehee2, 4, Rat(2));
        expect_detects("THM1_D2");
    }
}

TEST(FaultInjection, SuiteRunReportsFailureAndFailFastStopsEarly) {
    fault::ScopedCorruption c(FaultTable::stirling2, 3, 1, 0, Rat(1));
    const auto full = run_suite(Suite::CORE, 6, 2, {0, 1});
    EXPECT_FALSE(full.passed());
    RunOptions opts;
    opts.fail_fast = true;
    const auto quick = run_suite(Suite::CORE, 6, 2, {0, 1}, opts);
    EXPECT_FALSE(quick.passed());
    EXPECT_LT(quick.checks.size(), full.checks.size());
    EXPECT_FALSE(quick.checks.back().passed);
}

TEST(Report, JsonShape) {
    CheckResult ok{"ABC", true, 12, std::nullopt};
    CheckResult bad{"XYZ", false, 3, Counterexample{{{"k", 2}, {"x", R("1/3")}}, "1", "2"}};
    const auto jo = to_json(ok);
    EXPECT_EQ(jo.dump(), R"({"id":"ABC","status":"pass","trials":12})");
    const auto jb = to_json(bad);
    EXPECT_EQ(jb.dump(),
              R"({"id":"XYZ","status":"fail","trials":3,"counterexample":{"params":{"k":"2","x":"1/3"},"lhs":"1","rhs":"2"}})");

    SuiteReport rep;
    rep.suite = "core";
    rep.checks = {ok, bad};
    const auto js = to_json(rep);
    EXPECT_EQ(js["status"], "fail");
    EXPECT_EQ(js["checks"].size(), 2u);
    EXPECT_TRUE(js.contains("elapsed_ms"));
}

TEST(Report, PlainRendering) {
    CheckResult bad{"XYZ", false, 3, Counterexample{{{"k", 2}}, "1", "2"}};
    EXPECT_EQ(render_line(bad), "FAIL XYZ (3 trials)\n  at k=2\n  lhs = 1\n  rhs = 2");
    SuiteReport rep;
    rep.suite = "series";
    rep.checks = {CheckResult{"A", true, 1, std::nullopt}};
    EXPECT_EQ(render_plain(rep), "PASS A (1 trials)\nsuite series: PASS (1 checks, 0 failed, 0 ms)\n");
}
