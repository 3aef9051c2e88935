/**
 * @file runner.hpp
 * @brief Runs a suite of checks, optionally on several threads.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "catalog.hpp"

namespace daehee::verify {

struct RunOptions {
    int jobs = 1;
    bool fail_fast = false;
    int order = kDefaultSeriesOrder;
    /// Called once per finished check, serialized by the runner.
    std::function<void(const CheckResult&)> progress;
};

inline std::vector<const IdentityCheck*> suite_checks(Suite suite) {
    std::vector<const IdentityCheck*> out;
    for (const auto& c : list_identities())
        if (suite == Suite::ALL || c.suite == suite) out.push_back(&c);
    return out;
}

/// Runs every check of `suite` with the given ranges. Results are reported in
/// catalog order; with fail_fast, checks not yet started after the first
/// failure are skipped and omitted.
inline SuiteReport run_suite(Suite suite, int max_k, int max_r, std::vector<Rat> x_samples, const RunOptions& opts = {}) {
    const Ranges ranges{max_k, max_r, std::move(x_samples), opts.order};
    validate(ranges);

    const auto start = std::chrono::steady_clock::now();
    const auto checks = suite_checks(suite);
    std::vector<std::optional<CheckResult>> slots(checks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex progress_mutex;

    auto worker = [&] {
        while (!stop.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= checks.size()) return;
            CheckResult r = run_check(*checks[i], ranges);
            if (!r.passed && opts.fail_fast) stop.store(true);
            if (opts.progress) {
                std::lock_guard lock(progress_mutex);
                opts.progress(r);
            }
            slots[i] = std::move(r);
        }
    };

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }

    SuiteReport report;
    report.suite = std::string(to_string(suite));
    for (auto& s : slots)
        if (s) report.checks.push_back(std::move(*s));
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace daehee::verify
