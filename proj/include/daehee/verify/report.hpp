/**
 * @file report.hpp
 * @brief JSON and plain-text rendering of suite reports.
 */
#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "check.hpp"

namespace daehee::verify {

inline nlohmann::ordered_json to_json(const CheckResult& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["status"] = r.passed ? "pass" : "fail";
    j["trials"] = r.trials;
    if (r.counterexample) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& p : r.counterexample->params) params[p.name] = p.value;
        j["counterexample"] = {{"params", params}, {"lhs", r.counterexample->lhs}, {"rhs", r.counterexample->rhs}};
    }
    return j;
}

inline nlohmann::ordered_json to_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["status"] = report.passed() ? "pass" : "fail";
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) j["checks"].push_back(to_json(c));
    j["elapsed_ms"] = report.elapsed.count();
    return j;
}

inline std::string render_line(const CheckResult& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS " : "FAIL ") << r.id << " (" << r.trials << " trials)";
    if (r.counterexample) {
        os << "\n  at";
        for (const auto& p : r.counterexample->params) os << ' ' << p.name << '=' << p.value;
        os << "\n  lhs = " << r.counterexample->lhs << "\n  rhs = " << r.counterexample->rhs;
    }
    return os.str();
}

inline std::string render_plain(const SuiteReport& report) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
        os << render_line(c) << '\n';
        if (!c.passed) ++failed;
    }
    os << "suite " << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.checks.size()
       << " checks, " << failed << " failed, " << report.elapsed.count() << " ms)\n";
    return os.str();
}

}  // namespace daehee::verify
