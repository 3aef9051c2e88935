/**
 * @file catalog.hpp
 * @brief The identity catalog and single-check execution.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "../errors.hpp"
#include "check.hpp"
#include "checks_boyadzhiev.hpp"
#include "checks_core.hpp"
#include "checks_harmonicpoly.hpp"
#include "checks_hyperharmonic.hpp"
#include "checks_rstirling.hpp"
#include "checks_series.hpp"

namespace daehee::verify {

/// Every check, grouped by suite in a fixed order. Built once.
inline const std::vector<IdentityCheck>& list_identities() {
    static const std::vector<IdentityCheck> catalog = [] {
        std::vector<IdentityCheck> out;
        add_core_checks(out);
        add_hyperharmonic_checks(out);
        add_boyadzhiev_checks(out);
        add_harmonicpoly_checks(out);
        add_rstirling_checks(out);
        add_series_checks(out);
        return out;
    }();
    return catalog;
}

inline const IdentityCheck& find_identity(std::string_view id) {
    for (const auto& c : list_identities())
        if (c.id == id) return c;
    throw lookup_error("unknown identity: " + std::string(id));
}

inline CheckResult run_check(const IdentityCheck& check, const Ranges& ranges) {
    validate(ranges);
    Recorder rec;
    check.body(ranges, rec);
    return std::move(rec).result(check.id);
}

inline CheckResult run_identity(std::string_view id, const Overrides& overrides = {}) {
    const auto& check = find_identity(id);
    return run_check(check, overrides.apply(check.defaults));
}

}  // namespace daehee::verify
