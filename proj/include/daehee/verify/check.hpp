/**
 * @file check.hpp
 * @brief Types shared by the identity catalog and the suite runner.
 */
#pragma once

#include <cctype>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "../errors.hpp"
#include "../poly.hpp"
#include "../rat.hpp"
#include "../series.hpp"

namespace daehee::verify {

enum class Suite { ALL, CORE, HYPERHARMONIC, BOYADZHIEV, HARMONICPOLY, RSTIRLING, SERIES };

enum class CheckMode { POLY_EQ, SCALAR_EQ, SERIES_EQ };

inline constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::ALL, "all"},
    {Suite::CORE, "core"},
    {Suite::HYPERHARMONIC, "hyperharmonic"},
    {Suite::BOYADZHIEV, "boyadzhiev"},
    {Suite::HARMONICPOLY, "harmonicpoly"},
    {Suite::RSTIRLING, "rstirling"},
    {Suite::SERIES, "series"},
};

inline std::string_view to_string(Suite s) {
    for (const auto& [id, name] : kSuiteNames)
        if (id == s) return name;
    return "?";
}

/// Case-insensitive suite lookup.
inline Suite suite_from_string(std::string_view name) {
    std::string lower(name);
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (const auto& [id, n] : kSuiteNames)
        if (n == lower) return id;
    throw lookup_error("unknown suite: " + std::string(name));
}

inline std::string_view to_string(CheckMode m) {
    switch (m) {
        case CheckMode::POLY_EQ: return "poly_eq";
        case CheckMode::SCALAR_EQ: return "scalar_eq";
        case CheckMode::SERIES_EQ: return "series_eq";
    }
    return "?";
}

/// The rational sample set used for pointwise and series checks.
inline std::vector<Rat> default_x_samples() {
    return {Rat(-3), Rat(-5, 2), Rat(-1), Rat(0), Rat(1, 3), Rat(1), Rat(2), Rat(7, 2)};
}

inline constexpr int kDefaultSeriesOrder = 30;

/// Parameter ranges a check iterates over. k runs over 0..max_k, r over
/// 0..max_r (checks that need r >= 1 start at 1 and use max(1, max_r)).
struct Ranges {
    int max_k = 20;
    int max_r = 6;
    std::vector<Rat> x_samples = default_x_samples();
    int order = kDefaultSeriesOrder;
};

struct Overrides {
    std::optional<int> max_k;
    std::optional<int> max_r;
    std::optional<std::vector<Rat>> x_samples;
    std::optional<int> order;

    [[nodiscard]] Ranges apply(Ranges base) const {
        if (max_k) base.max_k = *max_k;
        if (max_r) base.max_r = *max_r;
        if (x_samples) base.x_samples = *x_samples;
        if (order) base.order = *order;
        return base;
    }
};

inline void validate(const Ranges& r) {
    if (r.max_k < 0) throw domain_error("empty k range (max_k < 0)");
    if (r.max_r < 0) throw domain_error("empty r range (max_r < 0)");
    if (r.x_samples.empty()) throw domain_error("empty rational sample set");
    if (r.order < 1) throw domain_error("series order must be at least 1");
}

struct Param {
    std::string name;
    std::string value;

    Param(std::string n, long v) : name(std::move(n)), value(std::to_string(v)) {}
    Param(std::string n, int v) : name(std::move(n)), value(std::to_string(v)) {}
    Param(std::string n, const Rat& v) : name(std::move(n)), value(v.to_string()) {}
    Param(std::string n, std::string v) : name(std::move(n)), value(std::move(v)) {}
    Param(std::string n, const char* v) : name(std::move(n)), value(v) {}
};

struct Counterexample {
    std::vector<Param> params;
    std::string lhs;
    std::string rhs;
};

struct CheckResult {
    std::string id;
    bool passed = true;
    long trials = 0;
    std::optional<Counterexample> counterexample;
};

namespace detail {

inline std::string render(const Rat& v) { return v.to_string(); }

inline std::string render(const BigInt& v) { return v.get_str(); }

inline std::string render(const Poly& p) {
    std::string out = "[";
    const auto c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ", ";
        out += c[i].to_string();
    }
    return out + "]";
}

}  // namespace detail

/// Collects comparisons made by one check. Records the first mismatch.
class Recorder {
public:
    template <class T>
    bool expect_eq(const T& lhs, const T& rhs, std::vector<Param> params) {
        ++trials_;
        if (lhs == rhs) return true;
        if (!first_) first_ = Counterexample{std::move(params), detail::render(lhs), detail::render(rhs)};
        return false;
    }

    bool expect_eq(const Rat& lhs, long rhs, std::vector<Param> params) {
        return expect_eq(lhs, Rat(rhs), std::move(params));
    }

    [[nodiscard]] bool failed() const { return first_.has_value(); }
    [[nodiscard]] long trials() const { return trials_; }

    [[nodiscard]] CheckResult result(std::string id) && {
        CheckResult r;
        r.id = std::move(id);
        r.trials = trials_;
        r.passed = !first_.has_value();
        r.counterexample = std::move(first_);
        return r;
    }

private:
    long trials_ = 0;
    std::optional<Counterexample> first_;
};

struct IdentityCheck {
    std::string id;
    std::string description;
    Suite suite;
    CheckMode mode;
    Ranges defaults;
    std::function<void(const Ranges&, Recorder&)> body;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    std::chrono::milliseconds elapsed{0};

    [[nodiscard]] bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

}  // namespace daehee::verify
