/**
 * @file checks_series.hpp
 * @brief SERIES suite: every generating function expanded to the configured
 * order and compared coefficient by coefficient with the closed forms.
 */
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "../sequences.hpp"
#include "../series.hpp"
#include "support.hpp"

namespace daehee::verify {

namespace detail {

inline TruncSeries random_series(std::mt19937& gen, int order, bool unit_constant) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    TruncSeries s(order);
    for (int i = 0; i <= order; ++i) s[i] = Rat(BigInt(num(gen)), BigInt(den(gen)));
    if (unit_constant && s[0].is_zero()) s[0] = 1;
    return s;
}

}  // namespace detail

inline void add_series_checks(std::vector<IdentityCheck>& out) {
    using namespace support;
    constexpr auto S = Suite::SERIES;
    constexpr auto M = CheckMode::SERIES_EQ;

    out.push_back(make("SER_GF1", "EGF coefficients of ln(1+t)/t (1+t)^x equal D_k(x)", S, M, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (const auto& x : g.x_samples) {
            const auto s = gf_build(gf::Daehee1{x}, g.order);
            for (int k = 0; k <= g.order; ++k) rec.expect_eq(egf_coeff(s, k), eval(daehee_poly(k), x), {{"k", k}, {"x", x}});
        }
    }));

    out.push_back(make("SER_GF2", "EGF coefficients of ln(1-t)/(-t) (1-t)^(1-x) equal the second-kind polynomials", S, M,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (const auto& x : g.x_samples) {
            const auto s = gf_build(gf::Daehee2{x}, g.order);
            for (int k = 0; k <= g.order; ++k) rec.expect_eq(egf_coeff(s, k), eval(daehee2_poly(k), x), {{"k", k}, {"x", x}});
        }
    }));

    out.push_back(make("SER_GFH", "-ln(1-t)/(1-t) has ordinary coefficients H_n", S, M, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        const auto s = gf_build(gf::Harmonic{}, g.order);
        for (int n = 0; n <= g.order; ++n) rec.expect_eq(s[n], H(n), {{"n", n}});
    }));

    out.push_back(make("SER_GFHP", "-ln(1-t)/(1-t)^x has ordinary coefficients H_n^(x), zero at n = 0", S, M, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (const auto& x : g.x_samples) {
            const auto s = gf_build(gf::Hyperharmonic{x}, g.order);
            for (int n = 0; n <= g.order; ++n) rec.expect_eq(s[n], eval(hyperharmonic_poly(n), x), {{"n", n}, {"x", x}});
        }
    }));

    out.push_back(make("SER_GFHAP", "-ln(1-t)/(t (1-t)^(1-x)) has ordinary coefficients H_k(x)", S, M, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (const auto& x : g.x_samples) {
            const auto s = gf_build(gf::HarmonicPoly{x}, g.order);
            for (int k = 0; k <= g.order; ++k) rec.expect_eq(s[k], eval(harmonic_poly(k), x), {{"k", k}, {"x", x}});
        }
    }));

    out.push_back(make("SER_HHN", "-ln(1-t)/(1-t)^m has ordinary coefficients H_n^(m) for integer m", S, M, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int m = 0; m <= g.max_r; ++m) {
            const auto s = gf_build(gf::Hyperharmonic{m}, g.order);
            for (int n = 0; n <= g.order; ++n) rec.expect_eq(s[n], hyperharmonic_number(n, m), {{"n", n}, {"order", m}});
        }
    }));

    out.push_back(make("SER_STIRL", "ln(1+t)^k/k! and (e^t-1)^k/k! reproduce the Stirling columns", S, M, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= std::min(g.max_k, g.order); ++k) {
            const auto first = gf_build(gf::Stirling1{k}, g.order);
            const auto second = gf_build(gf::Stirling2{k}, g.order);
            for (int n = 0; n <= g.order; ++n) {
                rec.expect_eq(egf_coeff(first, n), s1s(n, k), {{"n", n}, {"k", k}, {"kind", "first"}});
                rec.expect_eq(egf_coeff(second, n), s2u(n, k), {{"n", n}, {"k", k}, {"kind", "second"}});
            }
        }
    }));

    out.push_back(make("SER_RSTIRL", "r-Stirling EGFs reproduce the shifted r-Stirling columns (k <= 8)", S, M, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int r = 0; r <= g.max_r; ++r) {
            for (int k = 0; k <= std::min({g.max_k, g.order, 8}); ++k) {
                const auto first = gf_build(gf::RStirling1{k, r}, g.order);
                const auto second = gf_build(gf::RStirling2{k, r}, g.order);
                for (int n = 0; n <= g.order; ++n) {
                    rec.expect_eq(egf_coeff(first, n), rs1u(n, k, r), {{"n", n}, {"k", k}, {"r", r}, {"kind", "first"}});
                    rec.expect_eq(egf_coeff(second, n), rs2u(n, k, r), {{"n", n}, {"k", k}, {"r", r}, {"kind", "second"}});
                }
            }
        }
    }));

    out.push_back(make("SER_NORLUND1", "ln(1+t)/t has coefficients (-1)^j/(j+1); cached lists match the series", S, M,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        const auto s = gf_build(gf::NorlundNeg{1}, g.order);
        for (int j = 0; j <= g.order; ++j) rec.expect_eq(s[j], sign(j) / Rat(j + 1), {{"j", j}, {"r", 1}});
        for (int r = 1; r <= r_hi(g); ++r) {
            const auto list = norlund_neg(r, g.order);
            const auto direct = series_pow_int(gf_build(gf::NorlundNeg{1}, g.order), r);
            for (int j = 0; j <= g.order; ++j)
                rec.expect_eq(list[static_cast<std::size_t>(j)], direct[j], {{"j", j}, {"r", r}, {"form", "power"}});
        }
    }));

    out.push_back(make("SER_BERNOULLI", "t e^(xt)/(e^t-1) has EGF coefficients B_k(x)", S, M, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (const auto& x : g.x_samples) {
            const auto s = gf_build(gf::Bernoulli{x}, g.order);
            for (int k = 0; k <= g.order; ++k) rec.expect_eq(egf_coeff(s, k), eval(bernoulli_poly(k), x), {{"k", k}, {"x", x}});
        }
    }));

    out.push_back(make("SER_DAEHEE_ORDER", "(ln(1+t)/t)^r (1+t)^x has EGF coefficients D_k^(r)(x)", S, M, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int r = 1; r <= r_hi(g); ++r) {
            for (const auto& x : g.x_samples) {
                const auto s = gf_build(gf::DaeheeOrder{x, r}, g.order);
                for (int k = 0; k <= g.order; ++k)
                    rec.expect_eq(egf_coeff(s, k), eval(daehee_order_r_poly(k, r), x), {{"k", k}, {"r", r}, {"x", x}});
            }
        }
    }));

    out.push_back(make("SER_RING", "(a b) / b = a on deterministic pseudo-random series", S, M, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        std::mt19937 gen(20240611u);
        for (int trial = 0; trial < 16; ++trial) {
            const auto a = detail::random_series(gen, g.order, false);
            const auto b = detail::random_series(gen, g.order, true);
            const auto back = series_div(series_mul(a, b), b);
            for (int n = 0; n <= g.order; ++n) rec.expect_eq(back[n], a[n], {{"trial", trial}, {"n", n}});
        }
    }));
}

}  // namespace daehee::verify
