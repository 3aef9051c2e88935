/**
 * @file checks_core.hpp
 * @brief CORE suite: Stirling orthogonality, Daehee polynomials and numbers,
 * power sums, Bernoulli formulas, integrals and higher-order Daehee polynomials.
 */
#pragma once

#include <algorithm>
#include <vector>

#include "../sequences.hpp"
#include "../series.hpp"
#include "../stirling.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace daehee::verify {

inline void add_core_checks(std::vector<IdentityCheck>& out) {
    using namespace support;
    constexpr auto S = Suite::CORE;

    out.push_back(make("ORTH_S1S2", "Stirling orthogonality, all four signed/unsigned pairings", S,
                       CheckMode::SCALAR_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int i = 0; i <= g.max_k; ++i) {
            for (int j = 0; j <= g.max_k; ++j) {
                const Rat d = delta(i, j);
                rec.expect_eq(rat_sum(0, i, [&](int r) { return s2u(i, r) * s1s(r, j); }), d, {{"i", i}, {"j", j}, {"form", 1}});
                rec.expect_eq(rat_sum(0, i, [&](int r) { return s1s(i, r) * s2u(r, j); }), d, {{"i", i}, {"j", j}, {"form", 2}});
                rec.expect_eq(rat_sum(0, i, [&](int r) { return s2s(i, r) * s1u(r, j); }), d, {{"i", i}, {"j", j}, {"form", 3}});
                rec.expect_eq(rat_sum(0, i, [&](int r) { return s1u(i, r) * s2s(r, j); }), d, {{"i", i}, {"j", j}, {"form", 4}});
            }
        }
    }));

    out.push_back(make("DEF_D1_GF", "EGF ln(1+t)/t (1+t)^x reproduces D_k(x) at rational x", S, CheckMode::SERIES_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        const int n = std::min(g.max_k, g.order);
        for (const auto& x : g.x_samples) {
            const auto s = gf_build(gf::Daehee1{x}, n);
            for (int k = 0; k <= n; ++k) rec.expect_eq(egf_coeff(s, k), eval(daehee_poly(k), x), {{"k", k}, {"x", x}});
        }
    }));

    out.push_back(make("DEF_D2_GF", "EGF ln(1-t)/(-t) (1-t)^(1-x) reproduces the second-kind polynomials", S,
                       CheckMode::SERIES_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        const int n = std::min(g.max_k, g.order);
        for (const auto& x : g.x_samples) {
            const auto s = gf_build(gf::Daehee2{x}, n);
            for (int k = 0; k <= n; ++k) rec.expect_eq(egf_coeff(s, k), eval(daehee2_poly(k), x), {{"k", k}, {"x", x}});
        }
    }));

    out.push_back(make("INV_D1", "B_k(x) = sum {k j} D_j(x), and the inverse transform recovers D_k(x)", S,
                       CheckMode::POLY_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        std::vector<Poly> d, b;
        for (int k = 0; k <= g.max_k; ++k) {
            d.push_back(daehee_poly(k));
            b.push_back(bernoulli_poly(k));
        }
        const auto fwd = stirling_transform(d, StirlingWeight::s2());
        const auto back = inverse_stirling_transform(b, StirlingWeight::s2());
        for (int k = 0; k <= g.max_k; ++k) {
            rec.expect_eq(fwd[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(k)], {{"k", k}, {"direction", "forward"}});
            rec.expect_eq(back[static_cast<std::size_t>(k)], d[static_cast<std::size_t>(k)], {{"k", k}, {"direction", "inverse"}});
        }
    }));

    out.push_back(make("INV_D2", "B_k(x) = sum signed{k j} of the second-kind polynomials, and inverse", S,
                       CheckMode::POLY_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        std::vector<Poly> d, b;
        for (int k = 0; k <= g.max_k; ++k) {
            d.push_back(daehee2_poly(k));
            b.push_back(bernoulli_poly(k));
        }
        const auto fwd = stirling_transform(d, StirlingWeight::s2_signed());
        const auto back = inverse_stirling_transform(b, StirlingWeight::s2_signed());
        for (int k = 0; k <= g.max_k; ++k) {
            rec.expect_eq(fwd[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(k)], {{"k", k}, {"direction", "forward"}});
            rec.expect_eq(back[static_cast<std::size_t>(k)], d[static_cast<std::size_t>(k)], {{"k", k}, {"direction", "inverse"}});
        }
    }));

    out.push_back(make("REL", "second kind(x) = (-1)^k D_k(1-x) and D_k(x) = (-1)^k second kind(1-x)", S,
                       CheckMode::POLY_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            rec.expect_eq(daehee2_poly(k), sign(k) * reflect(daehee_poly(k), 1), {{"k", k}, {"form", 1}});
            rec.expect_eq(daehee_poly(k), sign(k) * reflect(daehee2_poly(k), 1), {{"k", k}, {"form", 2}});
        }
    }));

    out.push_back(make("THM1_D1", "D_k(x) = k! d/dx binom(x, k+1)", S, CheckMode::POLY_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) rec.expect_eq(daehee_poly(k), fact(k) * dbinom(0, k + 1), {{"k", k}});
    }));

    out.push_back(make("THM1_D2", "second kind(x) = k! d/dx binom(x+k-1, k+1)", S, CheckMode::POLY_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) rec.expect_eq(daehee2_poly(k), fact(k) * dbinom(k - 1, k + 1), {{"k", k}});
    }));

    out.push_back(make("VAR1", "S_k(x) + delta(k,0) = sum j! {k j} binom(x+1, j+1)", S, CheckMode::POLY_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Poly rhs = poly_sum(0, k, [&](int j) { return binom_poly(1, j + 1) * (fact(j) * s2u(k, j)); });
            rec.expect_eq(power_sum_poly(k) + constant(delta(k, 0)), rhs, {{"k", k}});
        }
    }));

    out.push_back(make("VAR2", "S_k(x) = sum j! signed{k j} binom(x+j, j+1)", S, CheckMode::POLY_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Poly rhs = poly_sum(0, k, [&](int j) { return binom_poly(j, j + 1) * (fact(j) * s2s(k, j)); });
            rec.expect_eq(power_sum_poly(k), rhs, {{"k", k}});
        }
    }));

    out.push_back(make("DER", "S_k'(x) = B_k(x+1)", S, CheckMode::POLY_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k)
            rec.expect_eq(derivative(power_sum_poly(k)), shift(bernoulli_poly(k), 1), {{"k", k}});
    }));

    out.push_back(make("DN", "Daehee numbers: closed forms, values at 0 and Bernoulli sums", S, CheckMode::SCALAR_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            rec.expect_eq(eval(daehee_poly(k), 0), daehee_number(k), {{"k", k}, {"form", "D_k(0)"}});
            rec.expect_eq(rat_sum(0, k, [&](int j) { return s1s(k, j) * bernoulli_number(j); }), daehee_number(k),
                          {{"k", k}, {"form", "signed sum"}});
            rec.expect_eq(eval(dbinom(0, k + 1), 0), sign(k) / Rat(k + 1), {{"k", k}, {"form", "derivative at 0"}});
            rec.expect_eq(eval(daehee2_poly(k), 0), daehee2_number(k), {{"k", k}, {"form", "second kind at 0"}});
            if (k >= 1) {
                rec.expect_eq(rat_sum(1, k, [&](int j) { return s1u(k, j) * bernoulli_number(j); }), daehee2_number(k),
                              {{"k", k}, {"form", "unsigned sum"}});
                rec.expect_eq(eval(dbinom(k - 1, k + 1), 0), -frac(1, static_cast<long>(k) * (k + 1)),
                              {{"k", k}, {"form", "second derivative at 0"}});
            }
        }
    }));

    out.push_back(make("BER1", "B_k = sum (-1)^j j!/(j+1) {k j}, against the EGF t/(e^t-1)", S, CheckMode::SCALAR_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        const auto s = gf_build(gf::Bernoulli{0}, std::max(1, g.max_k));
        for (int k = 0; k <= g.max_k; ++k) {
            const Rat sum = rat_sum(0, k, [&](int j) { return sign(j) * fact(j) / Rat(j + 1) * s2u(k, j); });
            rec.expect_eq(sum, bernoulli_number(k), {{"k", k}, {"form", "table"}});
            rec.expect_eq(sum, egf_coeff(s, k), {{"k", k}, {"form", "egf"}});
        }
    }));

    out.push_back(make("BER2", "B_k = (-1)^(k+1) sum_{j>=1} (-1)^j (j-1)!/(j+1) {k j}", S, CheckMode::SCALAR_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        rec.expect_eq(bernoulli_number(0), Rat(1), {{"k", 0}});
        for (int k = 1; k <= g.max_k; ++k) {
            const Rat sum = rat_sum(1, k, [&](int j) { return sign(j) * fact(j - 1) / Rat(j + 1) * s2u(k, j); });
            rec.expect_eq(sign(k + 1) * sum, bernoulli_number(k), {{"k", k}});
        }
    }));

    out.push_back(make("STACK", "d/dx binom(x, n) = sum_{i=1}^{n} (-1)^(i-1)/i binom(x, n-i)", S, CheckMode::POLY_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int n = 1; n <= g.max_k + 1; ++n) {
            const Poly rhs = poly_sum(1, n, [&](int i) { return binom_poly(0, n - i) * (sign(i - 1) / Rat(i)); });
            rec.expect_eq(dbinom(0, n), rhs, {{"n", n}});
        }
    }));

    out.push_back(make("EXP", "explicit binomial sums for both Daehee kinds (four forms)", S, CheckMode::POLY_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Poly e11 = fact(k) * poly_sum(0, k, [&](int j) { return binom_poly(0, k - j) * (sign(j) / Rat(j + 1)); });
            const Poly e21 = fact(k) * poly_sum(0, k, [&](int j) { return binom_poly(k - j - 2, k - j) / Rat(j + 1); });
            const Poly e12 = sign(k) * fact(k) *
                             poly_sum(0, k, [&](int j) { return binom_poly(0, j) * (sign(j) / Rat(k + 1 - j)); });
            const Poly e22 = fact(k) * poly_sum(0, k, [&](int j) { return binom_poly(j - 2, j) / Rat(k + 1 - j); });
            rec.expect_eq(daehee_poly(k), e11, {{"k", k}, {"form", "exp11"}});
            rec.expect_eq(daehee2_poly(k), e21, {{"k", k}, {"form", "exp21"}});
            rec.expect_eq(daehee_poly(k), e12, {{"k", k}, {"form", "exp12"}});
            rec.expect_eq(daehee2_poly(k), e22, {{"k", k}, {"form", "exp22"}});
        }
    }));

    out.push_back(make("RES11", "signed first-kind transform of B_j(x) as a binomial sum, both kinds, with inverses",
                       S, CheckMode::POLY_EQ, double_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Poly b = bernoulli_poly(k);
            const Poly lhs1 = poly_sum(0, k, [&](int j) { return bernoulli_poly(j) * s1s(k, j); });
            const Poly rhs1 = fact(k) * poly_sum(0, k, [&](int j) {
                return binom_poly(0, j) * (sign(k - j) / Rat(k + 1 - j));
            });
            rec.expect_eq(lhs1, rhs1, {{"k", k}, {"form", "first kind"}});
            const Poly inv1 = poly_sum(0, k, [&](int j) {
                return (fact(j) * s2u(k, j)) *
                       poly_sum(0, j, [&](int i) { return binom_poly(0, i) * (sign(j - i) / Rat(j + 1 - i)); });
            });
            rec.expect_eq(b, inv1, {{"k", k}, {"form", "first kind inverse"}});

            const Poly lhs2 = poly_sum(0, k, [&](int j) { return bernoulli_poly(j) * s1u(k, j); });
            const Poly rhs2 = fact(k) * poly_sum(0, k, [&](int j) { return binom_poly(j - 2, j) / Rat(k + 1 - j); });
            rec.expect_eq(lhs2, rhs2, {{"k", k}, {"form", "second kind"}});
            const Poly inv2 = poly_sum(0, k, [&](int j) {
                return (fact(j) * s2s(k, j)) * poly_sum(0, j, [&](int i) { return binom_poly(i - 2, i) / Rat(j + 1 - i); });
            });
            rec.expect_eq(b, inv2, {{"k", k}, {"form", "second kind inverse"}});
        }
    }));

    out.push_back(make("INTEGRAL", "F_k = k! binom(x, k+1), second-kind integral, F_k(k+1) = k!, second(2) = k! + delta",
                       S, CheckMode::POLY_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Poly f1 = integral0(daehee_poly(k));
            const Poly f2 = integral0(daehee2_poly(k));
            rec.expect_eq(f1, fact(k) * binom_poly(0, k + 1), {{"k", k}, {"form", "F_k"}});
            rec.expect_eq(f2, fact(k) * binom_poly(k - 1, k + 1) + constant(delta(k, 0)), {{"k", k}, {"form", "F^_k"}});
            rec.expect_eq(eval(f1, k + 1), fact(k), {{"k", k}, {"form", "F_k(k+1)"}});
            rec.expect_eq(eval(f2, 2), fact(k) + delta(k, 0), {{"k", k}, {"form", "F^_k(2)"}});
        }
    }));

    out.push_back(make("ORDER_R", "order-r Daehee polynomials: r = 1 is D_k(x); EGF agreement at rational x", S,
                       CheckMode::SERIES_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        const int n = std::min(g.max_k, g.order);
        for (int k = 0; k <= g.max_k; ++k) rec.expect_eq(daehee_order_r_poly(k, 1), daehee_poly(k), {{"k", k}, {"r", 1}});
        for (int r = 1; r <= r_hi(g); ++r) {
            for (const auto& x : g.x_samples) {
                const auto s = gf_build(gf::DaeheeOrder{x, r}, n);
                for (int k = 0; k <= n; ++k)
                    rec.expect_eq(egf_coeff(s, k), eval(daehee_order_r_poly(k, r), x), {{"k", k}, {"r", r}, {"x", x}});
            }
        }
    }));

    out.push_back(make("ORACLE_STIRLING", "Stirling and r-Stirling tables against exhaustive enumeration (n <= 8, r <= 3)",
                       S, CheckMode::SCALAR_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        const int n_hi = std::min(g.max_k, kOracleMaxN);
        const int r_max = std::min(g.max_r, 3);
        for (int n = 0; n <= n_hi; ++n) {
            for (int r = 0; r <= std::min(r_max, n); ++r) {
                const auto first = oracle_stirling_row(n, StirlingKind::first, r);
                const auto second = oracle_stirling_row(n, StirlingKind::second, r);
                for (int k = 0; k <= n; ++k) {
                    const auto idx = static_cast<std::size_t>(k);
                    Rat t1 = (r == 0) ? s1u(n, k) : rs1u(n - r, k - r, r);
                    Rat t2 = (r == 0) ? s2u(n, k) : rs2u(n - r, k - r, r);
                    rec.expect_eq(t1, Rat(first[idx]), {{"n", n}, {"k", k}, {"r", r}, {"kind", "first"}});
                    rec.expect_eq(t2, Rat(second[idx]), {{"n", n}, {"k", k}, {"r", r}, {"kind", "second"}});
                }
            }
        }
    }));

    out.push_back(make("ORACLE_POWERSUM", "S_k(n) against direct summation (k <= 8, n <= 12)", S, CheckMode::SCALAR_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= std::min(g.max_k, 8); ++k)
            for (int n = 0; n <= 12; ++n)
                rec.expect_eq(eval(power_sum_poly(k), n), oracle_powersum_bruteforce(k, n), {{"k", k}, {"n", n}});
    }));
}

}  // namespace daehee::verify
