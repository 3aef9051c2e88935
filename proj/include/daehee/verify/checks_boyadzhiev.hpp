/**
 * @file checks_boyadzhiev.hpp
 * @brief BOYADZHIEV suite: Stirling/Bernoulli/harmonic identities and their
 * polynomial generalizations.
 */
#pragma once

#include <algorithm>
#include <vector>

#include "../sequences.hpp"
#include "support.hpp"

namespace daehee::verify {

inline void add_boyadzhiev_checks(std::vector<IdentityCheck>& out) {
    using namespace support;
    constexpr auto S = Suite::BOYADZHIEV;

    out.push_back(make("BOYA1", "B_k = sum_{j=1}^{k+1} {k+1 j} (-1)^(j-1) (j-1)! H_j", S, CheckMode::SCALAR_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k)
            rec.expect_eq(bernoulli_number(k),
                          rat_sum(1, k + 1, [&](int j) { return s2u(k + 1, j) * sign(j - 1) * fact(j - 1) * H(j); }),
                          {{"k", k}});
    }));

    out.push_back(make("BOYA2", "sum_{j=1}^{k} signed[k j] (-1)^j B_{j-1} = (-1)^k k!/k^2", S, CheckMode::SCALAR_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 1; k <= g.max_k; ++k)
            rec.expect_eq(rat_sum(1, k, [&](int j) { return s1s(k, j) * sign(j) * bernoulli_number(j - 1); }),
                          sign(k) * fact(k) / Rat(static_cast<long>(k) * k), {{"k", k}});
    }));

    out.push_back(make("VAR3", "S_k(x) = sum j! {k+1 j+1} binom(x, j+1)", S, CheckMode::POLY_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k)
            rec.expect_eq(power_sum_poly(k),
                          poly_sum(0, k, [&](int j) { return binom_poly(0, j + 1) * (fact(j) * s2u(k + 1, j + 1)); }),
                          {{"k", k}});
    }));

    out.push_back(make("VAR4", "S_k(x) + delta(k,0) = sum j! signed{k+1 j+1} binom(x+j+1, j+1)", S, CheckMode::POLY_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k)
            rec.expect_eq(power_sum_poly(k) + constant(delta(k, 0)),
                          poly_sum(0, k, [&](int j) { return binom_poly(j + 1, j + 1) * (fact(j) * s2s(k + 1, j + 1)); }),
                          {{"k", k}});
    }));

    out.push_back(make("ORTH_SHIFT", "orthogonality with every index shifted by one, all four forms", S,
                       CheckMode::SCALAR_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int i = 0; i <= g.max_k; ++i) {
            for (int j = 0; j <= g.max_k; ++j) {
                const Rat d = delta(i, j);
                rec.expect_eq(rat_sum(0, i, [&](int r) { return s2u(i + 1, r + 1) * s1s(r + 1, j + 1); }), d,
                              {{"i", i}, {"j", j}, {"form", 1}});
                rec.expect_eq(rat_sum(0, i, [&](int r) { return s1s(i + 1, r + 1) * s2u(r + 1, j + 1); }), d,
                              {{"i", i}, {"j", j}, {"form", 2}});
                rec.expect_eq(rat_sum(0, i, [&](int r) { return s2s(i + 1, r + 1) * s1u(r + 1, j + 1); }), d,
                              {{"i", i}, {"j", j}, {"form", 3}});
                rec.expect_eq(rat_sum(0, i, [&](int r) { return s1u(i + 1, r + 1) * s2s(r + 1, j + 1); }), d,
                              {{"i", i}, {"j", j}, {"form", 4}});
            }
        }
    }));

    out.push_back(make("GEN1", "sum signed[k+1 j+1] B_j(x) = k! sum (-1)^(k-j)/(k+1-j) binom(x-1, j) = D_k(x-1)", S,
                       CheckMode::POLY_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Poly lhs = poly_sum(0, k, [&](int j) { return bernoulli_poly(j) * s1s(k + 1, j + 1); });
            const Poly rhs = fact(k) * poly_sum(0, k, [&](int j) { return binom_poly(-1, j) * (sign(k - j) / Rat(k + 1 - j)); });
            rec.expect_eq(lhs, rhs, {{"k", k}, {"form", "sum"}});
            rec.expect_eq(lhs, shift(daehee_poly(k), -1), {{"k", k}, {"form", "shifted Daehee"}});
            rec.expect_eq(rat_sum(0, k, [&](int j) { return sign(j) * s1s(k + 1, j + 1) * bernoulli_number(j); }),
                          sign(k) * fact(k) / Rat(k + 1), {{"k", k}, {"form", "x = 1"}});
        }
    }));

    out.push_back(make("GEN2", "inverse of GEN1 as a polynomial identity for B_k(x), with its x = 0 case", S,
                       CheckMode::POLY_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Poly rhs = poly_sum(0, k, [&](int j) {
                const Poly inner = poly_sum(0, j, [&](int i) { return binom_poly(-1, i) * (sign(i) / Rat(j + 1 - i)); });
                return inner * (sign(j) * fact(j) * s2u(k + 1, j + 1));
            });
            rec.expect_eq(bernoulli_poly(k), rhs, {{"k", k}, {"form", "poly"}});
            rec.expect_eq(bernoulli_number(k),
                          rat_sum(0, k, [&](int j) { return s2u(k + 1, j + 1) * sign(j) * fact(j) * H(j + 1); }),
                          {{"k", k}, {"form", "x = 0"}});
        }
        for (int j = 0; j <= g.max_k; ++j) {
            rec.expect_eq(rat_sum(0, j, [&](int i) { return sign(i) / Rat(j + 1 - i) * binom_rat(-1, i); }), H(j + 1),
                          {{"j", j}, {"form", "harmonic lemma"}});
        }
    }));

    out.push_back(make("GAZETTE", "k! binom(x+k+1, k+1) = k! + sum [k+1 j+1] S_j(x)", S, CheckMode::POLY_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k)
            rec.expect_eq(fact(k) * binom_poly(k + 1, k + 1),
                          constant(fact(k)) + poly_sum(0, k, [&](int j) { return power_sum_poly(j) * s1u(k + 1, j + 1); }),
                          {{"k", k}});
    }));

    out.push_back(make("CAN1", "sum [k+1 j+1] B_j(x) = k! H_{k+1}^(x) = second kind_k(x+1)", S, CheckMode::POLY_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Poly lhs = poly_sum(0, k, [&](int j) { return bernoulli_poly(j) * s1u(k + 1, j + 1); });
            rec.expect_eq(lhs, fact(k) * hyperharmonic_poly(k + 1), {{"k", k}, {"form", "hyperharmonic"}});
            rec.expect_eq(lhs, shift(daehee2_poly(k), 1), {{"k", k}, {"form", "shifted Daehee"}});
        }
    }));

    out.push_back(make("GEN3", "sum [k+1 j+1] B_j(x) = k! sum 1/(k+1-j) binom(x+j-1, j)", S, CheckMode::POLY_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k)
            rec.expect_eq(poly_sum(0, k, [&](int j) { return bernoulli_poly(j) * s1u(k + 1, j + 1); }),
                          fact(k) * poly_sum(0, k, [&](int j) { return binom_poly(j - 1, j) / Rat(k + 1 - j); }),
                          {{"k", k}});
    }));

    out.push_back(make("GEN4", "B_k(x) = sum j! signed{k+1 j+1} sum_i 1/(j+1-i) binom(x+i-1, i), with its x = 0 case", S,
                       CheckMode::POLY_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Poly rhs = poly_sum(0, k, [&](int j) {
                const Poly inner = poly_sum(0, j, [&](int i) { return binom_poly(i - 1, i) / Rat(j + 1 - i); });
                return inner * (fact(j) * s2s(k + 1, j + 1));
            });
            rec.expect_eq(bernoulli_poly(k), rhs, {{"k", k}, {"form", "poly"}});
            rec.expect_eq(bernoulli_number(k),
                          sign(k) * rat_sum(0, k, [&](int j) { return sign(j) * fact(j) / Rat(j + 1) * s2u(k + 1, j + 1); }),
                          {{"k", k}, {"form", "x = 0"}});
        }
    }));

    out.push_back(make("WANG", "CAN1 at x = i+1 via the hyperharmonic closed form, and its inverse, for i <= 8", S,
                       CheckMode::SCALAR_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            for (int i = 0; i <= 8; ++i) {
                const Rat lhs = rat_sum(0, k, [&](int j) { return s1u(k + 1, j + 1) * eval(bernoulli_poly(j), i + 1); });
                rec.expect_eq(lhs, fact(k) * binom(k + i + 1, i) * (H(k + i + 1) - H(i)), {{"k", k}, {"i", i}, {"form", 1}});
                const Rat inv = rat_sum(0, k, [&](int j) {
                    return sign(j) * s2u(k + 1, j + 1) * binom(j + i + 1, i) * fact(j) * (H(j + i + 1) - H(i));
                });
                rec.expect_eq(inv, sign(k) * eval(bernoulli_poly(k), i + 1), {{"k", k}, {"i", i}, {"form", 2}});
            }
        }
    }));

    out.push_back(make("HH_CLOSED", "H_n^(r) = binom(n+r-1, r-1) (H_{n+r-1} - H_{r-1})", S, CheckMode::SCALAR_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int n = 0; n <= g.max_k + 1; ++n)
            for (int r = 1; r <= r_hi(g); ++r)
                rec.expect_eq(hyperharmonic_number(n, r), binom(n + r - 1, r - 1) * (H(n + r - 1) - H(r - 1)),
                              {{"n", n}, {"r", r}});
    }));
}

}  // namespace daehee::verify
