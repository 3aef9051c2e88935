/**
 * @file checks_harmonicpoly.hpp
 * @brief HARMONICPOLY suite: harmonic polynomials H_k(x) and the Daehee
 * polynomials expressed through harmonic numbers.
 */
#pragma once

#include <vector>

#include "../sequences.hpp"
#include "support.hpp"

namespace daehee::verify {

inline void add_harmonicpoly_checks(std::vector<IdentityCheck>& out) {
    using namespace support;
    constexpr auto S = Suite::HARMONICPOLY;

    out.push_back(make("HH1", "H_k(x) = H_{k+1}^(1-x)", S, CheckMode::POLY_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) rec.expect_eq(harmonic_poly(k), hyper_at(k + 1, -1, 1), {{"k", k}});
    }));

    out.push_back(make("HH2", "H_k(x) = (-1)^k/k! D_k(x-1)", S, CheckMode::POLY_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k)
            rec.expect_eq(harmonic_poly(k), (sign(k) / fact(k)) * shift(daehee_poly(k), -1), {{"k", k}});
    }));

    out.push_back(make("HH3", "explicit binomial sum for H_k(x) against H_{k+1}^(1-x); H_k(0) = H_{k+1}", S, CheckMode::POLY_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Poly sum = poly_sum(0, k, [&](int j) { return binom_poly(-1, j) * (sign(j) / Rat(k + 1 - j)); });
            rec.expect_eq(sum, hyper_at(k + 1, -1, 1), {{"k", k}, {"form", "poly"}});
            rec.expect_eq(eval(harmonic_poly(k), 0), H(k + 1), {{"k", k}, {"form", "x = 0"}});
        }
    }));

    out.push_back(make("CHEON_W", "H_k(x) = sum_{t=1}^{k+1} binom(k+1-t-x, k+1-t)/t", S, CheckMode::POLY_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Poly rhs = poly_sum(1, k + 1, [&](int t) {
                const int m = k + 1 - t;
                return compose_affine(binom_poly(m, m), -1, 0) / Rat(t);
            });
            rec.expect_eq(harmonic_poly(k), rhs, {{"k", k}});
        }
    }));

    out.push_back(make("CHEON33", "H_k(x) = sum (-1)^(k-j) binom(x, k-j) H_{j+1}", S, CheckMode::POLY_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k)
            rec.expect_eq(harmonic_poly(k), poly_sum(0, k, [&](int j) { return binom_poly(0, k - j) * (sign(k - j) * H(j + 1)); }),
                          {{"k", k}});
    }));

    out.push_back(make("DAE0", "D_k(x) = k! sum (-1)^j binom(x+1, k-j) H_{j+1}", S, CheckMode::POLY_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k)
            rec.expect_eq(daehee_poly(k),
                          fact(k) * poly_sum(0, k, [&](int j) { return binom_poly(1, k - j) * (sign(j) * H(j + 1)); }), {{"k", k}});
    }));

    out.push_back(make("DAE1", "D_k = k! sum (-1)^j binom(1, k-j) H_{j+1} = (-1)^k k! (H_{k+1} - H_k)", S, CheckMode::SCALAR_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            rec.expect_eq(daehee_number(k), fact(k) * rat_sum(0, k, [&](int j) { return sign(j) * binom(1, k - j) * H(j + 1); }),
                          {{"k", k}, {"form", "sum"}});
            rec.expect_eq(daehee_number(k), sign(k) * fact(k) * (H(k + 1) - H(k)), {{"k", k}, {"form", "closed"}});
        }
    }));

    out.push_back(make("HYPER_R", "D_k = k! sum (-1)^j binom(r, k-j) H_{j+1}^(r) for every r >= 0", S, CheckMode::SCALAR_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k)
            for (int r = 0; r <= g.max_r; ++r)
                rec.expect_eq(daehee_number(k),
                              fact(k) * rat_sum(0, k, [&](int j) { return sign(j) * binom(r, k - j) * hyperharmonic_number(j + 1, r); }),
                              {{"k", k}, {"r", r}});
    }));

    out.push_back(make("DBINOM_H", "d/dx binom(x, k+1) = sum (-1)^j binom(x+1, k-j) H_{j+1}", S, CheckMode::POLY_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k)
            rec.expect_eq(dbinom(0, k + 1), poly_sum(0, k, [&](int j) { return binom_poly(1, k - j) * (sign(j) * H(j + 1)); }),
                          {{"k", k}});
    }));

    out.push_back(make("CAN2", "sum signed[k+1 j+1] B_j(x) = (-1)^k k! H_k(x), with its x = 0 case", S, CheckMode::POLY_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            rec.expect_eq(poly_sum(0, k, [&](int j) { return bernoulli_poly(j) * s1s(k + 1, j + 1); }),
                          (sign(k) * fact(k)) * harmonic_poly(k), {{"k", k}, {"form", "poly"}});
            rec.expect_eq(rat_sum(0, k, [&](int j) { return sign(j) * s1u(k + 1, j + 1) * bernoulli_number(j); }),
                          fact(k) * H(k + 1), {{"k", k}, {"form", "x = 0"}});
        }
    }));

    out.push_back(make("HPD", "H_k(x) = (-1)^k d/dx binom(x-1, k+1); H_k(1) = 1/(k+1)", S, CheckMode::POLY_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            rec.expect_eq(harmonic_poly(k), sign(k) * dbinom(-1, k + 1), {{"k", k}, {"form", "poly"}});
            rec.expect_eq(eval(harmonic_poly(k), 1), frac(1, k + 1), {{"k", k}, {"form", "x = 1"}});
        }
    }));
}

}  // namespace daehee::verify
