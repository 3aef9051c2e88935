/**
 * @file checks_hyperharmonic.hpp
 * @brief HYPERHARMONIC suite: hyperharmonic numbers and polynomials, their
 * links to the Daehee polynomials, negative orders and recurrences.
 */
#pragma once

#include <vector>

#include "../sequences.hpp"
#include "support.hpp"

namespace daehee::verify {

inline void add_hyperharmonic_checks(std::vector<IdentityCheck>& out) {
    using namespace support;
    constexpr auto S = Suite::HYPERHARMONIC;

    out.push_back(make("FRAC", "H_r^(n) = sum_t binom(n+r-t-1, r-t)/t agrees with the partial-sum definition", S,
                       CheckMode::SCALAR_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int r = 1; r <= g.max_k + 1; ++r)
            for (int n = 0; n <= g.max_r; ++n)
                rec.expect_eq(hyperharmonic_number(r, n), rat_sum(1, r, [&](int t) { return binom(n + r - t - 1, r - t) / Rat(t); }),
                              {{"index", r}, {"order", n}});
    }));

    out.push_back(make("TH2", "Daehee polynomials of both kinds as hyperharmonic polynomials, with explicit sums", S,
                       CheckMode::POLY_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Poly neg = hyper_at(k + 1, -1, 0);
            const Poly dec = hyper_at(k + 1, 1, -1);
            rec.expect_eq(daehee_poly(k), sign(k) * fact(k) * neg, {{"k", k}, {"form", "th21"}});
            rec.expect_eq(daehee2_poly(k), fact(k) * dec, {{"k", k}, {"form", "th22"}});
            rec.expect_eq(neg, poly_sum(0, k, [&](int j) { return binom_poly(0, j) * (sign(j) / Rat(k + 1 - j)); }),
                          {{"k", k}, {"form", "th23"}});
            rec.expect_eq(dec, poly_sum(0, k, [&](int j) { return binom_poly(j - 2, j) / Rat(k + 1 - j); }),
                          {{"k", k}, {"form", "th24"}});
        }
    }));

    out.push_back(make("COL1", "H_{k+1}^(x) = d/dx binom(x+k, k+1)", S, CheckMode::POLY_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) rec.expect_eq(hyperharmonic_poly(k + 1), dbinom(k, k + 1), {{"k", k}});
    }));

    out.push_back(make("FRAC3", "H_r^(x) = sum_t binom(x+r-t-2, r-t) H_t, as polynomials and at integer orders", S,
                       CheckMode::POLY_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int r = 1; r <= g.max_k + 1; ++r) {
            rec.expect_eq(hyperharmonic_poly(r), poly_sum(1, r, [&](int t) { return binom_poly(r - t - 2, r - t) * H(t); }),
                          {{"index", r}, {"form", "poly"}});
            for (int n = 0; n <= g.max_r; ++n)
                rec.expect_eq(hyperharmonic_number(r, n), rat_sum(1, r, [&](int t) { return binom(n + r - t - 2, r - t) * H(t); }),
                              {{"index", r}, {"order", n}, {"form", "number"}});
        }
    }));

    out.push_back(make("DIL", "negative-order hyperharmonic numbers: two-case form, polynomial value and three-case form",
                       S, CheckMode::SCALAR_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int idx = 1; idx <= g.max_k + 1; ++idx) {
            const int k = idx - 1;
            const Poly th23 = poly_sum(0, k, [&](int j) { return binom_poly(0, j) * (sign(j) / Rat(k + 1 - j)); });
            for (int n = 1; n <= r_hi(g); ++n) {
                const Rat v = hyperharmonic_neg(idx, n);
                rec.expect_eq(v, eval(th23, n), {{"index", idx}, {"order", -n}, {"form", "th23"}});
                rec.expect_eq(v, eval(hyperharmonic_poly(idx), -n), {{"index", idx}, {"order", -n}, {"form", "poly"}});
                Rat piecewise;
                if (idx == 1) {
                    piecewise = 1;
                } else if (idx > n) {
                    BigInt falling = 1;
                    for (int i = 0; i <= n; ++i) falling *= idx - i;
                    piecewise = sign(n) * fact(n) / Rat(falling);
                } else {
                    piecewise = rat_sum(0, idx - 1, [&](int i) { return sign(i) * binom(n, i) / Rat(idx - i); });
                }
                rec.expect_eq(v, piecewise, {{"index", idx}, {"order", -n}, {"form", "three-case"}});
            }
        }
    }));

    out.push_back(make("DIL3", "H_{k+1}^(-1) = -1/(k(k+1)) for k >= 1, and Daehee numbers at x = 0", S,
                       CheckMode::SCALAR_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Rat expected = k == 0 ? Rat(1) : -frac(1, static_cast<long>(k) * (k + 1));
            rec.expect_eq(hyperharmonic_neg(k + 1, 1), expected, {{"k", k}, {"form", "closed"}});
            rec.expect_eq(daehee2_number(k), fact(k) * hyperharmonic_neg(k + 1, 1), {{"k", k}, {"form", "second kind"}});
            rec.expect_eq(daehee_number(k), sign(k) * fact(k) * hyperharmonic_number(k + 1, 0), {{"k", k}, {"form", "first kind"}});
        }
    }));

    out.push_back(make("REC1", "H_{k+1}^(x) = H_k^(x) + H_{k+1}^(x-1), and the integer recurrence", S, CheckMode::POLY_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k)
            rec.expect_eq(hyperharmonic_poly(k + 1), hyperharmonic_poly(k) + shift(hyperharmonic_poly(k + 1), -1), {{"k", k}});
        for (int n = 1; n <= g.max_k + 1; ++n)
            for (int r = 1; r <= r_hi(g); ++r)
                rec.expect_eq(hyperharmonic_number(n, r), hyperharmonic_number(n - 1, r) + hyperharmonic_number(n, r - 1),
                              {{"n", n}, {"r", r}});
    }));

    out.push_back(make("REC2", "second kind(x+1) = second kind(x) + k second kind_{k-1}(x+1)", S, CheckMode::POLY_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 1; k <= g.max_k; ++k)
            rec.expect_eq(shift(daehee2_poly(k), 1), daehee2_poly(k) + Rat(k) * shift(daehee2_poly(k - 1), 1), {{"k", k}});
    }));

    out.push_back(make("REC3", "D_k(1-x) = D_k(-x) + k D_{k-1}(-x)", S, CheckMode::POLY_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 1; k <= g.max_k; ++k)
            rec.expect_eq(reflect(daehee_poly(k), 1), reflect(daehee_poly(k), 0) + Rat(k) * reflect(daehee_poly(k - 1), 0),
                          {{"k", k}});
    }));

    out.push_back(make("CERE1", "S_k(x) through hyperharmonic polynomials, and its power-sum specialization", S,
                       CheckMode::POLY_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Poly shifted = poly_sum(0, k, [&](int j) { return hyperharmonic_poly(j + 1) * (s2s(k, j) * fact(j)); });
            rec.expect_eq(shift(bernoulli_poly(k), 1), shifted, {{"k", k}, {"form", "B_k(x+1)"}});
            const Poly rhs = (sign(k + 1) / Rat(k + 1)) * poly_sum(0, k + 1, [&](int j) {
                return (hyperharmonic_poly(j + 1) - constant(frac(1, j + 1))) * (sign(j) * fact(j) * s2u(k + 1, j));
            });
            rec.expect_eq(power_sum_poly(k), rhs, {{"k", k}, {"form", "poly"}});
            BigInt direct;
            for (int n = 1; n <= g.max_k + 1; ++n) {
                direct += ipow(BigInt(n), static_cast<unsigned long>(k));
                const Rat value = (sign(k + 1) / Rat(k + 1)) * rat_sum(0, k + 1, [&](int j) {
                    return sign(j) * fact(j) * s2u(k + 1, j) * (hyperharmonic_number(j + 1, n) - frac(1, j + 1));
                });
                rec.expect_eq(value, Rat(direct), {{"k", k}, {"n", n}, {"form", "power sum"}});
            }
        }
    }));

    out.push_back(make("BIN2", "B_k(2) = sum j! signed{k j} H_{j+1} = k + (-1)^k B_k", S, CheckMode::SCALAR_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            const Rat b2 = eval(bernoulli_poly(k), 2);
            rec.expect_eq(b2, rat_sum(0, k, [&](int j) { return fact(j) * s2s(k, j) * H(j + 1); }), {{"k", k}, {"form", "sum"}});
            rec.expect_eq(b2, Rat(k) + sign(k) * bernoulli_number(k), {{"k", k}, {"form", "difference"}});
            rec.expect_eq(eval(daehee2_poly(k), 2), fact(k) * H(k + 1), {{"k", k}, {"form", "second kind at 2"}});
        }
    }));

    out.push_back(make("BKH", "B_k = (-1)^(k+1) k + sum (-1)^j j! {k j} H_{j+1}", S, CheckMode::SCALAR_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k)
            rec.expect_eq(bernoulli_number(k),
                          sign(k + 1) * Rat(k) + rat_sum(0, k, [&](int j) { return sign(j) * fact(j) * s2u(k, j) * H(j + 1); }),
                          {{"k", k}});
    }));

    out.push_back(make("DERHN", "H_n^(x) = d/dx binom(x+n-1, n); values at x = r and the shifted form at 0", S,
                       CheckMode::POLY_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int n = 0; n <= g.max_k + 1; ++n) {
            const Poly d = dbinom(n - 1, n);
            rec.expect_eq(hyperharmonic_poly(n), d, {{"n", n}, {"form", "poly"}});
            for (int r = 0; r <= g.max_r; ++r) {
                rec.expect_eq(eval(d, r), hyperharmonic_number(n, r), {{"n", n}, {"r", r}, {"form", "at r"}});
                rec.expect_eq(eval(dbinom(n + r - 1, n), 0), hyperharmonic_number(n, r), {{"n", n}, {"r", r}, {"form", "at 0"}});
            }
        }
    }));
}

}  // namespace daehee::verify
