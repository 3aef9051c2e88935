/**
 * @file checks_rstirling.hpp
 * @brief RSTIRLING suite: r-Stirling numbers, the r-generalized Bernoulli
 * transforms, poly-Bernoulli numbers with negative index and related closing
 * identities.
 *
 * rs1u(k, j, r) denotes [k+r j+r]_r (see stirling.hpp for the convention).
 */
#pragma once

#include <algorithm>
#include <vector>

#include "../sequences.hpp"
#include "../series.hpp"
#include "support.hpp"

namespace daehee::verify {

namespace detail {

/// Li_1(1 - e^-t) / (1 - e^-t) * e^(xt), built from its definition as a
/// power series in u = 1 - e^-t.
inline TruncSeries polybernoulli_p1_egf(const Rat& x, int order) {
    TruncSeries u = -series_exp(-1, order);
    u[0] += 1;
    TruncSeries acc(order);
    TruncSeries power = TruncSeries::one(order);
    for (int m = 1; m <= order + 1; ++m) {
        acc += power * Rat(1, BigInt(m));
        power = series_mul(power, u);
    }
    return series_mul(acc, series_exp(x, order));
}

}  // namespace detail

inline void add_rstirling_checks(std::vector<IdentityCheck>& out) {
    using namespace support;
    constexpr auto S = Suite::RSTIRLING;

    out.push_back(make("RSTIR_EGF", "r-Stirling exponential generating functions against the recurrence tables", S,
                       CheckMode::SERIES_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        const int n_hi = std::min(g.max_k, g.order);
        for (int r = 0; r <= g.max_r; ++r) {
            for (int k = 0; k <= n_hi; ++k) {
                const auto first = gf_build(gf::RStirling1{k, r}, n_hi);
                const auto second = gf_build(gf::RStirling2{k, r}, n_hi);
                for (int n = 0; n <= n_hi; ++n) {
                    rec.expect_eq(egf_coeff(first, n), rs1u(n, k, r), {{"n", n}, {"k", k}, {"r", r}, {"kind", "first"}});
                    rec.expect_eq(egf_coeff(second, n), rs2u(n, k, r), {{"n", n}, {"k", k}, {"r", r}, {"kind", "second"}});
                }
            }
        }
    }));

    out.push_back(make("RSTIR_REDUCE", "r = 0 gives the ordinary numbers; r = 1 gives them shifted by one", S,
                       CheckMode::SCALAR_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int n = 0; n <= g.max_k; ++n) {
            for (int k = 0; k <= n; ++k) {
                rec.expect_eq(rs1u(n, k, 0), s1u(n, k), {{"n", n}, {"k", k}, {"r", 0}, {"kind", "first"}});
                rec.expect_eq(rs2u(n, k, 0), s2u(n, k), {{"n", n}, {"k", k}, {"r", 0}, {"kind", "second"}});
                rec.expect_eq(rs1u(n, k, 1), s1u(n + 1, k + 1), {{"n", n}, {"k", k}, {"r", 1}, {"kind", "first"}});
                rec.expect_eq(rs2u(n, k, 1), s2u(n + 1, k + 1), {{"n", n}, {"k", k}, {"r", 1}, {"kind", "second"}});
            }
        }
    }));

    out.push_back(make("RSTIR_ORTH", "r-Stirling orthogonality, all four forms", S, CheckMode::SCALAR_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int r = 0; r <= g.max_r; ++r) {
            for (int i = 0; i <= g.max_k; ++i) {
                for (int j = 0; j <= g.max_k; ++j) {
                    const Rat d = delta(i, j);
                    rec.expect_eq(rat_sum(0, i, [&](int s) { return rs2u(i, s, r) * rs1s(s, j, r); }), d,
                                  {{"i", i}, {"j", j}, {"r", r}, {"form", 1}});
                    rec.expect_eq(rat_sum(0, i, [&](int s) { return rs1s(i, s, r) * rs2u(s, j, r); }), d,
                                  {{"i", i}, {"j", j}, {"r", r}, {"form", 2}});
                    rec.expect_eq(rat_sum(0, i, [&](int s) { return rs2s(i, s, r) * rs1u(s, j, r); }), d,
                                  {{"i", i}, {"j", j}, {"r", r}, {"form", 3}});
                    rec.expect_eq(rat_sum(0, i, [&](int s) { return rs1u(i, s, r) * rs2s(s, j, r); }), d,
                                  {{"i", i}, {"j", j}, {"r", r}, {"form", 4}});
                }
            }
        }
    }));

    out.push_back(make("SGEN1", "sum [k+r j+r]_r B_j(x) = k! H_{k+1}^(x+r-1)", S, CheckMode::POLY_EQ, double_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int r = 0; r <= g.max_r; ++r)
            for (int k = 0; k <= g.max_k; ++k)
                rec.expect_eq(poly_sum(0, k, [&](int j) { return bernoulli_poly(j) * rs1u(k, j, r); }),
                              fact(k) * hyper_at(k + 1, 1, r - 1), {{"k", k}, {"r", r}});
    }));

    out.push_back(make("SGEN2", "sum signed[k+r j+r]_r B_j(x) = (-1)^k k! H_k(x-r+1)", S, CheckMode::POLY_EQ, double_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int r = 0; r <= g.max_r; ++r)
            for (int k = 0; k <= g.max_k; ++k)
                rec.expect_eq(poly_sum(0, k, [&](int j) { return bernoulli_poly(j) * rs1s(k, j, r); }),
                              (sign(k) * fact(k)) * harmonic_at(k, 1, 1 - r), {{"k", k}, {"r", r}});
    }));

    out.push_back(make("SGEN3", "B_k(x) = sum j! signed{k+r j+r}_r H_{j+1}^(x+r-1)", S, CheckMode::POLY_EQ, double_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int r = 0; r <= g.max_r; ++r)
            for (int k = 0; k <= g.max_k; ++k)
                rec.expect_eq(bernoulli_poly(k),
                              poly_sum(0, k, [&](int j) { return hyper_at(j + 1, 1, r - 1) * (fact(j) * rs2s(k, j, r)); }),
                              {{"k", k}, {"r", r}});
    }));

    out.push_back(make("SGEN4", "B_k(x) = sum (-1)^j j! {k+r j+r}_r H_j(x-r+1)", S, CheckMode::POLY_EQ, double_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int r = 0; r <= g.max_r; ++r)
            for (int k = 0; k <= g.max_k; ++k)
                rec.expect_eq(bernoulli_poly(k),
                              poly_sum(0, k, [&](int j) { return harmonic_at(j, 1, 1 - r) * (sign(j) * fact(j) * rs2u(k, j, r)); }),
                              {{"k", k}, {"r", r}});
    }));

    out.push_back(make("SGEN_REDUCE", "r = 1 and r = 0 reductions of the r-generalized transforms", S, CheckMode::POLY_EQ,
                       double_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            rec.expect_eq(fact(k) * hyper_at(k + 1, 1, 0),
                          poly_sum(0, k, [&](int j) { return bernoulli_poly(j) * s1u(k + 1, j + 1); }), {{"k", k}, {"form", "r=1 first"}});
            rec.expect_eq((sign(k) * fact(k)) * harmonic_at(k, 1, 0),
                          poly_sum(0, k, [&](int j) { return bernoulli_poly(j) * s1s(k + 1, j + 1); }), {{"k", k}, {"form", "r=1 signed"}});
            rec.expect_eq(fact(k) * hyper_at(k + 1, 1, -1), daehee2_poly(k), {{"k", k}, {"form", "r=0 first"}});
            rec.expect_eq((sign(k) * fact(k)) * harmonic_at(k, 1, 1), daehee_poly(k), {{"k", k}, {"form", "r=0 signed"}});
            rec.expect_eq(poly_sum(0, k, [&](int j) { return hyper_at(j + 1, 1, -1) * (fact(j) * s2s(k, j)); }),
                          poly_sum(0, k, [&](int j) { return daehee2_poly(j) * s2s(k, j); }), {{"k", k}, {"form", "r=0 inverse"}});
            rec.expect_eq(poly_sum(0, k, [&](int j) { return harmonic_at(j, 1, 1) * (sign(j) * fact(j) * s2u(k, j)); }),
                          poly_sum(0, k, [&](int j) { return daehee_poly(j) * s2u(k, j); }),
                          {{"k", k}, {"form", "r=0 signed inverse"}});
        }
    }));

    out.push_back(make("KARGIN_P1", "p = 1 case: B_k^(1)(x) = B_k(x+1) from its generating function, and the shift to SGEN1",
                       S, CheckMode::POLY_EQ, double_sum(), [](const Ranges& g, Recorder& rec) {
        const int n = std::min(g.max_k, g.order);
        for (const auto& x : g.x_samples) {
            const auto s = detail::polybernoulli_p1_egf(x, n);
            for (int k = 0; k <= n; ++k)
                rec.expect_eq(egf_coeff(s, k), eval(bernoulli_poly(k), x + Rat(1)), {{"k", k}, {"x", x}, {"form", "egf"}});
        }
        for (int r = 0; r <= g.max_r; ++r) {
            for (int k = 0; k <= g.max_k; ++k) {
                const Poly p1 = poly_sum(0, k, [&](int j) { return shift(bernoulli_poly(j), 1) * rs1u(k, j, r); });
                rec.expect_eq(p1, fact(k) * hyper_at(k + 1, 1, r), {{"k", k}, {"r", r}, {"form", "p = 1"}});
                rec.expect_eq(shift(p1, -1), poly_sum(0, k, [&](int j) { return bernoulli_poly(j) * rs1u(k, j, r); }),
                              {{"k", k}, {"r", r}, {"form", "x -> x-1"}});
                for (int m = 0; m <= 3; ++m)
                    rec.expect_eq(gen_hyperharmonic(k + 1, 1, m + r), eval(hyperharmonic_poly(k + 1), m + r),
                                  {{"k", k}, {"r", r}, {"x", m}, {"form", "generalized"}});
            }
        }
    }));

    out.push_back(make("BENYI", "sum [k+1 j+1] B_j^(p) = k! H_{k+1}^(p,1) for p in {1, -1, -2, -3}", S, CheckMode::SCALAR_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int p : {1, -1, -2, -3}) {
            for (int k = 0; k <= g.max_k; ++k) {
                const Rat lhs = rat_sum(0, k, [&](int j) {
                    const Rat b = p == 1 ? eval(bernoulli_poly(j), 1) : polybernoulli_neg(j, -p);
                    return s1u(k + 1, j + 1) * b;
                });
                rec.expect_eq(lhs, fact(k) * gen_hyperharmonic(k + 1, p, 1), {{"k", k}, {"p", p}});
            }
        }
    }));

    out.push_back(make("BENYI2", "S_k(n) = 1/(n-1)! sum [n j+1] B_j^(-k), k <= 6, n <= 8", S, CheckMode::SCALAR_EQ,
                       single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= std::min(g.max_k, 6); ++k) {
            BigInt direct;
            for (int n = 1; n <= 8; ++n) {
                direct += ipow(BigInt(n), static_cast<unsigned long>(k));
                const Rat rhs = rat_sum(0, n - 1, [&](int j) { return s1u(n, j + 1) * polybernoulli_neg(j, k); }) / fact(n - 1);
                rec.expect_eq(rhs, Rat(direct), {{"k", k}, {"n", n}, {"form", "direct"}});
                rec.expect_eq(rhs, eval(power_sum_poly(k), n), {{"k", k}, {"n", n}, {"form", "S_k"}});
                rec.expect_eq(gen_hyperharmonic(n, -k, 1), Rat(direct), {{"k", k}, {"n", n}, {"form", "generalized"}});
            }
        }
    }));

    out.push_back(make("BK_RSTIR", "B_k = sum (-1)^j j! {k+r j+r}_r H_{j+1}^(r)", S, CheckMode::SCALAR_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int r = 0; r <= g.max_r; ++r)
            for (int k = 0; k <= g.max_k; ++k)
                rec.expect_eq(bernoulli_number(k),
                              rat_sum(0, k, [&](int j) { return sign(j) * fact(j) * rs2u(k, j, r) * hyperharmonic_number(j + 1, r); }),
                              {{"k", k}, {"r", r}});
    }));

    out.push_back(make("GUO", "B_k(r) = sum (-1)^j j!/(j+1) {k+r j+r}_r", S, CheckMode::SCALAR_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int r = 0; r <= g.max_r; ++r)
            for (int k = 0; k <= g.max_k; ++k)
                rec.expect_eq(eval(bernoulli_poly(k), r),
                              rat_sum(0, k, [&](int j) { return sign(j) * fact(j) / Rat(j + 1) * rs2u(k, j, r); }),
                              {{"k", k}, {"r", r}});
    }));

    out.push_back(make("RSTIR_HH", "n! H_n^(r) = [n+r r+1]_r and (k+1) second kind_k(r+1) = [k+r+1 r+1]_r", S,
                       CheckMode::SCALAR_EQ, single_sum(), [](const Ranges& g, Recorder& rec) {
        for (int r = 0; r <= g.max_r; ++r) {
            for (int n = 0; n <= g.max_k + 1; ++n)
                rec.expect_eq(fact(n) * hyperharmonic_number(n, r), rs1u(n, 1, r), {{"n", n}, {"r", r}, {"form", "hyperharmonic"}});
            for (int k = 0; k <= g.max_k; ++k)
                rec.expect_eq(Rat(k + 1) * eval(daehee2_poly(k), r + 1), rs1u(k + 1, 1, r),
                              {{"k", k}, {"r", r}, {"form", "second kind"}});
        }
    }));

    out.push_back(make("BKR1", "B_k(r+1) = sum 1/(j+1) signed{k j} [j+r+1 r+1]_r", S, CheckMode::SCALAR_EQ, single_sum(),
                       [](const Ranges& g, Recorder& rec) {
        for (int r = 0; r <= g.max_r; ++r)
            for (int k = 0; k <= g.max_k; ++k)
                rec.expect_eq(eval(bernoulli_poly(k), r + 1),
                              rat_sum(0, k, [&](int j) { return s2s(k, j) / Rat(j + 1) * rs1u(j + 1, 1, r); }),
                              {{"k", k}, {"r", r}});
    }));

    out.push_back(make("FINAL", "B_k(x) = sum j! {k+r j+r}_r sum_i (-1)^i binom(x-r+1, j-i) H_{i+1}, and its r = 1 case", S,
                       CheckMode::POLY_EQ, double_sum(), [](const Ranges& g, Recorder& rec) {
        for (int k = 0; k <= g.max_k; ++k) {
            for (int r = 0; r <= g.max_r; ++r) {
                const Poly rhs = poly_sum(0, k, [&](int j) {
                    const Poly inner = poly_sum(0, j, [&](int i) { return binom_poly(1 - r, j - i) * (sign(i) * H(i + 1)); });
                    return inner * (fact(j) * rs2u(k, j, r));
                });
                rec.expect_eq(bernoulli_poly(k), rhs, {{"k", k}, {"r", r}});
            }
            const Poly r1 = poly_sum(0, k, [&](int j) {
                const Poly inner = poly_sum(0, j, [&](int i) { return binom_poly(0, j - i) * (sign(i) * H(i + 1)); });
                return inner * (fact(j) * s2u(k + 1, j + 1));
            });
            rec.expect_eq(bernoulli_poly(k), r1, {{"k", k}, {"form", "r = 1"}});
        }
    }));
}

}  // namespace daehee::verify
