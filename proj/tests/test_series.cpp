#include <gtest/gtest.h>

#include <random>

#include "daehee/sequences.hpp"
#include "daehee/series.hpp"
#include "daehee/stirling.hpp"
#include "test_support.hpp"

using namespace daehee;
using testing_support::R;

namespace {

TruncSeries S(std::initializer_list<const char*> coeffs) {
    std::vector<Rat> v;
    for (const char* c : coeffs) v.push_back(R(c));
    return TruncSeries(std::move(v));
}

TruncSeries random_series(std::mt19937& gen, int order, bool unit_constant) {
    TruncSeries s(order);
    for (int i = 0; i <= order; ++i) s[i] = testing_support::random_rat(gen, 9, 7);
    if (unit_constant && s[0].is_zero()) s[0] = 1;
    return s;
}

}  // namespace

TEST(TruncSeries, ConstructionAndIndexing) {
    const TruncSeries z(3);
    EXPECT_EQ(z.order(), 3);
    EXPECT_EQ(z.coeffs().size(), 4u);
    EXPECT_EQ(TruncSeries::one(2), S({"1", "0", "0"}));
    EXPECT_THROW((void)z[4], range_error);
    EXPECT_THROW((void)z[-1], range_error);
    EXPECT_THROW(TruncSeries(-1), domain_error);
    EXPECT_THROW(TruncSeries(std::vector<Rat>{}), domain_error);
}

TEST(TruncSeries, MismatchedOrdersAreRejected) {
    EXPECT_THROW(TruncSeries(2) + TruncSeries(3), domain_error);
    EXPECT_THROW(series_mul(TruncSeries(2), TruncSeries(3)), domain_error);
}

TEST(TruncSeries, Primitives) {
    EXPECT_EQ(series_log1p(1, 4), S({"0", "1", "-1/2", "1/3", "-1/4"}));
    EXPECT_EQ(series_log1p(-1, 4), S({"0", "-1", "-1/2", "-1/3", "-1/4"}));
    EXPECT_EQ(series_binom_pow(R("1/2"), 1, 3), S({"1", "1/2", "-1/8", "1/16"}));
    EXPECT_EQ(series_binom_pow(-1, -1, 3), S({"1", "1", "1", "1"}));
    EXPECT_EQ(series_exp(2, 3), S({"1", "2", "2", "4/3"}));
    EXPECT_THROW(series_log1p(2, 3), domain_error);
    EXPECT_THROW(series_binom_pow(1, 0, 3), domain_error);
}

TEST(TruncSeries, MulDivPow) {
    const auto a = S({"1", "1", "0", "0"});
    EXPECT_EQ(series_mul(a, a), S({"1", "2", "1", "0"}));
    EXPECT_EQ(series_div(TruncSeries::one(3), S({"1", "-1", "0", "0"})), S({"1", "1", "1", "1"}));
    EXPECT_EQ(series_pow_int(a, 3), S({"1", "3", "3", "1"}));
    EXPECT_EQ(series_pow_int(a, 0), TruncSeries::one(3));
    EXPECT_THROW(series_div(a, S({"0", "1", "0", "0"})), domain_error);
    EXPECT_THROW(series_pow_int(a, -1), domain_error);
}

TEST(TruncSeries, ShiftDivT) {
    EXPECT_EQ(series_shift_div_t(series_log1p(1, 4)), S({"1", "-1/2", "1/3", "-1/4"}));
    EXPECT_THROW(series_shift_div_t(S({"1", "2"})), domain_error);
    EXPECT_THROW(series_shift_div_t(S({"0"})), domain_error);
}

TEST(TruncSeries, EgfCoeff) {
    const auto e = series_exp(1, 6);
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(egf_coeff(e, k), 1);
    EXPECT_THROW(egf_coeff(e, 7), range_error);
    EXPECT_THROW(egf_coeff(e, -1), range_error);
}

TEST(GfBuild, Examples) {
    const auto d = gf_build(gf::Daehee1{0}, 3);
    EXPECT_EQ(egf_coeff(d, 0), 1);
    EXPECT_EQ(egf_coeff(d, 1), R("-1/2"));
    EXPECT_EQ(egf_coeff(d, 2), R("2/3"));
    EXPECT_EQ(egf_coeff(d, 3), R("-3/2"));
    EXPECT_EQ(gf_build(gf::Harmonic{}, 3), S({"0", "1", "3/2", "11/6"}));
    EXPECT_EQ(gf_build(gf::Hyperharmonic{2}, 3)[3], R("13/3"));
    EXPECT_EQ(gf_build(gf::NorlundNeg{2}, 3), S({"1", "-1", "11/12", "-5/6"}));
    EXPECT_EQ(egf_coeff(gf_build(gf::Daehee2{0}, 3), 3), R("-1/2"));
    EXPECT_EQ(egf_coeff(gf_build(gf::DaeheeOrder{0, 2}, 2), 2), R("11/6"));
    EXPECT_THROW(gf_build(gf::Harmonic{}, -1), domain_error);
    EXPECT_THROW(gf_build(gf::Stirling1{-1}, 3), domain_error);
}

TEST(GfBuild, StirlingColumns) {
    constexpr int N = 20;
    for (int k = 0; k <= 8; ++k) {
        const auto first = gf_build(gf::Stirling1{k}, N);
        const auto second = gf_build(gf::Stirling2{k}, N);
        for (int n = 0; n <= N; ++n) {
            EXPECT_EQ(egf_coeff(first, n), Rat(stirling1_signed(n, k))) << n << "," << k;
            EXPECT_EQ(egf_coeff(second, n), Rat(stirling2(n, k))) << n << "," << k;
        }
    }
}

TEST(GfBuild, RStirlingColumns) {
    constexpr int N = 12;
    for (int r = 0; r <= 3; ++r) {
        for (int k = 0; k <= 5; ++k) {
            const auto first = gf_build(gf::RStirling1{k, r}, N);
            const auto second = gf_build(gf::RStirling2{k, r}, N);
            for (int n = 0; n <= N; ++n) {
                EXPECT_EQ(egf_coeff(first, n), Rat(rstirling1(n, k, r)));
                EXPECT_EQ(egf_coeff(second, n), Rat(rstirling2(n, k, r)));
            }
        }
    }
}

TEST(GfBuild, BernoulliAndPolynomialFamilies) {
    constexpr int N = 14;
    for (const Rat& x : {Rat(0), Rat(1), Rat(-2), R("1/3")}) {
        const auto b = gf_build(gf::Bernoulli{x}, N);
        const auto d1 = gf_build(gf::Daehee1{x}, N);
        const auto d2 = gf_build(gf::Daehee2{x}, N);
        const auto hp = gf_build(gf::HarmonicPoly{x}, N);
        const auto hh = gf_build(gf::Hyperharmonic{x}, N);
        for (int k = 0; k <= N; ++k) {
            EXPECT_EQ(egf_coeff(b, k), eval(bernoulli_poly(k), x));
            EXPECT_EQ(egf_coeff(d1, k), eval(daehee_poly(k), x));
            EXPECT_EQ(egf_coeff(d2, k), eval(daehee2_poly(k), x));
            EXPECT_EQ(hp[k], eval(harmonic_poly(k), x));
            EXPECT_EQ(hh[k], eval(hyperharmonic_poly(k), x));
        }
    }
}

TEST(SeriesProperty, RingLaws) {
    std::mt19937 gen(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const int order = trial % 9;
        const auto a = random_series(gen, order, false);
        const auto b = random_series(gen, order, true);
        const auto c = random_series(gen, order, false);
        EXPECT_EQ(series_div(series_mul(a, b), b), a);
        EXPECT_EQ(series_mul(a, b), series_mul(b, a));
        EXPECT_EQ(series_mul(a, b + c), series_mul(a, b) + series_mul(a, c));
        EXPECT_EQ(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c)));
        EXPECT_EQ(series_pow_int(b, 3), series_mul(b, series_mul(b, b)));
    }
}

TEST(SeriesProperty, ExpAndBinomialPowersMultiply) {
    std::mt19937 gen(4);
    for (int trial = 0; trial < 30; ++trial) {
        const Rat a = testing_support::random_rat(gen, 6, 5);
        const Rat b = testing_support::random_rat(gen, 6, 5);
        EXPECT_EQ(series_mul(series_exp(a, 8), series_exp(b, 8)), series_exp(a + b, 8));
        EXPECT_EQ(series_mul(series_binom_pow(a, 1, 8), series_binom_pow(b, 1, 8)), series_binom_pow(a + b, 1, 8));
    }
}
