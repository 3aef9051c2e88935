#include <gtest/gtest.h>

#include "daehee/format.hpp"
#include "daehee/sequences.hpp"
#include "test_support.hpp"

using namespace daehee;
using testing_support::P;
using testing_support::R;

TEST(Format, Plain) {
    EXPECT_EQ(to_plain(daehee_poly(3)), "x^3 - (9/2)x^2 + (11/2)x - 3/2");
    EXPECT_EQ(to_plain(daehee_poly(2)), "x^2 - 2x + 2/3");
    EXPECT_EQ(to_plain(Poly{}), "0");
    EXPECT_EQ(to_plain(P({"-1"})), "-1");
    EXPECT_EQ(to_plain(P({"0", "-1"})), "-x");
    EXPECT_EQ(to_plain(P({"0", "0", "-1/2"})), "-(1/2)x^2");
}

TEST(Format, Latex) {
    EXPECT_EQ(to_latex(daehee_poly(3)), "x^3 - \\tfrac{9}{2}x^2 + \\tfrac{11}{2}x - \\tfrac{3}{2}");
    EXPECT_EQ(to_latex(harmonic_poly(4)), "\\tfrac{1}{24}x^4 - \\tfrac{1}{2}x^3 + \\tfrac{17}{8}x^2 - \\tfrac{15}{4}x + \\tfrac{137}{60}");
    EXPECT_EQ(to_latex(Poly::monomial(Rat(2), 12)), "2x^{12}");
    EXPECT_EQ(to_latex(R("-5/3")), "-\\tfrac{5}{3}");
    EXPECT_EQ(to_latex(Rat(7)), "7");
}

TEST(Format, PolyJson) {
    EXPECT_EQ(poly_to_json(hyperharmonic_poly(3)).dump(), R"({"var":"x","coeffs":["1/3","1","1/2"]})");
    EXPECT_EQ(poly_to_json(Poly{}).dump(), R"({"var":"x","coeffs":[]})");
}

TEST(Format, JsonRoundTripForEveryPolynomialFamily) {
    for (int k = 0; k <= 10; ++k) {
        const std::vector<Poly> members = {bernoulli_poly(k),        power_sum_poly(k),     daehee_poly(k),
                                           daehee2_poly(k),          daehee_order_r_poly(k, 3), hyperharmonic_poly(k),
                                           harmonic_poly(k)};
        for (const auto& p : members) {
            EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
            EXPECT_EQ(poly_from_json(poly_to_json(p).dump()), p);
        }
    }
}

TEST(Format, MalformedJsonIsRejected) {
    EXPECT_THROW(poly_from_json(std::string("{")), domain_error);
    EXPECT_THROW(poly_from_json(std::string(R"({"var":"x"})")), domain_error);
    EXPECT_THROW(poly_from_json(std::string(R"({"var":"y","coeffs":["1"]})")), domain_error);
    EXPECT_THROW(poly_from_json(std::string(R"({"coeffs":[1]})")), domain_error);
    EXPECT_THROW(poly_from_json(std::string(R"({"coeffs":["1/0"]})")), domain_error);
    EXPECT_EQ(poly_from_json(std::string(R"({"coeffs":["2/4","0"]})")), P({"1/2"}));
}

TEST(Format, Rows) {
    const IntRows rows = {{BigInt(1)}, {BigInt(0), BigInt(1)}, {BigInt(0), BigInt(1), BigInt(1)}};
    EXPECT_EQ(rows_to_csv(rows), "1\n0,1\n0,1,1\n");
    EXPECT_EQ(rows_to_plain(rows), "1\n0 1\n0 1 1\n");
    EXPECT_EQ(rows_to_json(rows).dump(), R"([["1"],["0","1"],["0","1","1"]])");
    EXPECT_EQ(rats_to_json({R("1/2"), Rat(-3)}).dump(), R"(["1/2","-3"])");
}
