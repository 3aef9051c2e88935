#include <gtest/gtest.h>

#include <random>
#include <thread>
#include <vector>

#include "daehee/sequences.hpp"
#include "daehee/stirling.hpp"
#include "test_support.hpp"

using namespace daehee;
using testing_support::P;

namespace {

using Rows = std::vector<std::vector<long>>;

void expect_rows(const Rows& rows, auto entry) {
    for (std::size_t n = 0; n < rows.size(); ++n)
        for (std::size_t k = 0; k < rows[n].size(); ++k)
            EXPECT_EQ(entry(static_cast<int>(n), static_cast<int>(k)), rows[n][k]) << "n=" << n << " k=" << k;
}

}  // namespace

TEST(Stirling, Examples) {
    EXPECT_EQ(stirling1_unsigned(4, 2), 11);
    EXPECT_EQ(stirling2(4, 2), 7);
    EXPECT_EQ(stirling1_signed(4, 2), 11);
    EXPECT_EQ(stirling1_signed(4, 3), -6);
    EXPECT_EQ(stirling2_signed(4, 3), -6);
    EXPECT_EQ(stirling2(0, 0), 1);
    EXPECT_EQ(stirling2(3, 0), 0);
    EXPECT_EQ(stirling2(2, 5), 0);
    EXPECT_EQ(stirling1_unsigned(-1, 0), 0);
}

TEST(Stirling, RStirlingExamples) {
    // {3 2}_2 unshifted is the shifted entry (1, 0) at r = 2.
    EXPECT_EQ(rstirling2(1, 0, 2), 2);
    EXPECT_EQ(rstirling1(0, 0, 5), 1);
    EXPECT_EQ(rstirling2(0, 3, 5), 0);
    EXPECT_THROW(rstirling1(2, 1, -1), domain_error);
}

TEST(Stirling, FirstKindTable) {
    expect_rows({{1}, {0, 1}, {0, 1, 1}, {0, 2, 3, 1}, {0, 6, 11, 6, 1}, {0, 24, 50, 35, 10, 1},
                 {0, 120, 274, 225, 85, 15, 1}},
                [](int n, int k) { return stirling1_unsigned(n, k); });
}

TEST(Stirling, SecondKindTable) {
    expect_rows({{1}, {0, 1}, {0, 1, 1}, {0, 1, 3, 1}, {0, 1, 7, 6, 1}, {0, 1, 15, 25, 10, 1},
                 {0, 1, 31, 90, 65, 15, 1}},
                [](int n, int k) { return stirling2(n, k); });
}

TEST(Stirling, ShiftedRStirlingTables) {
    expect_rows({{1}, {2, 1}, {6, 5, 1}, {24, 26, 9, 1}, {120, 154, 71, 14, 1}},
                [](int n, int k) { return rstirling1(n, k, 2); });
    expect_rows({{1}, {2, 1}, {4, 5, 1}, {8, 19, 9, 1}, {16, 65, 55, 14, 1}},
                [](int n, int k) { return rstirling2(n, k, 2); });
    expect_rows({{1}, {3, 1}, {12, 7, 1}, {60, 47, 12, 1}, {360, 342, 119, 18, 1}},
                [](int n, int k) { return rstirling1(n, k, 3); });
}

TEST(Stirling, RZeroIsClassicalAndROneIsShifted) {
    for (int n = 0; n <= 14; ++n) {
        for (int k = 0; k <= n; ++k) {
            EXPECT_EQ(rstirling1(n, k, 0), stirling1_unsigned(n, k));
            EXPECT_EQ(rstirling2(n, k, 0), stirling2(n, k));
            EXPECT_EQ(rstirling1(n, k, 1), stirling1_unsigned(n + 1, k + 1));
            EXPECT_EQ(rstirling2(n, k, 1), stirling2(n + 1, k + 1));
        }
    }
}

TEST(Stirling, RowSums) {
    const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (int n = 0; n <= 8; ++n) {
        BigInt s1 = 0, s2 = 0;
        for (int k = 0; k <= n; ++k) {
            s1 += stirling1_unsigned(n, k);
            s2 += stirling2(n, k);
        }
        EXPECT_EQ(s1, factorial(n));
        EXPECT_EQ(s2, bell[n]);
    }
    // sum_k s(n, k) is the falling factorial (1)_n, zero from n = 2 on
    for (int n = 2; n <= 20; ++n) {
        BigInt alternating = 0;
        for (int k = 0; k <= n; ++k) alternating += stirling1_signed(n, k);
        EXPECT_EQ(alternating, 0);
    }
}

TEST(Stirling, Orthogonality) {
    for (int r = 0; r <= 3; ++r) {
        for (int n = 0; n <= 18; ++n) {
            for (int m = 0; m <= n; ++m) {
                BigInt a = 0, b = 0;
                for (int k = m; k <= n; ++k) {
                    a += rstirling1_signed(n, k, r) * rstirling2(k, m, r);
                    b += rstirling2_signed(n, k, r) * rstirling1(k, m, r);
                }
                EXPECT_EQ(a, kronecker(n, m)) << "r=" << r << " n=" << n << " m=" << m;
                EXPECT_EQ(b, kronecker(n, m)) << "r=" << r << " n=" << n << " m=" << m;
            }
        }
    }
}

TEST(Stirling, LargeEntriesAreExact) {
    // [30 1] = 29!
    EXPECT_EQ(stirling1_unsigned(30, 1), factorial(29));
    // {n 2} = 2^(n-1) - 1
    EXPECT_EQ(stirling2(60, 2), ipow(BigInt(2), 59) - 1);
}

TEST(Stirling, ConcurrentReadersAgree) {
    std::vector<std::vector<BigInt>> seen(8);
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < 8; ++t) {
            pool.emplace_back([t, &seen] {
                const int r = 7 + t % 2;
                for (int n = 0; n <= 40; ++n) seen[static_cast<std::size_t>(t)].push_back(rstirling1(n, n / 2, r));
            });
        }
    }
    for (int t = 2; t < 8; ++t) EXPECT_EQ(seen[static_cast<std::size_t>(t)], seen[static_cast<std::size_t>(t % 2)]);
}

TEST(StirlingWeight, InverseFlipsKindAndSign) {
    EXPECT_EQ(StirlingWeight::s2().inverse(), StirlingWeight::s1_signed());
    EXPECT_EQ(StirlingWeight::s1().inverse(), StirlingWeight::s2_signed());
    EXPECT_EQ(StirlingWeight::rs1(3, true).inverse(), StirlingWeight::rs2(3, false));
    EXPECT_EQ(StirlingWeight::rs2(2).inverse().inverse(), StirlingWeight::rs2(2));
}

TEST(StirlingTransform, DaeheeToBernoulli) {
    const std::vector<Poly> d = {P({"1"}), P({"-1/2", "1"}), P({"2/3", "-2", "1"}), P({"-3/2", "11/2", "-9/2", "1"})};
    const auto b = stirling_transform(d, StirlingWeight::s2());
    ASSERT_EQ(b.size(), 4u);
    EXPECT_EQ(b[0], P({"1"}));
    EXPECT_EQ(b[1], P({"-1/2", "1"}));
    EXPECT_EQ(b[2], P({"1/6", "-1", "1"}));
    EXPECT_EQ(b[3], P({"0", "1/2", "-3/2", "1"}));
    EXPECT_EQ(inverse_stirling_transform(b, StirlingWeight::s2()), d);
}

TEST(StirlingTransform, ZeroSequenceAndEmptyInput) {
    const std::vector<Poly> zeros(6);
    for (const auto w : {StirlingWeight::s1(), StirlingWeight::s2_signed(), StirlingWeight::rs2(2)})
        EXPECT_EQ(stirling_transform(zeros, w), zeros);
    EXPECT_TRUE(stirling_transform(std::vector<Poly>{}, StirlingWeight::s1()).empty());
}

TEST(StirlingTransform, RoundTripOnRandomSequences) {
    std::mt19937 gen(99);
    const StirlingWeight weights[] = {StirlingWeight::s1(),      StirlingWeight::s1_signed(), StirlingWeight::s2(),
                                      StirlingWeight::s2_signed(), StirlingWeight::rs1(1),      StirlingWeight::rs2(2, true),
                                      StirlingWeight::rs1(3, true), StirlingWeight::rs2(4)};
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Poly> seq;
        const int len = 1 + trial % 12;
        for (int i = 0; i < len; ++i) seq.push_back(testing_support::random_poly(gen, 4));
        for (const auto w : weights) {
            EXPECT_EQ(inverse_stirling_transform(stirling_transform(seq, w), w), seq);
            EXPECT_EQ(stirling_transform(inverse_stirling_transform(seq, w), w), seq);
        }
    }
}

TEST(StirlingTransform, DaeheeFamilyRoundTrip) {
    std::vector<Poly> d, b;
    for (int k = 0; k <= 12; ++k) {
        d.push_back(daehee_poly(k));
        b.push_back(bernoulli_poly(k));
    }
    EXPECT_EQ(stirling_transform(b, StirlingWeight::s1_signed()), d);
    EXPECT_EQ(stirling_transform(d, StirlingWeight::s2()), b);
}
