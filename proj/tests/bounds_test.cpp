#include <chordal_forge/bounds.hpp>
#include <chordal_forge/errors.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace chordal_forge;

TEST(Turan, Numbers)
{
    EXPECT_EQ(turan_number(2, 6), 9);
    EXPECT_EQ(turan_number(3, 7), 16);
    EXPECT_EQ(turan_number(3, 6), 12);
    EXPECT_EQ(turan_number(1, 5), 0);
    EXPECT_EQ(turan_number(9, 5), 10);
    EXPECT_EQ(turan_part_sizes(3, 7), (std::vector<int>{ 3, 2, 2 }));
    EXPECT_EQ(turan_part_sizes(4, 2), (std::vector<int>{ 1, 1, 0, 0 }));
}

TEST(Turan, ThreePartiteIncrements)
{
    for (int n = 5 ; n <= 200 ; ++n)
        EXPECT_EQ(turan_number(3, n) - turan_number(3, n - 1), 2 * n / 3) << "n=" << n;
}

TEST(Turan, TwoPartiteClosedForm)
{
    for (int n = 0 ; n <= 300 ; ++n)
        EXPECT_EQ(turan_number(2, n), static_cast<Count>(n) * n / 4);
}

TEST(G1, Values)
{
    EXPECT_EQ(g1(1), 2);
    EXPECT_EQ(g1(6), 5);
    EXPECT_EQ(g1(7), 6);
    EXPECT_EQ(g1(9), 6);
    EXPECT_EQ(g1(10), 7);
    for (Count m = 1 ; m <= 5000 ; ++m) {
        int r = g1(m);
        EXPECT_GE(turan_number(2, r), m);
        EXPECT_LT(turan_number(2, r - 1), m);
    }
}

TEST(G2, Examples)
{
    auto w = g2(6, 10);
    EXPECT_EQ(w.value, 11);
    EXPECT_EQ(w.t, 3);
    EXPECT_EQ(w.r, 2);

    auto v = g2(4, 5);
    EXPECT_EQ(v.value, 8);
    EXPECT_EQ(v.t, 2);
    EXPECT_EQ(v.r, 2);

    EXPECT_THROW(g2(6, 9), PreconditionError);
}

TEST(G2, AtThreshold)
{
    for (int n = 4 ; n <= 60 ; ++n)
        EXPECT_EQ(g2(n, turan_number(2, n) + 1).value, 2 * n - (n + 1) / 2 + 2) << "n=" << n;
}

// Brute force over a much wider domain than the production search.
TEST(G2, MatchesWideSearch)
{
    for (int n = 4 ; n <= 25 ; ++n)
        for (Count m = turan_number(2, n) + 1 ; m <= turan_number(3, n) ; ++m) {
            Count best = -1;
            for (int t = 0 ; t <= 3 * n ; ++t)
                for (int r = 0 ; r <= 3 * n ; ++r)
                    if (static_cast<Count>(t) * (n - t) + turan_number(2, r) >= m) {
                        Count value = 2 * n - t + r;
                        if (best < 0 || value < best)
                            best = value;
                    }
            auto w = g2(n, m);
            ASSERT_EQ(w.value, best) << "n=" << n << " m=" << m;
            ASSERT_GE(static_cast<Count>(w.t) * (n - w.t) + turan_number(2, w.r), m);
            ASSERT_EQ(w.value, 2 * n - w.t + w.r);
        }
}

TEST(G3, Values)
{
    EXPECT_EQ(g3(5), 15);
    EXPECT_EQ(g3(6), 18);
    for (int n = 5 ; n <= 200 ; ++n) {
        Count step = g3(n) - g3(n - 1);
        EXPECT_EQ(step, n % 3 == 1 ? 2 : 3) << "n=" << n;
    }
}

TEST(GeneralTarget, Arithmetic)
{
    EXPECT_NEAR(general_target({ 1, 10, 4, 0 }), 4.0 - 1.0, 1e-9);
    EXPECT_NEAR(general_target({ 3, 900, 1, 0 }), 2400.0 + std::sqrt(8.0 / 3.0) - 6.0, 1e-9);
    EXPECT_NEAR(general_target({ 2, 100, 50, 1 }), 150.0 + std::sqrt(150.0) - 10.0 - 3.0, 1e-9);
    EXPECT_NEAR(general_target({ 3, 900, 1, 0 }), 2395.63, 0.01);
}

TEST(TuranPlusEdge, Value)
{
    EXPECT_EQ(turan_plus_edge_value(2, 6), 8);
    EXPECT_EQ(turan_plus_edge_value(3, 6), 12);
    for (int n = 5 ; n <= 100 ; ++n)
        EXPECT_EQ(turan_plus_edge_value(3, n), g3(n) - 6);
}

TEST(Conjecture, AgreesWithG2ForTwoClasses)
{
    for (int n = 4 ; n <= 30 ; ++n)
        for (Count m = turan_number(2, n) + 1 ; m <= turan_number(3, n) ; ++m)
            EXPECT_EQ(conjecture_bound(2, n, m).value, g2(n, m).value - 3) << "n=" << n << " m=" << m;
}
