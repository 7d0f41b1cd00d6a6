#include <chordal_forge/bounds.hpp>
#include <chordal_forge/chordality.hpp>
#include <chordal_forge/constructions.hpp>
#include <chordal_forge/errors.hpp>
#include <chordal_forge/oracle.hpp>

#include <gtest/gtest.h>

using namespace chordal_forge;

auto oracle_value(const Construction & c) -> Count
{
    OracleOptions options;
    options.independent_parts = c.independent_parts;
    return max_chordal_subgraph(c.graph, options).max_edges;
}

auto parts_are_independent(const Construction & c) -> bool
{
    std::vector<int> seen(c.graph.n(), 0);
    for (auto & part : c.independent_parts)
        for (auto v : part) {
            ++seen[v];
            for (auto w : part)
                if (c.graph.adjacent(v, w))
                    return false;
        }
    for (auto s : seen)
        if (s != 1)
            return false;
    return true;
}

TEST(TuranGraph, Examples)
{
    EXPECT_EQ(turan_graph(2, 4).graph.m(), 4);
    EXPECT_EQ(turan_graph(3, 6).graph.m(), 12);
    auto t37 = turan_graph(3, 7);
    EXPECT_EQ(t37.graph.m(), 16);
    EXPECT_TRUE(parts_are_independent(t37));
    EXPECT_EQ(turan_graph(5, 3).graph.m(), 3);
}

TEST(TuranGraph, EdgeCountsMatchFormula)
{
    for (int n = 1 ; n <= 200 ; n += (n < 40 ? 1 : 13))
        for (int k = 1 ; k <= n ; k += (k < 10 ? 1 : 17))
            ASSERT_EQ(turan_graph(k, n).graph.m(), turan_number(k, n)) << "k=" << k << " n=" << n;
}

TEST(TuranPlusEdge, Examples)
{
    auto t26 = turan_plus_edge(2, 6);
    EXPECT_EQ(t26.graph.m(), 10);
    EXPECT_TRUE(t26.graph.adjacent(0, 1));
    EXPECT_EQ(turan_plus_edge(1, 2).graph.m(), 1);
    EXPECT_EQ(turan_plus_edge(3, 6).graph.m(), 13);
    EXPECT_EQ(turan_plus_edge(3, 9).graph.m(), 28);
    EXPECT_THROW(turan_plus_edge(3, 3), PreconditionError);
}

TEST(TuranPlusEdge, OracleValues)
{
    EXPECT_EQ(oracle_value(turan_plus_edge(2, 6)), 8);
    EXPECT_EQ(oracle_value(turan_plus_edge(3, 6)), 12);
}

TEST(K1Isolated, Examples)
{
    auto a = k1_isolated(5, 3);
    EXPECT_EQ(a.graph.m(), 4);
    EXPECT_EQ(a.r, 4);
    EXPECT_EQ(oracle_value(a), 3);

    EXPECT_EQ(k1_isolated(2, 1).graph.m(), 1);

    auto b = k1_isolated(6, 6);
    EXPECT_EQ(b.graph.m(), 6);
    EXPECT_EQ(oracle_value(b), 4);
    EXPECT_EQ(oracle_value(b), g1(6) - 1);

    EXPECT_THROW(k1_isolated(4, 5), PreconditionError);
}

TEST(K2Bipartite, Examples)
{
    auto a = k2_bipartite(6, 3, 2);
    EXPECT_EQ(a.graph.m(), 10);
    EXPECT_EQ(k2_chordal_upper_bound(a), 8);
    EXPECT_EQ(oracle_value(a), 8);
    EXPECT_TRUE(parts_are_independent(a));

    EXPECT_EQ(k2_bipartite(4, 4, 0).graph.m(), 0);
    EXPECT_EQ(k2_bipartite(5, 3, 2).graph.m(), 7);
    EXPECT_THROW(k2_bipartite(5, 2, 3), PreconditionError);
    EXPECT_THROW(k2_bipartite(5, 6, 0), PreconditionError);
}

TEST(GeneralFig1, Examples)
{
    auto c = general_fig1(2, 12, 3);
    EXPECT_EQ(c.r, 2);
    EXPECT_EQ(c.part("X").size(), 7);
    EXPECT_EQ(c.part("Y1").size(), 5);
    EXPECT_EQ(c.graph.m(), 39);
    EXPECT_EQ(c.graph.m(), turan_number(2, 12) + 3);
    EXPECT_EQ(fig1_chordal_upper_bound(c), 18);
    EXPECT_TRUE(parts_are_independent(c));

    auto k1 = general_fig1(1, 5, 2);
    EXPECT_EQ(k1.graph.m(), static_cast<Count>(k1.r) * k1.r);
}

TEST(GeneralFig1, StructureAcrossSizes)
{
    for (int k = 2 ; k <= 4 ; ++k)
        for (int n = 3 * k ; n <= 60 ; n += 7)
            for (Count a = 1 ; a <= turan_number(k + 1, n) - turan_number(k, n) ; a += 5) {
                auto c = general_fig1(k, n, a);
                ASSERT_TRUE(c.graph.check_invariants());
                ASSERT_TRUE(parts_are_independent(c));
                int total = 0;
                for (auto & p : c.parts)
                    if (p.name == "X" || p.name.starts_with("Y"))
                        total += p.size();
                ASSERT_EQ(total, n);
                // Sides only differ by one.
                int lo = n, hi = 0;
                for (int i = 1 ; i < k ; ++i) {
                    int s = c.part("Y" + std::to_string(i)).size();
                    lo = std::min(lo, s);
                    hi = std::max(hi, s);
                }
                ASSERT_LE(hi - lo, 1);
            }
}

TEST(Constructions, TuranOracleMatchesForestFormula)
{
    for (int n = 1 ; n <= 6 ; ++n)
        for (int k = 1 ; k <= n + 1 ; ++k) {
            int kk = std::min(k, n);
            auto c = turan_graph(k, n);
            EXPECT_EQ(oracle_value(c), static_cast<Count>(kk - 1) * n - binomial2(kk)) << "k=" << k << " n=" << n;
        }
}

TEST(Constructions, VariantNames)
{
    for (auto v : { Variant::turan, Variant::turan_plus_edge, Variant::k1_isolated, Variant::k2_bipartite, Variant::general_fig1 })
        EXPECT_EQ(parse_variant(variant_name(v)), v);
    EXPECT_THROW(parse_variant("petersen"), PreconditionError);
}
