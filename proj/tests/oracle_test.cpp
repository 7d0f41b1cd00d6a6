#include <chordal_forge/chordality.hpp>
#include <chordal_forge/errors.hpp>
#include <chordal_forge/oracle.hpp>
#include <chordal_forge/random_graphs.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace chordal_forge;
using test_support::complete;
using test_support::cycle;

TEST(MaxChordal, Examples)
{
    EXPECT_EQ(max_chordal_subgraph(cycle(4)).max_edges, 3);
    auto k33 = Graph::from_edge_list(6, { { 0, 3 }, { 0, 4 }, { 0, 5 }, { 1, 3 }, { 1, 4 }, { 1, 5 }, { 2, 3 }, { 2, 4 }, { 2, 5 } });
    EXPECT_EQ(max_chordal_subgraph(k33).max_edges, 5);
    EXPECT_EQ(max_chordal_subgraph(complete(6)).max_edges, 15);
    EXPECT_EQ(max_chordal_subgraph(Graph::empty(3)).max_edges, 0);
}

TEST(MaxChordal, WitnessIsCertified)
{
    Rng rng(17);
    for (int i = 0 ; i < 150 ; ++i) {
        int n = static_cast<int>(uniform(rng, 2, 9));
        auto g = random_graph(n, uniform(rng, 0, std::min<Count>(n * (n - 1) / 2, 16)), rng);
        auto r = max_chordal_subgraph(g);
        ASSERT_TRUE(verify_certificate(g, r.witness));
        ASSERT_EQ(r.witness.edge_count(), r.max_edges);
        ASSERT_EQ(r.max_edges == g.m(), is_chordal(g).chordal);
        ASSERT_GE(r.max_edges, spanning_forest_size(g));
    }
}

TEST(MaxChordal, InvariantUnderRelabelling)
{
    Rng rng(19);
    for (int i = 0 ; i < 60 ; ++i) {
        int n = static_cast<int>(uniform(rng, 3, 8));
        auto g = random_graph(n, uniform(rng, 0, std::min<Count>(n * (n - 1) / 2, 14)), rng);
        auto h = relabel(g, random_permutation(n, rng));
        EXPECT_EQ(max_chordal_subgraph(g).max_edges, max_chordal_subgraph(h).max_edges);
    }
}

TEST(MaxChordal, PartitionHintDoesNotChangeValue)
{
    // K_{2,2,3} with its classes as the hint.
    EdgeList edges;
    int cls[] = { 0, 0, 1, 1, 2, 2, 2 };
    for (Vertex u = 0 ; u < 7 ; ++u)
        for (Vertex v = u + 1 ; v < 7 ; ++v)
            if (cls[u] != cls[v])
                edges.emplace_back(u, v);
    auto g = Graph::from_edge_list(7, edges);
    OracleOptions hinted;
    hinted.independent_parts = { { 0, 1 }, { 2, 3 }, { 4, 5, 6 } };
    EXPECT_EQ(max_chordal_subgraph(g, hinted).max_edges, max_chordal_subgraph(g).max_edges);

    OracleOptions bad;
    bad.independent_parts = { { 0, 2 } };
    EXPECT_THROW(max_chordal_subgraph(g, bad), PreconditionError);
}

TEST(MaxChordal, EdgeCap)
{
    OracleOptions options;
    options.edge_cap = 5;
    EXPECT_THROW(max_chordal_subgraph(complete(4), options), CapExceeded);
}

TEST(FExact, SmallValues)
{
    EXPECT_EQ(f_exact(4, 5).f_exact, 5);
    EXPECT_EQ(f_exact(6, 10).f_exact, 8);
    EXPECT_EQ(f_exact(5, 9).f_exact, 9);
    EXPECT_EQ(f_exact(3, 0).f_exact, 0);
    EXPECT_THROW(f_exact(8, 3), CapExceeded);
    EXPECT_THROW(f_exact(4, 7), PreconditionError);
}

TEST(FExact, WitnessAttainsValue)
{
    for (int n = 2 ; n <= 5 ; ++n)
        for (Count m = 0 ; m <= n * (n - 1) / 2 ; ++m) {
            auto e = f_exact(n, m);
            auto g = Graph::from_edge_list(n, e.extremal_graph);
            ASSERT_EQ(g.m(), m);
            ASSERT_EQ(max_chordal_subgraph(g).max_edges, e.f_exact);
        }
}

TEST(FExact, NonDecreasingInEdges)
{
    for (int n = 2 ; n <= 6 ; ++n) {
        Count previous = 0;
        for (Count m = 0 ; m <= n * (n - 1) / 2 ; ++m) {
            Count value = f_exact(n, m, true).f_exact;
            EXPECT_GE(value, previous) << "n=" << n << " m=" << m;
            previous = value;
        }
    }
}

TEST(FExact, DedupGivesSameEntry)
{
    for (int n = 3 ; n <= 6 ; ++n)
        for (Count m = 0 ; m <= n * (n - 1) / 2 ; m += 2) {
            auto plain = f_exact(n, m);
            auto dedup = f_exact(n, m, true);
            ASSERT_EQ(plain.f_exact, dedup.f_exact);
            ASSERT_EQ(plain.extremal_graph, dedup.extremal_graph);
        }
}

TEST(FExact, ChunksMergeToWhole)
{
    int n = 6;
    Count m = 10;
    auto total = labelled_graph_count(n, m);
    EXPECT_EQ(total, 3003u);
    FChunk merged;
    for (std::uint64_t begin = 0 ; begin < total ; begin += 500)
        merged = merge_chunks(merged, f_exact_chunk(n, m, begin, std::min(total, begin + 500)));
    auto whole = f_exact(n, m);
    EXPECT_TRUE(merged.found);
    EXPECT_EQ(merged.value, whole.f_exact);
    EXPECT_EQ(merged.witness, whole.extremal_graph);
}

TEST(FTable, CachesAndSorts)
{
    FTable table;
    table.get_or_compute(5, 7);
    table.get_or_compute(4, 5);
    EXPECT_EQ(table.entries().size(), 2u);
    EXPECT_EQ(table.entries().front().n, 4);
    auto hit = table.find(5, 7);
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(hit->f_exact, f_exact(5, 7).f_exact);
    EXPECT_FALSE(table.find(6, 1).has_value());
    table.get_or_compute(4, 5);
    EXPECT_EQ(table.entries().size(), 2u);
}
