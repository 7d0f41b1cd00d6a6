#include <chordal_forge/chordality.hpp>
#include <chordal_forge/errors.hpp>
#include <chordal_forge/random_graphs.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace chordal_forge;
using test_support::complete;
using test_support::cycle;
using test_support::path;

using std::vector;

TEST(IsChordal, SmallExamples)
{
    auto k4 = is_chordal(complete(4));
    EXPECT_TRUE(k4.chordal);
    EXPECT_TRUE(k4.hole.empty());
    vector<Vertex> order{ 0, 1, 2, 3 };
    do
        EXPECT_TRUE(verify_peo(complete(4), order));
    while (std::next_permutation(order.begin(), order.end()));

    auto c4 = is_chordal(cycle(4));
    EXPECT_FALSE(c4.chordal);
    EXPECT_EQ(c4.hole.size(), 4u);
    EXPECT_TRUE(is_induced_hole(cycle(4), c4.hole));

    auto c5 = is_chordal(cycle(5));
    EXPECT_FALSE(c5.chordal);
    EXPECT_EQ(c5.hole.size(), 5u);
}

TEST(VerifyPeo, Examples)
{
    EXPECT_TRUE(verify_peo(path(3), vector<Vertex>{ 0, 2, 1 }));
    EXPECT_FALSE(verify_peo(path(3), vector<Vertex>{ 1, 0, 2 }));

    vector<Vertex> order{ 0, 1, 2, 3 };
    do
        EXPECT_FALSE(verify_peo(cycle(4), order));
    while (std::next_permutation(order.begin(), order.end()));

    EXPECT_THROW(verify_peo(path(3), vector<Vertex>{ 0, 0, 1 }), PreconditionError);
    EXPECT_THROW(verify_peo(path(3), vector<Vertex>{ 0, 1 }), PreconditionError);

    auto k5e = Graph::from_edge_list(5, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 0, 4 }, { 1, 2 }, { 1, 3 }, { 1, 4 }, { 2, 3 }, { 2, 4 } });
    EXPECT_TRUE(is_chordal(k5e).chordal);
    EXPECT_TRUE(verify_peo(k5e, vector<Vertex>{ 3, 4, 0, 1, 2 }));
}

TEST(IsInducedHole, RejectsChordsAndShortCycles)
{
    auto g = Graph::from_edge_list(4, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 0 }, { 0, 2 } });
    EXPECT_FALSE(is_induced_hole(g, vector<Vertex>{ 0, 1, 2, 3 }));
    EXPECT_FALSE(is_induced_hole(complete(3), vector<Vertex>{ 0, 1, 2 }));
    EXPECT_FALSE(is_induced_hole(cycle(4), vector<Vertex>{ 0, 2, 1, 3 }));
}

// Every labelled graph on up to six vertices, plus a sample on seven.
TEST(IsChordal, AgreesWithNaiveChecker)
{
    auto check = [] (const Graph & g) {
        auto w = is_chordal(g);
        ASSERT_EQ(w.chordal, test_support::naive_is_chordal(g));
        if (w.chordal) {
            ASSERT_TRUE(verify_peo(g, w.peo));
            ASSERT_TRUE(w.hole.empty());
        }
        else {
            ASSERT_TRUE(is_induced_hole(g, w.hole));
            ASSERT_TRUE(w.peo.empty());
        }
    };
    for (int n = 1 ; n <= 6 ; ++n) {
        std::uint64_t pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t{ 1 } << pairs) ; ++mask)
            check(test_support::from_mask(n, mask));
    }
    Rng rng(7);
    for (int i = 0 ; i < 20000 ; ++i)
        check(test_support::from_mask(7, rng() & ((std::uint64_t{ 1 } << 21) - 1)));
}

TEST(IsChordal, LargerRandomGraphs)
{
    Rng rng(23);
    for (int i = 0 ; i < 300 ; ++i) {
        int n = static_cast<int>(uniform(rng, 8, 80));
        auto g = random_graph_p(n, uniform(rng, 1, 9) / 10.0, rng);
        auto w = is_chordal(g);
        if (w.chordal)
            EXPECT_TRUE(verify_peo(g, w.peo));
        else
            EXPECT_TRUE(is_induced_hole(g, w.hole));
    }
}

TEST(Builder, CertifiesK4)
{
    auto host = complete(4);
    ChordalBuilder b(host);
    b.add_vertex(0, { }).add_vertex(1, { 0 }).add_vertex(2, { 0, 1 }).add_vertex(3, { 0, 1, 2 });
    auto sub = b.build();
    EXPECT_EQ(sub.edge_count(), 6);
    EXPECT_TRUE(verify_certificate(host, sub));
    EXPECT_EQ(as_graph(sub), host);
}

TEST(Builder, RejectsNonClique)
{
    ChordalBuilder b(cycle(4));
    b.add_vertex(0, { }).add_vertex(1, { 0 });
    EXPECT_THROW(b.add_vertex(2, { 1, 3 }), CertificateError);
}

TEST(Builder, RejectsNonHostEdgesAndRepeats)
{
    ChordalBuilder b(path(4));
    b.add_vertex(0, { }).add_vertex(1, { 0 });
    EXPECT_THROW(b.add_vertex(2, { 0 }), CertificateError);
    EXPECT_THROW(b.add_vertex(1, { }), CertificateError);
}

TEST(Builder, LoneAbsentNeighbourIsAddedFirst)
{
    ChordalBuilder b(path(3));
    b.add_vertex(1, { 0 });
    EXPECT_TRUE(b.contains(0));
    EXPECT_EQ(b.edge_count(), 1);
    EXPECT_TRUE(verify_certificate(path(3), b.build()));
}

// A leaf edge goes, the former leaf is isolated, and nine edges return.
TEST(Builder, LeafSwap)
{
    auto host = complete(6);
    ChordalBuilder b(host);
    b.add_vertex(1, { }).add_vertex(2, { 1 }).add_vertex(3, { 1, 2 }).add_vertex(0, { 1 });
    Count before = b.edge_count();
    b.remove_leaf_edge(0, 1);
    EXPECT_EQ(b.degree(0), 0);
    b.add_vertex(4, { 1, 2, 3 });
    b.add_vertex(5, { 1, 2, 3, 4 });
    b.add_vertex(0, { 1, 2 });
    EXPECT_EQ(b.edge_count() - before, 8);
    auto sub = b.build();
    EXPECT_TRUE(verify_certificate(host, sub));
    EXPECT_TRUE(is_chordal(as_graph(sub)).chordal);

    ChordalBuilder c(host);
    c.add_vertex(0, { }).add_vertex(1, { 0 }).add_vertex(2, { 0, 1 });
    EXPECT_THROW(c.remove_leaf_edge(0, 1), CertificateError);
}

TEST(Builder, RandomGrowthStaysChordal)
{
    Rng rng(41);
    for (int i = 0 ; i < 300 ; ++i) {
        int n = static_cast<int>(uniform(rng, 2, 25));
        auto host = random_graph_p(n, 0.6, rng);
        ChordalBuilder b(host);
        for (auto v : random_permutation(n, rng)) {
            // Greedy clique among present neighbours.
            vector<Vertex> clique;
            for (Vertex w = 0 ; w < n ; ++w)
                if (b.contains(w) && host.adjacent(v, w)
                        && std::all_of(clique.begin(), clique.end(), [&] (Vertex x) { return b.has_edge(x, w); }))
                    clique.push_back(w);
            b.add_vertex(v, clique);
        }
        auto sub = b.build();
        ASSERT_TRUE(verify_certificate(host, sub));
        ASSERT_TRUE(is_chordal(as_graph(sub)).chordal);
        ASSERT_EQ(sub.edge_count(), b.edge_count());
    }
}

TEST(Certificate, DetectsTampering)
{
    auto host = complete(4);
    auto sub = star_union(host, vector<Vertex>{ 0 });
    auto extra = sub;
    extra.edges.emplace_back(1, 2);
    std::sort(extra.edges.begin(), extra.edges.end());
    EXPECT_TRUE(certificate_problem(host, extra).has_value());

    auto foreign = sub;
    EXPECT_FALSE(verify_certificate(path(4), foreign));
}

TEST(Certificate, CertifyChordalRoundTrip)
{
    Rng rng(9);
    for (int i = 0 ; i < 200 ; ++i) {
        int n = static_cast<int>(uniform(rng, 1, 20));
        auto g = random_graph_p(n, 0.5, rng);
        if (! is_chordal(g).chordal) {
            auto edges = g.edges();
            EXPECT_THROW(certify_chordal(g, edges), CertificateError);
            continue;
        }
        auto edges = g.edges();
        auto sub = certify_chordal(g, edges);
        EXPECT_TRUE(verify_certificate(g, sub));
        EXPECT_EQ(sub.edge_count(), g.m());
    }
}

TEST(Certificate, Lift)
{
    auto sub = star_union(complete(3), vector<Vertex>{ 0 });
    vector<Vertex> to_parent{ 1, 4, 6 };
    auto lifted = lift(sub, to_parent, 7);
    EXPECT_EQ(lifted.n, 7);
    EXPECT_EQ(lifted.edges, (EdgeList{ { 1, 4 }, { 1, 6 } }));
    EXPECT_TRUE(verify_certificate(complete(7), lifted));
}

TEST(StarUnion, Examples)
{
    EXPECT_EQ(star_union(cycle(5), vector<Vertex>{ 0 }).edge_count(), 2);
    auto k4 = star_union(complete(4), vector<Vertex>{ 0, 1, 2, 3 });
    EXPECT_EQ(k4.edge_count(), 6);
    EXPECT_THROW(star_union(cycle(4), vector<Vertex>{ 0, 2 }), PreconditionError);
}

TEST(StarUnion, TriangleCountAndChordality)
{
    Rng rng(13);
    int seen = 0;
    for (int i = 0 ; i < 400 ; ++i) {
        int n = static_cast<int>(uniform(rng, 3, 40));
        auto g = random_graph_p(n, 0.5, rng);
        for (int size = 1 ; size <= 4 ; ++size) {
            auto c = find_clique(g, size);
            if (! c)
                continue;
            ++seen;
            auto sub = star_union(g, *c);
            Count degrees = 0;
            for (auto v : *c)
                degrees += g.degree(v);
            ASSERT_EQ(sub.edge_count(), degrees - size * (size - 1) / 2);
            ASSERT_TRUE(verify_certificate(g, sub));
            ASSERT_TRUE(is_chordal(as_graph(sub)).chordal);
        }
    }
    EXPECT_GT(seen, 1000);
}
