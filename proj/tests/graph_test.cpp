#include <chordal_forge/errors.hpp>
#include <chordal_forge/graph.hpp>
#include <chordal_forge/random_graphs.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace chordal_forge;
using test_support::complete;
using test_support::cycle;
using test_support::path;

using std::vector;

TEST(Graph, BuildsPath)
{
    auto g = Graph::from_edge_list(3, { { 0, 1 }, { 1, 2 } });
    EXPECT_EQ(g.n(), 3);
    EXPECT_EQ(g.m(), 2);
    EXPECT_TRUE(g.adjacent(1, 0));
    EXPECT_FALSE(g.adjacent(0, 2));
    EXPECT_EQ(g.degree(1), 2);
    EXPECT_TRUE(g.check_invariants());
}

TEST(Graph, SingleVertex)
{
    auto g = Graph::from_edge_list(1, { });
    EXPECT_EQ(g.n(), 1);
    EXPECT_EQ(g.m(), 0);
}

TEST(Graph, RejectsBadEdges)
{
    EXPECT_THROW(Graph::from_edge_list(4, { { 0, 1 }, { 0, 0 } }), GraphError);
    EXPECT_THROW(Graph::from_edge_list(4, { { 0, 1 }, { 1, 0 } }), GraphError);
    EXPECT_THROW(Graph::from_edge_list(4, { { 0, 4 } }), GraphError);
    EXPECT_THROW(Graph::from_edge_list(-1, { }), GraphError);
    EXPECT_THROW(Graph::empty(10, 5), CapExceeded);
}

TEST(Graph, EdgesAreLexicographic)
{
    auto g = Graph::from_edge_list(4, { { 3, 2 }, { 1, 0 }, { 0, 3 } });
    EXPECT_EQ(g.edges(), (EdgeList{ { 0, 1 }, { 0, 3 }, { 2, 3 } }));
}

TEST(VertexSet, Operations)
{
    VertexSet a(130, { 0, 64, 129 });
    VertexSet b(130, { 64, 100 });
    EXPECT_EQ(a.count(), 3);
    EXPECT_EQ((a & b).members(), vector<Vertex>{ 64 });
    EXPECT_EQ((a | b).count(), 4);
    EXPECT_EQ((a - b).members(), (vector<Vertex>{ 0, 129 }));
    EXPECT_EQ(a.first(), 0);
    EXPECT_EQ(a.next(0), 64);
    EXPECT_EQ(a.next(129), -1);
    EXPECT_EQ(a.intersection_count(b), 1);
    EXPECT_FALSE(b.is_subset_of(a));
    EXPECT_TRUE(VertexSet(130).empty());
    EXPECT_EQ(VertexSet(130).first(), -1);
}

TEST(CommonNeighbourhood, Examples)
{
    EXPECT_EQ(common_neighbourhood(complete(4), VertexSet(4, { 0, 1 })).members(), (vector<Vertex>{ 2, 3 }));
    EXPECT_EQ(common_neighbourhood(cycle(4), VertexSet(4, { 0, 2 })).members(), (vector<Vertex>{ 1, 3 }));
    EXPECT_EQ(common_neighbourhood(path(3), VertexSet(3, { 0, 2 })).members(), vector<Vertex>{ 1 });
    EXPECT_THROW(common_neighbourhood(path(3), VertexSet(3)), PreconditionError);
}

TEST(FindClique, Examples)
{
    EXPECT_EQ(find_clique(complete(4), 4), (vector<Vertex>{ 0, 1, 2, 3 }));
    EXPECT_FALSE(find_clique(cycle(5), 3).has_value());
    EXPECT_THROW(find_clique(cycle(5), 0), PreconditionError);
}

TEST(FindClique, TriangleAboveBipartiteThreshold)
{
    // Every 7-edge graph on five vertices has a triangle.
    int graphs = 0;
    for (std::uint64_t mask = 0 ; mask < (1u << 10) ; ++mask) {
        if (__builtin_popcountll(mask) != 7)
            continue;
        ++graphs;
        EXPECT_TRUE(find_clique(test_support::from_mask(5, mask), 3).has_value());
    }
    EXPECT_EQ(graphs, 120);
}

TEST(FindClique, AgreesWithAllCliques)
{
    Rng rng(11);
    for (int i = 0 ; i < 100 ; ++i) {
        auto g = random_graph_p(9, 0.5, rng);
        for (int size = 1 ; size <= 5 ; ++size) {
            auto all = all_cliques(g, size);
            auto first = find_clique(g, size);
            ASSERT_EQ(first.has_value(), ! all.empty());
            if (first) {
                EXPECT_EQ(*first, all.front());
                EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
                for (auto & c : all)
                    EXPECT_TRUE(g.is_clique(c));
            }
        }
    }
}

TEST(Deletion, Examples)
{
    auto k3 = delete_vertices(complete(4), VertexSet(4, { 3 }));
    EXPECT_EQ(k3.graph, complete(3));
    EXPECT_EQ(k3.to_host, (vector<Vertex>{ 0, 1, 2 }));

    vector<Edge> drop{ { 0, 1 } };
    auto p4 = delete_edges(cycle(4), drop);
    EXPECT_EQ(p4.m(), 3);
    EXPECT_FALSE(p4.adjacent(0, 1));
    EXPECT_THROW(delete_edges(p4, drop), GraphError);

    auto sub = induced(complete(5), VertexSet(5, { 0, 2, 4 }));
    EXPECT_EQ(sub.graph, complete(3));
    EXPECT_EQ(sub.to_host, (vector<Vertex>{ 0, 2, 4 }));
}

TEST(Deletion, EdgeCountsRecount)
{
    Rng rng(5);
    for (int i = 0 ; i < 200 ; ++i) {
        int n = static_cast<int>(uniform(rng, 1, 30));
        auto g = random_graph_p(n, 0.4, rng);
        VertexSet s(n);
        for (Vertex v = 0 ; v < n ; ++v)
            if (uniform(rng, 0, 2) == 0)
                s.insert(v);
        Count incident = 0;
        for (auto e : g.edges())
            if (s.contains(e.u) || s.contains(e.v))
                ++incident;
        auto d = delete_vertices(g, s);
        EXPECT_TRUE(d.graph.check_invariants());
        EXPECT_EQ(d.graph.m(), g.m() - incident);
        EXPECT_EQ(d.graph.n(), n - s.count());
        for (Vertex u = 0 ; u < d.graph.n() ; ++u)
            for (Vertex v = 0 ; v < d.graph.n() ; ++v)
                EXPECT_EQ(d.graph.adjacent(u, v), g.adjacent(d.to_host[u], d.to_host[v]));
    }
}

TEST(Graph, SpanningForestSize)
{
    EXPECT_EQ(spanning_forest_size(complete(5)), 4);
    EXPECT_EQ(spanning_forest_size(Graph::empty(6)), 0);
    auto two = Graph::from_edge_list(6, { { 0, 1 }, { 1, 2 }, { 3, 4 } });
    EXPECT_EQ(spanning_forest_size(two), 3);
}

TEST(EdgeListFormat, RoundTrip)
{
    Rng rng(3);
    auto g = random_graph(12, 30, rng);
    std::stringstream ss;
    write_edge_list(ss, g);
    EXPECT_EQ(read_edge_list(ss), g);
}

TEST(EdgeListFormat, RejectsMalformed)
{
    std::istringstream short_list("4 3\n0 1\n1 2\n");
    EXPECT_THROW(read_edge_list(short_list), Error);
    std::istringstream loop("3 1\n1 1\n");
    EXPECT_THROW(read_edge_list(loop), GraphError);
    std::istringstream junk("three edges\n");
    EXPECT_THROW(read_edge_list(junk), Error);
}

TEST(Dot, MentionsEveryEdge)
{
    auto dot = to_dot(path(3));
    EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
    EXPECT_NE(dot.find("1 -- 2"), std::string::npos);
}
