#ifndef CHORDAL_FORGE_CONSTRUCTIONS_HPP
#define CHORDAL_FORGE_CONSTRUCTIONS_HPP

#include <chordal_forge/graph.hpp>

#include <string>
#include <vector>

namespace chordal_forge
{
    enum class Variant
    {
        turan,
        turan_plus_edge,
        k1_isolated,
        k2_bipartite,
        general_fig1
    };

    auto variant_name(Variant v) -> std::string;
    auto parse_variant(const std::string & name) -> Variant;

    /// Named contiguous id range [begin, end).
    struct Part
    {
        std::string name;
        Vertex begin = 0;
        Vertex end = 0;

        auto size() const -> int { return end - begin; }
    };

    /**
     * An extremal graph with its labelled structure. Parts are contiguous id
     * ranges, the big class X first. independent_parts partitions the
     * vertices into independent sets, usable as an oracle pruning hint.
     */
    struct Construction
    {
        Variant variant = Variant::turan;
        Graph graph;
        std::vector<Part> parts;
        std::vector<std::vector<Vertex>> independent_parts;
        int k = 0;
        int t = 0;
        int r = 0;
        Count a = 0;

        auto part(const std::string & name) const -> const Part &;
        auto clusters() const -> std::vector<DotCluster>;
    };

    /// T_k(n); k > n gives K_n.
    auto turan_graph(int k, int n) -> Construction;

    /// T_k(n) plus the edge {0, 1} inside the first (largest) class.
    auto turan_plus_edge(int k, int n) -> Construction;

    /// T_2(g1(m)) followed by n - g1(m) isolated vertices.
    auto k1_isolated(int n, Count m) -> Construction;

    /// K_{t, n-t} with sides X = [0, t), Y = [t, n), plus T_2(r) on the first
    /// r vertices of X.
    auto k2_bipartite(int n, int t, int r) -> Construction;

    /// Complete k-partite graph on X, Y_1..Y_{k-1} with K_{r,r} inside X, where
    /// r = round(sqrt(2ka/(k+1))) and |X| = ceil((n + (k-1)r)/k). The Y_i
    /// split the remaining vertices as evenly as possible. The achieved edge
    /// count is whatever these rounded sizes give.
    auto general_fig1(int k, int n, Count a) -> Construction;

    /// kn - |X| + 2r - C(k+1, 2), the chordal-subgraph upper bound of a
    /// general_fig1 graph.
    auto fig1_chordal_upper_bound(const Construction & c) -> Count;

    /// 2n - t + r - 3 for a k2_bipartite graph.
    auto k2_chordal_upper_bound(const Construction & c) -> Count;
}

#endif
