#ifndef CHORDAL_FORGE_GRAPH_HPP
#define CHORDAL_FORGE_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chordal_forge
{
    using Vertex = int;
    using Count = std::int64_t;

    /// Unordered vertex pair, always stored with u < v.
    struct Edge
    {
        Vertex u = 0;
        Vertex v = 0;

        Edge() = default;
        Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) { }

        auto operator<=> (const Edge &) const = default;
    };

    using EdgeList = std::vector<Edge>;

    /**
     * Subset of a fixed universe 0..universe-1, stored as 64-bit words.
     */
    class VertexSet
    {
        private:
            using Word = std::uint64_t;
            static constexpr int bits_per_word = 64;

            int _universe = 0;
            std::vector<Word> _words;

        public:
            VertexSet() = default;
            explicit VertexSet(int universe);
            VertexSet(int universe, std::initializer_list<Vertex> members);
            VertexSet(int universe, std::span<const Vertex> members);

            auto universe() const -> int { return _universe; }

            auto insert(Vertex v) -> void;
            auto erase(Vertex v) -> void;
            auto contains(Vertex v) const -> bool;
            auto count() const -> int;
            auto empty() const -> bool;

            /// Smallest member, or -1 when empty.
            auto first() const -> Vertex;
            /// Smallest member greater than v, or -1.
            auto next(Vertex v) const -> Vertex;

            auto members() const -> std::vector<Vertex>;

            auto intersect_with(const VertexSet & other) -> void;
            auto unite_with(const VertexSet & other) -> void;
            auto subtract(const VertexSet & other) -> void;
            auto intersection_count(const VertexSet & other) const -> int;
            auto is_subset_of(const VertexSet & other) const -> bool;

            auto operator== (const VertexSet & other) const -> bool = default;

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w) {
                    Word bits = _words[w];
                    while (bits) {
                        int b = __builtin_ctzll(bits);
                        f(static_cast<Vertex>(w * bits_per_word + b));
                        bits &= bits - 1;
                    }
                }
            }
    };

    auto operator& (VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator| (VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator- (VertexSet a, const VertexSet & b) -> VertexSet;

    struct InducedSubgraph;

    /**
     * Simple undirected graph on vertices 0..n-1 with bit-row adjacency.
     * Values are immutable once built; every derived graph is a new value.
     */
    class Graph
    {
        private:
            int _n = 0;
            Count _m = 0;
            std::vector<VertexSet> _rows;
            std::vector<int> _degree;

            explicit Graph(int n);
            auto add_edge_unchecked(Vertex u, Vertex v) -> void;

            friend auto induced(const Graph & g, const VertexSet & s) -> InducedSubgraph;
            friend auto delete_edges(const Graph & g, std::span<const Edge> edges) -> Graph;

        public:
            static constexpr int default_vertex_cap = 4096;

            Graph() = default;

            /// Edgeless graph on n vertices.
            static auto empty(int n, int vertex_cap = default_vertex_cap) -> Graph;

            /// Throws GraphError on an out-of-range endpoint, a self-loop or a
            /// repeated pair.
            static auto from_edge_list(int n, std::span<const Edge> edges,
                    int vertex_cap = default_vertex_cap) -> Graph;
            static auto from_edge_list(int n, std::initializer_list<Edge> edges) -> Graph;

            auto n() const -> int { return _n; }
            auto m() const -> Count { return _m; }

            auto adjacent(Vertex u, Vertex v) const -> bool { return _rows[u].contains(v); }
            auto degree(Vertex v) const -> int { return _degree[v]; }
            auto neighbourhood(Vertex v) const -> const VertexSet & { return _rows[v]; }
            auto all_vertices() const -> VertexSet;

            /// Edges in lexicographic order.
            auto edges() const -> EdgeList;

            auto is_clique(const VertexSet & s) const -> bool;
            auto is_clique(std::span<const Vertex> s) const -> bool;

            /// Number of edges with both endpoints in s.
            auto edges_within(const VertexSet & s) const -> Count;

            /// Re-derives m, degrees and symmetry from the rows; false if any
            /// stored invariant is broken.
            auto check_invariants() const -> bool;

            auto operator== (const Graph & other) const -> bool;
    };

    /// A graph obtained by keeping some host vertices, together with the map
    /// from its vertex ids back to host ids (increasing).
    struct InducedSubgraph
    {
        Graph graph;
        std::vector<Vertex> to_host;
    };

    auto check_vertex_set(const Graph & g, const VertexSet & s) -> void;

    /// Vertices adjacent to every member of s, excluding s itself.
    auto common_neighbourhood(const Graph & g, const VertexSet & s) -> VertexSet;

    /// Lexicographically smallest clique of the given size (as a sorted tuple).
    auto find_clique(const Graph & g, int size) -> std::optional<std::vector<Vertex>>;

    /// Every clique of the given size, in lexicographic order.
    auto all_cliques(const Graph & g, int size) -> std::vector<std::vector<Vertex>>;

    auto delete_vertices(const Graph & g, const VertexSet & s) -> InducedSubgraph;
    auto induced(const Graph & g, const VertexSet & s) -> InducedSubgraph;
    auto delete_edges(const Graph & g, std::span<const Edge> edges) -> Graph;

    /// Number of vertices minus number of connected components: the size of
    /// any spanning forest.
    auto spanning_forest_size(const Graph & g) -> Count;

    /// Parse the `n m` + `u v` lines format.
    auto read_edge_list(std::istream & in) -> Graph;
    auto read_edge_list_file(const std::string & path) -> Graph;
    auto write_edge_list(std::ostream & out, const Graph & g) -> void;
    auto write_edge_list_file(const std::string & path, const Graph & g) -> void;

    struct DotCluster
    {
        std::string name;
        std::vector<Vertex> members;
    };

    auto to_dot(const Graph & g, std::span<const DotCluster> clusters = {},
            std::span<const Edge> highlight = {}) -> std::string;
}

#endif
