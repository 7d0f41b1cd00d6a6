#ifndef CHORDAL_FORGE_CHORDALITY_HPP
#define CHORDAL_FORGE_CHORDALITY_HPP

#include <chordal_forge/graph.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chordal_forge
{
    /// Elimination sequence: order[0] is eliminated first.
    using EliminationOrder = std::vector<Vertex>;

    struct ChordalityWitness
    {
        bool chordal = false;
        EliminationOrder peo;      // populated iff chordal
        std::vector<Vertex> hole;  // induced cycle of length >= 4, iff not chordal
    };

    /// Maximum cardinality search, ties to the smallest id. The reverse of the
    /// visit order is returned, so it is a perfect elimination order exactly
    /// when the graph is chordal.
    auto maximum_cardinality_search(const Graph & g) -> EliminationOrder;

    auto is_chordal(const Graph & g) -> ChordalityWitness;

    /// True iff, eliminating in order, each vertex's later neighbours form a
    /// clique. Throws PreconditionError if order is not a permutation.
    auto verify_peo(const Graph & g, std::span<const Vertex> order) -> bool;

    /// True iff cycle is an induced cycle of g with at least four vertices.
    auto is_induced_hole(const Graph & g, std::span<const Vertex> cycle) -> bool;

    /// One step of a simplicial construction: vertex joins the graph adjacent
    /// to exactly the (clique) set neighbours.
    struct Addition
    {
        Vertex vertex = 0;
        std::vector<Vertex> neighbours;

        auto operator== (const Addition &) const -> bool = default;
    };

    /**
     * An edge subset of a host graph together with a simplicial-addition
     * certificate. Replaying the additions in order reproduces exactly the
     * edge set; vertices absent from the certificate are isolated.
     */
    struct ChordalSubgraph
    {
        int n = 0;
        EdgeList edges;
        std::vector<Addition> certificate;

        auto edge_count() const -> Count { return static_cast<Count>(edges.size()); }
        auto operator== (const ChordalSubgraph &) const -> bool = default;
    };

    /// Reason the certificate does not prove chordality of a subgraph of host,
    /// or nullopt if it does.
    auto certificate_problem(const Graph & host, const ChordalSubgraph & sub) -> std::optional<std::string>;

    auto verify_certificate(const Graph & host, const ChordalSubgraph & sub) -> bool;

    /// Certificate for an arbitrary chordal edge subset of host, derived from a
    /// perfect elimination order. Throws CertificateError if not chordal.
    auto certify_chordal(const Graph & host, std::span<const Edge> edges) -> ChordalSubgraph;

    /// Relabel a certificate through to_parent into a graph on parent_n
    /// vertices.
    auto lift(const ChordalSubgraph & sub, std::span<const Vertex> to_parent, int parent_n) -> ChordalSubgraph;

    /**
     * Grows a chordal subgraph of a fixed host one simplicial vertex at a time.
     *
     * A vertex may be added when it is absent or currently isolated, and only
     * towards a set that is a clique in the current edge set using host edges.
     * A single neighbour that is not yet present is first logged as an
     * isolated vertex.
     * The single removal allowed is of an edge with a degree-one endpoint,
     * which leaves that endpoint isolated and the graph chordal.
     */
    class ChordalBuilder
    {
        private:
            Graph _host;
            std::vector<VertexSet> _adjacency;
            std::vector<char> _present;
            std::vector<Addition> _log;
            Count _edges = 0;

        public:
            explicit ChordalBuilder(Graph host);

            /// Replays an existing certificate; throws CertificateError if it
            /// is not valid for host.
            static auto from_subgraph(Graph host, const ChordalSubgraph & sub) -> ChordalBuilder;

            auto host() const -> const Graph & { return _host; }

            auto add_vertex(Vertex v, std::span<const Vertex> neighbours) -> ChordalBuilder &;
            auto add_vertex(Vertex v, std::initializer_list<Vertex> neighbours) -> ChordalBuilder &;

            /// Removes uv where u or v currently has degree one.
            auto remove_leaf_edge(Vertex u, Vertex v) -> ChordalBuilder &;

            auto contains(Vertex v) const -> bool { return _present[v]; }
            auto has_edge(Vertex u, Vertex v) const -> bool { return _adjacency[u].contains(v); }
            auto degree(Vertex v) const -> int { return _adjacency[v].count(); }
            auto neighbourhood(Vertex v) const -> const VertexSet & { return _adjacency[v]; }
            auto edge_count() const -> Count { return _edges; }
            auto log() const -> const std::vector<Addition> & { return _log; }

            auto build() const -> ChordalSubgraph;
    };

    /// All host edges with an endpoint in the clique s. Throws
    /// PreconditionError if s is not a clique.
    auto star_union(const Graph & g, const VertexSet & s) -> ChordalSubgraph;
    auto star_union(const Graph & g, std::span<const Vertex> s) -> ChordalSubgraph;

    /// Graph on sub.n vertices holding sub's edges.
    auto as_graph(const ChordalSubgraph & sub) -> Graph;
}

#endif
