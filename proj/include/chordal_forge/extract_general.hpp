#ifndef CHORDAL_FORGE_EXTRACT_GENERAL_HPP
#define CHORDAL_FORGE_EXTRACT_GENERAL_HPP

#include <chordal_forge/chordality.hpp>
#include <chordal_forge/graph.hpp>
#include <chordal_forge/report.hpp>

#include <optional>
#include <vector>

namespace chordal_forge
{
    /// Constants of the asymptotic argument; need 0 < c < c1 < C.
    struct GeneralParams
    {
        int k = 2;
        double c = 0;
        double c1 = 0;
        double C = 0;
    };

    /// c = 10k^2, c1 = 10kc, C = 10(k+1)c1.
    auto default_general_params(int k) -> GeneralParams;

    struct CliqueProcessResult
    {
        std::vector<Vertex> clique;
        VertexSet N;
        Count edges_in_N = 0;
    };

    /// Greedy clique x_1..x_{k-1}: each x_i has maximum degree (ties to the
    /// smallest id) inside the common neighbourhood of the earlier ones.
    /// Throws PreconditionError if that neighbourhood empties too early.
    auto clique_process(const Graph & g, int k) -> CliqueProcessResult;

    /// A forest in g: spanning trees (breadth-first from the smallest id) of
    /// the largest components, taken until s vertices are collected, the last
    /// one truncated. order lists the vertices with every non-root after its
    /// parent; parent[i] is -1 for roots.
    struct ForestSelection
    {
        VertexSet vertices;
        EdgeList edges;
        int components = 0;
        std::vector<Vertex> order;
        std::vector<Vertex> parent;
    };

    auto forest_select(const Graph & g, int s) -> ForestSelection;

    /// d0, a' and h of a large-surplus step that deletes t vertices.
    auto recursion_budget(int k, int n, double a, int t, double c) -> RecursionBudget;

    /// Clique of the given size with the largest degree sum, found by a
    /// bounded branch and bound over vertices in decreasing degree order. When
    /// the node budget runs out the best clique seen so far is returned.
    auto heavy_clique(const Graph & g, int size, long node_budget = 2'000'000) -> std::optional<std::vector<Vertex>>;

    /// Needs m >= t_k(n) + 1. The guarantee is ceil(general_target) with the
    /// given C; diagnostics include the smallest C that would suffice.
    auto extract_general(const Graph & g, const GeneralParams & p) -> ExtractionReport;
}

#endif
