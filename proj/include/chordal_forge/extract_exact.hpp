#ifndef CHORDAL_FORGE_EXTRACT_EXACT_HPP
#define CHORDAL_FORGE_EXTRACT_EXACT_HPP

#include <chordal_forge/graph.hpp>
#include <chordal_forge/report.hpp>

#include <array>
#include <optional>

namespace chordal_forge
{
    struct TriangleAnchor
    {
        Vertex x = 0;
        Vertex y = 0;
        Vertex z = 0;
    };

    struct CliqueAnchor4
    {
        std::array<Vertex, 4> x{ };
    };

    /// Chordal subgraph with at least g1(m) - 1 edges. Needs m >= 1.
    auto extract_k1(const Graph & g) -> ExtractionReport;

    /// Chordal subgraph with at least g2(n,m) - 3 edges containing the anchor
    /// triangle. Needs m >= t_2(n) + 1.
    auto extract_k2(const Graph & g, TriangleAnchor anchor) -> ExtractionReport;

    /// Chordal subgraph with at least g3(n) - 6 edges containing the anchor
    /// K4. Needs n >= 5 and m = t_3(n) + 1 exactly.
    auto extract_k3(const Graph & g, CliqueAnchor4 anchor) -> ExtractionReport;

    /// Removes non-anchor edges in lexicographic order until m = t_3(n) + 1.
    /// extract_k3 on the result is valid for g as well.
    auto trim_to_k3_threshold(const Graph & g, CliqueAnchor4 anchor) -> Graph;

    auto smallest_triangle(const Graph & g) -> std::optional<TriangleAnchor>;
    auto smallest_k4(const Graph & g) -> std::optional<CliqueAnchor4>;

    struct DiracDiamond
    {
        std::array<Vertex, 3> triangle{ };
        Vertex u = 0;
        Vertex v = 0;
    };

    /// Lexicographically smallest (triangle, u, v) with u < v both adjacent to
    /// the whole triangle. Guaranteed to exist when n >= 5 and m >= t_3(n)+1.
    auto dirac_diamond(const Graph & g) -> std::optional<DiracDiamond>;
}

#endif
