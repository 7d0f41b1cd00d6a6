#ifndef CHORDAL_FORGE_RANDOM_GRAPHS_HPP
#define CHORDAL_FORGE_RANDOM_GRAPHS_HPP

#include <chordal_forge/graph.hpp>

#include <array>
#include <optional>
#include <random>
#include <vector>

namespace chordal_forge
{
    using Rng = std::mt19937_64;

    /// Uniform integer in [lo, hi].
    auto uniform(Rng & rng, Count lo, Count hi) -> Count;

    /// Uniformly random graph with exactly m edges.
    auto random_graph(int n, Count m, Rng & rng) -> Graph;

    /// Each pair independently with probability p.
    auto random_graph_p(int n, double p, Rng & rng) -> Graph;

    auto random_permutation(int n, Rng & rng) -> std::vector<Vertex>;

    /// Vertex v of g becomes perm[v].
    auto relabel(const Graph & g, const std::vector<Vertex> & perm) -> Graph;

    /// Deletes uniformly chosen edges not inside keep until m = target.
    auto random_trim(const Graph & g, const std::vector<Vertex> & keep, Count target, Rng & rng) -> Graph;

    struct PlantedK4
    {
        Graph graph;
        std::array<Vertex, 4> anchor;
    };

    /// A graph with exactly t_3(n) + 1 edges around a planted 4-clique. Each
    /// outside vertex is joined to the clique by a randomly drawn pattern and
    /// the outside is then filled up in a roughly 3-partite way, so that the
    /// rarer branches of the k = 3 argument come up often. Vertex ids are
    /// shuffled. Empty when the draw overshoots the edge count.
    auto planted_k4(int n, Rng & rng) -> std::optional<PlantedK4>;
}

#endif
