#ifndef CHORDAL_FORGE_TESTS_TEST_SUPPORT_HPP
#define CHORDAL_FORGE_TESTS_TEST_SUPPORT_HPP

#include <chordal_forge/graph.hpp>

#include <cstdint>
#include <vector>

namespace chordal_forge::test_support
{
    inline auto complete(int n) -> Graph
    {
        EdgeList edges;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v)
                edges.emplace_back(u, v);
        return Graph::from_edge_list(n, edges);
    }

    inline auto cycle(int n) -> Graph
    {
        EdgeList edges;
        for (Vertex v = 0 ; v < n ; ++v)
            edges.emplace_back(v, (v + 1) % n);
        return Graph::from_edge_list(n, edges);
    }

    inline auto path(int n) -> Graph
    {
        EdgeList edges;
        for (Vertex v = 0 ; v + 1 < n ; ++v)
            edges.emplace_back(v, v + 1);
        return Graph::from_edge_list(n, edges);
    }

    /// Graph number mask on n vertices: bit i set keeps the i-th pair in
    /// lexicographic order.
    inline auto from_mask(int n, std::uint64_t mask) -> Graph
    {
        EdgeList edges;
        int bit = 0;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v, ++bit)
                if (mask >> bit & 1)
                    edges.emplace_back(u, v);
        return Graph::from_edge_list(n, edges);
    }

    /// Chordal iff no vertex subset of size >= 4 induces a cycle, decided by
    /// looking at every subset. Only for tiny graphs.
    inline auto naive_is_chordal(const Graph & g) -> bool
    {
        int n = g.n();
        for (std::uint32_t s = 0 ; s < (1u << n) ; ++s) {
            int size = __builtin_popcount(s);
            if (size < 4)
                continue;
            bool two_regular = true;
            for (Vertex v = 0 ; v < n && two_regular ; ++v) {
                if (! (s >> v & 1))
                    continue;
                int d = 0;
                for (Vertex w = 0 ; w < n ; ++w)
                    if ((s >> w & 1) && g.adjacent(v, w))
                        ++d;
                two_regular = d == 2;
            }
            if (! two_regular)
                continue;
            // Two-regular and connected means a single cycle.
            Vertex start = __builtin_ctz(s);
            std::uint32_t seen = 1u << start;
            std::vector<Vertex> stack{ start };
            while (! stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w = 0 ; w < n ; ++w)
                    if ((s >> w & 1) && ! (seen >> w & 1) && g.adjacent(v, w)) {
                        seen |= 1u << w;
                        stack.push_back(w);
                    }
            }
            if (seen == s)
                return false;
        }
        return true;
    }
}

#endif
