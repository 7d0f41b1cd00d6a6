#ifndef CHORDAL_FORGE_BOUNDS_HPP
#define CHORDAL_FORGE_BOUNDS_HPP

#include <chordal_forge/graph.hpp>

#include <vector>

namespace chordal_forge
{
    /// Class sizes of the balanced complete k-partite graph on n vertices,
    /// largest first. With k > n the trailing classes are empty.
    auto turan_part_sizes(int k, int n) -> std::vector<int>;

    /// t_k(n): C(n,2) minus the edges missing inside each class.
    auto turan_number(int k, int n) -> Count;

    auto binomial2(Count x) -> Count;

    /// Smallest r with t_2(r) >= m, i.e. floor(r^2/4) >= m.
    auto g1(Count m) -> int;

    struct BoundWitness
    {
        Count value = 0;
        int t = 0;
        int r = 0;
    };

    /// Minimum of 2n - t + r over t, r >= 0 with t(n-t) + t_2(r) >= m,
    /// ties to the smallest t then the smallest r. Needs m >= t_2(n) + 1.
    auto g2(int n, Count m) -> BoundWitness;

    /// 3n - ceil(n/3) + 2.
    auto g3(int n) -> Count;

    struct GeneralBoundParams
    {
        int k = 1;
        int n = 0;
        double a = 1;
        double C = 0;
    };

    /// (k - 1/k) n + sqrt(2(k+1)a/k) - C sqrt(n) - C(k+1, 2). The only
    /// floating-point bound; callers round explicitly.
    auto general_target(const GeneralBoundParams & p) -> double;

    /// kn - ceil(n/k) + 2 - C(k+1, 2): the largest chordal subgraph of T_k(n)
    /// plus one edge in a largest class.
    auto turan_plus_edge_value(int k, int n) -> Count;

    /// Experimental: min over t, r of kn - t + r - C(k+1, 2) subject to
    /// t_{k-1}(n-t) + t(n-t) + t_2(r) >= m, same search pattern as g2.
    auto conjecture_bound(int k, int n, Count m) -> BoundWitness;
}

#endif
