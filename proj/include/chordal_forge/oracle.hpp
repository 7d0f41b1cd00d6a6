#ifndef CHORDAL_FORGE_ORACLE_HPP
#define CHORDAL_FORGE_ORACLE_HPP

#include <chordal_forge/chordality.hpp>
#include <chordal_forge/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace chordal_forge
{
    struct OracleOptions
    {
        int edge_cap = 24;

        /// Optional partition hint: each listed set must be independent in
        /// the host. A chordal subgraph keeps at most |Vi| + |Vj| - 1 edges
        /// between any two of them, so violating subsets are skipped.
        std::vector<std::vector<Vertex>> independent_parts;
    };

    struct OptimumResult
    {
        Count max_edges = 0;
        ChordalSubgraph witness;
    };

    /// Exact maximum chordal subgraph. Tries every way of keeping c edges for
    /// c = m, m-1, ... down to the spanning-forest size and returns the
    /// first chordal one in lexicographic order of the removed edges.
    auto max_chordal_subgraph(const Graph & g, const OracleOptions & options = { }) -> OptimumResult;

    inline constexpr int f_exact_vertex_cap = 7;

    struct FTableEntry
    {
        int n = 0;
        Count m = 0;
        Count f_exact = 0;
        EdgeList extremal_graph;
    };

    /// Best value over a contiguous range of labelled graphs. Graphs are the
    /// m-subsets of the edges of K_n, ranked lexicographically.
    struct FChunk
    {
        bool found = false;
        Count value = 0;
        std::uint64_t rank = 0;
        EdgeList witness;
    };

    /// C(C(n,2), m), the number of labelled graphs f_exact looks at.
    auto labelled_graph_count(int n, Count m) -> std::uint64_t;

    /// With dedup, only the lowest-ranked graph of every isomorphism class is
    /// evaluated; the result is identical either way.
    auto f_exact_chunk(int n, Count m, std::uint64_t begin, std::uint64_t end, bool dedup = false) -> FChunk;

    /// Smaller value wins; ties go to the lower rank.
    auto merge_chunks(const FChunk & a, const FChunk & b) -> FChunk;

    auto f_exact(int n, Count m, bool dedup = false) -> FTableEntry;

    /// Table of f_exact results keyed by (n, m), kept sorted.
    class FTable
    {
        private:
            std::vector<FTableEntry> _entries;

        public:
            auto entries() const -> const std::vector<FTableEntry> & { return _entries; }
            auto find(int n, Count m) const -> std::optional<FTableEntry>;
            auto insert(FTableEntry e) -> void;

            /// Cached entry, computed and stored on a miss.
            auto get_or_compute(int n, Count m, bool dedup = false) -> const FTableEntry &;
    };
}

#endif
