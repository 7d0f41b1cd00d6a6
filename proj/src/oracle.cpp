#include <chordal_forge/oracle.hpp>
#include <chordal_forge/errors.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

using std::uint64_t;
using std::vector;

namespace chordal_forge
{
    namespace
    {
        using Mask = uint64_t;

        auto bit(int i) -> Mask
        {
            return Mask{ 1 } << i;
        }

        // Greedy simplicial elimination on at most 64 vertices. Removing any
        // simplicial vertex keeps a chordal graph chordal, so getting stuck
        // means there is a hole.
        auto mask_is_chordal(int n, const vector<std::pair<int, int>> & edges, Mask keep) -> bool
        {
            Mask adj[64] = { };
            for (std::size_t i = 0 ; i < edges.size() ; ++i)
                if (keep & bit(i)) {
                    adj[edges[i].first] |= bit(edges[i].second);
                    adj[edges[i].second] |= bit(edges[i].first);
                }

            Mask remaining = n == 64 ? ~Mask{ 0 } : bit(n) - 1;
            while (remaining) {
                bool progress = false;
                for (Mask scan = remaining ; scan ; scan &= scan - 1) {
                    int v = std::countr_zero(scan);
                    Mask nb = adj[v] & remaining;
                    bool simplicial = true;
                    for (Mask rest = nb ; rest && simplicial ; rest &= rest - 1) {
                        int u = std::countr_zero(rest);
                        if ((nb & ~bit(u)) & ~adj[u])
                            simplicial = false;
                    }
                    if (simplicial) {
                        remaining &= ~bit(v);
                        progress = true;
                    }
                }
                if (! progress)
                    return false;
            }
            return true;
        }

        struct PairLimit
        {
            Mask edges;
            int limit;
        };

        // Exhaustive search over kept-edge subsets of one small graph.
        class SubsetSearch
        {
            private:
                int _n;
                vector<std::pair<int, int>> _edges;
                vector<PairLimit> _limits;

                auto admissible(Mask keep) const -> bool
                {
                    for (auto & p : _limits)
                        if (std::popcount(keep & p.edges) > p.limit)
                            return false;
                    return true;
                }

            public:
                SubsetSearch(int n, vector<std::pair<int, int>> edges, vector<PairLimit> limits = { }) :
                    _n(n),
                    _edges(std::move(edges)),
                    _limits(std::move(limits))
                {
                }

                auto m() const -> int { return static_cast<int>(_edges.size()); }

                auto start_size() const -> int
                {
                    int c = m();
                    for (auto & p : _limits)
                        c -= std::max(0, std::popcount(p.edges) - p.limit);
                    return c;
                }

                auto forest_size() const -> int
                {
                    vector<int> parent(_n);
                    std::iota(parent.begin(), parent.end(), 0);
                    auto find = [&] (int x) {
                        while (parent[x] != x)
                            x = parent[x] = parent[parent[x]];
                        return x;
                    };
                    int result = 0;
                    for (auto & [u, v] : _edges) {
                        int a = find(u), b = find(v);
                        if (a != b) {
                            parent[a] = b;
                            ++result;
                        }
                    }
                    return result;
                }

                // First chordal subset of exactly c kept edges, ordered by the
                // lexicographic order of the removed edge indices.
                auto find_of_size(int c) const -> std::optional<Mask>
                {
                    int total = m();
                    int s = total - c;
                    if (s < 0)
                        return std::nullopt;
                    Mask full = total == 64 ? ~Mask{ 0 } : bit(total) - 1;
                    vector<int> idx(s);
                    std::iota(idx.begin(), idx.end(), 0);
                    while (true) {
                        Mask removed = 0;
                        for (auto i : idx)
                            removed |= bit(i);
                        Mask keep = full & ~removed;
                        if (admissible(keep) && mask_is_chordal(_n, _edges, keep))
                            return keep;

                        int i = s - 1;
                        while (i >= 0 && idx[i] == total - s + i)
                            --i;
                        if (i < 0)
                            return std::nullopt;
                        ++idx[i];
                        for (int j = i + 1 ; j < s ; ++j)
                            idx[j] = idx[j - 1] + 1;
                    }
                }

                auto maximum(int from) const -> std::pair<int, Mask>
                {
                    int floor = forest_size();
                    for (int c = std::min(from, start_size()) ; c >= floor ; --c)
                        if (auto keep = find_of_size(c))
                            return { c, *keep };
                    throw InternalInvariantError("no chordal subset down to spanning-forest size");
                }
        };

        auto binomial(int a, int b) -> uint64_t
        {
            if (b < 0 || b > a)
                return 0;
            b = std::min(b, a - b);
            uint64_t result = 1;
            for (int i = 1 ; i <= b ; ++i)
                result = result * (a - b + i) / i;
            return result;
        }

        auto complete_edges(int n) -> vector<std::pair<int, int>>
        {
            vector<std::pair<int, int>> result;
            for (int u = 0 ; u < n ; ++u)
                for (int v = u + 1 ; v < n ; ++v)
                    result.emplace_back(u, v);
            return result;
        }

        auto unrank(int total, int size, uint64_t rank) -> vector<int>
        {
            vector<int> comb(size);
            int x = 0;
            for (int i = 0 ; i < size ; ++i) {
                while (true) {
                    uint64_t with_x = binomial(total - x - 1, size - i - 1);
                    if (rank < with_x) {
                        comb[i] = x++;
                        break;
                    }
                    rank -= with_x;
                    ++x;
                }
            }
            return comb;
        }

        auto next_combination(vector<int> & comb, int total) -> bool
        {
            int size = static_cast<int>(comb.size());
            int i = size - 1;
            while (i >= 0 && comb[i] == total - size + i)
                --i;
            if (i < 0)
                return false;
            ++comb[i];
            for (int j = i + 1 ; j < size ; ++j)
                comb[j] = comb[j - 1] + 1;
            return true;
        }

        // Vertex permutations of K_n as maps on edge indices. A graph's key
        // puts edge i at bit total-1-i, so a larger key is a lower rank.
        class Canonicaliser
        {
            private:
                int _total;
                vector<vector<int>> _perm_edges;

            public:
                explicit Canonicaliser(int n)
                {
                    auto edges = complete_edges(n);
                    _total = static_cast<int>(edges.size());
                    vector<vector<int>> index(n, vector<int>(n, -1));
                    for (int i = 0 ; i < _total ; ++i)
                        index[edges[i].first][edges[i].second] = index[edges[i].second][edges[i].first] = i;

                    vector<int> p(n);
                    std::iota(p.begin(), p.end(), 0);
                    do {
                        vector<int> map(_total);
                        for (int i = 0 ; i < _total ; ++i)
                            map[i] = index[p[edges[i].first]][p[edges[i].second]];
                        _perm_edges.push_back(std::move(map));
                    } while (std::next_permutation(p.begin(), p.end()));
                }

                auto key(const vector<int> & comb) const -> Mask
                {
                    Mask k = 0;
                    for (auto i : comb)
                        k |= bit(_total - 1 - i);
                    return k;
                }

                auto is_lowest_rank(const vector<int> & comb) const -> bool
                {
                    Mask own = key(comb);
                    for (auto & map : _perm_edges) {
                        Mask k = 0;
                        for (auto i : comb)
                            k |= bit(_total - 1 - map[i]);
                        if (k > own)
                            return false;
                    }
                    return true;
                }
        };
    }

    auto max_chordal_subgraph(const Graph & g, const OracleOptions & options) -> OptimumResult
    {
        if (options.edge_cap > 63)
            throw PreconditionError("oracle edge cap cannot exceed 63");
        if (g.m() > options.edge_cap)
            throw CapExceeded("oracle needs at most " + std::to_string(options.edge_cap) + " edges, graph has " + std::to_string(g.m()));

        // Compress to the non-isolated vertices.
        vector<int> local(g.n(), -1);
        int count = 0;
        for (Vertex v = 0 ; v < g.n() ; ++v)
            if (g.degree(v) > 0)
                local[v] = count++;

        auto host_edges = g.edges();
        vector<std::pair<int, int>> edges;
        for (auto & e : host_edges)
            edges.emplace_back(local[e.u], local[e.v]);

        vector<PairLimit> limits;
        auto & parts = options.independent_parts;
        if (! parts.empty()) {
            vector<int> part_of(g.n(), -1);
            for (std::size_t i = 0 ; i < parts.size() ; ++i) {
                for (auto v : parts[i]) {
                    if (v < 0 || v >= g.n())
                        throw PreconditionError("independent part vertex " + std::to_string(v) + " out of range");
                    if (part_of[v] != -1)
                        throw PreconditionError("independent parts overlap at vertex " + std::to_string(v));
                    part_of[v] = static_cast<int>(i);
                }
            }
            for (std::size_t i = 0 ; i < parts.size() ; ++i)
                for (std::size_t j = i + 1 ; j < parts.size() ; ++j) {
                    Mask between = 0;
                    for (std::size_t e = 0 ; e < host_edges.size() ; ++e) {
                        int a = part_of[host_edges[e].u], b = part_of[host_edges[e].v];
                        if ((a == int(i) && b == int(j)) || (a == int(j) && b == int(i)))
                            between |= bit(e);
                    }
                    if (between)
                        limits.push_back(PairLimit{ between, int(parts[i].size() + parts[j].size()) - 1 });
                }
            for (std::size_t e = 0 ; e < host_edges.size() ; ++e) {
                int a = part_of[host_edges[e].u], b = part_of[host_edges[e].v];
                if (a != -1 && a == b)
                    throw PreconditionError("independent part " + std::to_string(a) + " contains an edge");
            }
        }

        SubsetSearch search(count, std::move(edges), std::move(limits));
        auto [size, keep] = search.maximum(search.m());

        EdgeList kept;
        for (std::size_t e = 0 ; e < host_edges.size() ; ++e)
            if (keep & bit(e))
                kept.push_back(host_edges[e]);
        return OptimumResult{ size, certify_chordal(g, kept) };
    }

    auto labelled_graph_count(int n, Count m) -> uint64_t
    {
        return binomial(n * (n - 1) / 2, static_cast<int>(m));
    }

    auto f_exact_chunk(int n, Count m, uint64_t begin, uint64_t end, bool dedup) -> FChunk
    {
        if (n < 1)
            throw PreconditionError("f_exact needs n >= 1");
        if (n > f_exact_vertex_cap)
            throw CapExceeded("f_exact supports n <= " + std::to_string(f_exact_vertex_cap));
        int total = n * (n - 1) / 2;
        if (m < 0 || m > total)
            throw PreconditionError("f_exact needs 0 <= m <= C(n,2)");

        FChunk result;
        uint64_t count = labelled_graph_count(n, m);
        end = std::min(end, count);
        if (begin >= end)
            return result;

        auto all = complete_edges(n);
        std::optional<Canonicaliser> canon;
        if (dedup)
            canon.emplace(n);

        auto comb = unrank(total, static_cast<int>(m), begin);
        for (uint64_t rank = begin ; rank < end ; ++rank) {
            if (rank != begin)
                next_combination(comb, total);
            if (canon && ! canon->is_lowest_rank(comb))
                continue;

            vector<std::pair<int, int>> edges;
            for (auto i : comb)
                edges.push_back(all[i]);
            SubsetSearch search(n, std::move(edges));

            // A chordal graph with c edges has one with c - 1 (drop an edge at
            // a simplicial vertex), so value >= best iff size best is reachable.
            if (result.found && search.find_of_size(static_cast<int>(result.value)))
                continue;
            int from = result.found ? static_cast<int>(result.value) - 1 : search.m();
            auto [value, keep] = search.maximum(from);
            (void) keep;

            result.found = true;
            result.value = value;
            result.rank = rank;
            result.witness.clear();
            for (auto i : comb)
                result.witness.emplace_back(all[i].first, all[i].second);
        }
        return result;
    }

    auto merge_chunks(const FChunk & a, const FChunk & b) -> FChunk
    {
        if (! a.found)
            return b;
        if (! b.found)
            return a;
        if (a.value != b.value)
            return a.value < b.value ? a : b;
        return a.rank <= b.rank ? a : b;
    }

    auto f_exact(int n, Count m, bool dedup) -> FTableEntry
    {
        auto chunk = f_exact_chunk(n, m, 0, labelled_graph_count(n, m), dedup);
        if (! chunk.found)
            throw InternalInvariantError("f_exact saw no graphs");
        return FTableEntry{ n, m, chunk.value, chunk.witness };
    }

    auto FTable::find(int n, Count m) const -> std::optional<FTableEntry>
    {
        for (auto & e : _entries)
            if (e.n == n && e.m == m)
                return e;
        return std::nullopt;
    }

    auto FTable::insert(FTableEntry e) -> void
    {
        auto at = std::find_if(_entries.begin(), _entries.end(), [&] (const FTableEntry & x) {
                return x.n == e.n && x.m == e.m; });
        if (at != _entries.end())
            *at = std::move(e);
        else
            _entries.push_back(std::move(e));
        std::sort(_entries.begin(), _entries.end(), [] (const FTableEntry & a, const FTableEntry & b) {
                return std::pair(a.n, a.m) < std::pair(b.n, b.m); });
    }

    auto FTable::get_or_compute(int n, Count m, bool dedup) -> const FTableEntry &
    {
        if (! find(n, m))
            insert(f_exact(n, m, dedup));
        for (auto & e : _entries)
            if (e.n == n && e.m == m)
                return e;
        throw InternalInvariantError("table entry vanished");
    }
}
