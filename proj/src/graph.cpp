#include <chordal_forge/graph.hpp>
#include <chordal_forge/errors.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

using std::string;
using std::vector;

namespace chordal_forge
{
    VertexSet::VertexSet(int universe) :
        _universe(universe),
        _words((universe + bits_per_word - 1) / bits_per_word, 0)
    {
    }

    VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) :
        VertexSet(universe)
    {
        for (auto v : members)
            insert(v);
    }

    VertexSet::VertexSet(int universe, std::span<const Vertex> members) :
        VertexSet(universe)
    {
        for (auto v : members)
            insert(v);
    }

    auto VertexSet::insert(Vertex v) -> void
    {
        if (v < 0 || v >= _universe)
            throw GraphError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(_universe));
        _words[v / bits_per_word] |= Word{ 1 } << (v % bits_per_word);
    }

    auto VertexSet::erase(Vertex v) -> void
    {
        if (v < 0 || v >= _universe)
            return;
        _words[v / bits_per_word] &= ~(Word{ 1 } << (v % bits_per_word));
    }

    auto VertexSet::contains(Vertex v) const -> bool
    {
        if (v < 0 || v >= _universe)
            return false;
        return (_words[v / bits_per_word] >> (v % bits_per_word)) & 1;
    }

    auto VertexSet::count() const -> int
    {
        int result = 0;
        for (auto w : _words)
            result += __builtin_popcountll(w);
        return result;
    }

    auto VertexSet::empty() const -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [] (Word w) { return w == 0; });
    }

    auto VertexSet::first() const -> Vertex
    {
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            if (_words[w])
                return static_cast<Vertex>(w * bits_per_word + __builtin_ctzll(_words[w]));
        return -1;
    }

    auto VertexSet::next(Vertex v) const -> Vertex
    {
        int start = v + 1;
        if (start >= _universe)
            return -1;
        std::size_t w = start / bits_per_word;
        Word bits = _words[w] & (~Word{ 0 } << (start % bits_per_word));
        while (true) {
            if (bits)
                return static_cast<Vertex>(w * bits_per_word + __builtin_ctzll(bits));
            if (++w >= _words.size())
                return -1;
            bits = _words[w];
        }
    }

    auto VertexSet::members() const -> vector<Vertex>
    {
        vector<Vertex> result;
        result.reserve(count());
        for_each([&] (Vertex v) { result.push_back(v); });
        return result;
    }

    auto VertexSet::intersect_with(const VertexSet & other) -> void
    {
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] &= (i < other._words.size() ? other._words[i] : 0);
    }

    auto VertexSet::unite_with(const VertexSet & other) -> void
    {
        if (other._universe > _universe)
            throw GraphError("union of vertex sets over different universes");
        for (std::size_t i = 0 ; i < other._words.size() ; ++i)
            _words[i] |= other._words[i];
    }

    auto VertexSet::subtract(const VertexSet & other) -> void
    {
        for (std::size_t i = 0 ; i < _words.size() && i < other._words.size() ; ++i)
            _words[i] &= ~other._words[i];
    }

    auto VertexSet::intersection_count(const VertexSet & other) const -> int
    {
        int result = 0;
        for (std::size_t i = 0 ; i < _words.size() && i < other._words.size() ; ++i)
            result += __builtin_popcountll(_words[i] & other._words[i]);
        return result;
    }

    auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
    {
        for (std::size_t i = 0 ; i < _words.size() ; ++i) {
            Word o = i < other._words.size() ? other._words[i] : 0;
            if (_words[i] & ~o)
                return false;
        }
        return true;
    }

    auto operator& (VertexSet a, const VertexSet & b) -> VertexSet
    {
        a.intersect_with(b);
        return a;
    }

    auto operator| (VertexSet a, const VertexSet & b) -> VertexSet
    {
        a.unite_with(b);
        return a;
    }

    auto operator- (VertexSet a, const VertexSet & b) -> VertexSet
    {
        a.subtract(b);
        return a;
    }

    Graph::Graph(int n) :
        _n(n),
        _rows(n, VertexSet(n)),
        _degree(n, 0)
    {
    }

    auto Graph::add_edge_unchecked(Vertex u, Vertex v) -> void
    {
        _rows[u].insert(v);
        _rows[v].insert(u);
        ++_degree[u];
        ++_degree[v];
        ++_m;
    }

    auto Graph::empty(int n, int vertex_cap) -> Graph
    {
        if (n < 0)
            throw GraphError("negative vertex count");
        if (n > vertex_cap)
            throw CapExceeded("vertex count " + std::to_string(n) + " exceeds cap " + std::to_string(vertex_cap));
        return Graph(n);
    }

    auto Graph::from_edge_list(int n, std::span<const Edge> edges, int vertex_cap) -> Graph
    {
        Graph g = empty(n, vertex_cap);
        for (auto & e : edges) {
            if (e.u < 0 || e.v >= n)
                throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has an endpoint out of range for n=" + std::to_string(n));
            if (e.u == e.v)
                throw GraphError("self-loop at vertex " + std::to_string(e.u));
            if (g.adjacent(e.u, e.v))
                throw GraphError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
            g.add_edge_unchecked(e.u, e.v);
        }
        return g;
    }

    auto Graph::from_edge_list(int n, std::initializer_list<Edge> edges) -> Graph
    {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    auto Graph::all_vertices() const -> VertexSet
    {
        VertexSet result(_n);
        for (Vertex v = 0 ; v < _n ; ++v)
            result.insert(v);
        return result;
    }

    auto Graph::edges() const -> EdgeList
    {
        EdgeList result;
        result.reserve(_m);
        for (Vertex u = 0 ; u < _n ; ++u)
            for (Vertex v = _rows[u].next(u) ; v != -1 ; v = _rows[u].next(v))
                result.emplace_back(u, v);
        return result;
    }

    auto Graph::is_clique(const VertexSet & s) const -> bool
    {
        bool ok = true;
        s.for_each([&] (Vertex v) {
            if (ok && (v >= _n || (s - _rows[v]).count() != 1))
                ok = false;
        });
        return ok;
    }

    auto Graph::is_clique(std::span<const Vertex> s) const -> bool
    {
        for (std::size_t i = 0 ; i < s.size() ; ++i) {
            if (s[i] < 0 || s[i] >= _n)
                return false;
            for (std::size_t j = i + 1 ; j < s.size() ; ++j)
                if (! adjacent(s[i], s[j]))
                    return false;
        }
        return true;
    }

    auto Graph::edges_within(const VertexSet & s) const -> Count
    {
        Count twice = 0;
        s.for_each([&] (Vertex v) { twice += _rows[v].intersection_count(s); });
        return twice / 2;
    }

    auto Graph::check_invariants() const -> bool
    {
        if (static_cast<int>(_rows.size()) != _n || static_cast<int>(_degree.size()) != _n)
            return false;
        Count twice = 0;
        for (Vertex v = 0 ; v < _n ; ++v) {
            if (_rows[v].contains(v) || _rows[v].count() != _degree[v])
                return false;
            bool symmetric = true;
            _rows[v].for_each([&] (Vertex w) { symmetric = symmetric && w < _n && _rows[w].contains(v); });
            if (! symmetric)
                return false;
            twice += _degree[v];
        }
        return twice == 2 * _m;
    }

    auto Graph::operator== (const Graph & other) const -> bool
    {
        return _n == other._n && _m == other._m && _rows == other._rows;
    }

    auto check_vertex_set(const Graph & g, const VertexSet & s) -> void
    {
        if (s.universe() > g.n()) {
            for (Vertex v = s.next(g.n() - 1) ; v != -1 ; v = s.next(v))
                throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.n()));
        }
    }

    auto common_neighbourhood(const Graph & g, const VertexSet & s) -> VertexSet
    {
        check_vertex_set(g, s);
        if (s.empty())
            throw PreconditionError("common neighbourhood of an empty set");
        VertexSet result = g.all_vertices();
        s.for_each([&] (Vertex v) { result.intersect_with(g.neighbourhood(v)); });
        result.subtract(s);
        return result;
    }

    namespace
    {
        // Depth-first over increasing vertex ids; visits cliques of the given
        // size in lexicographic order and stops when the callback returns true.
        auto enumerate_cliques(const Graph & g, int size,
                const std::function<auto (const vector<Vertex> &) -> bool> & callback) -> void
        {
            if (size < 1)
                throw PreconditionError("clique size must be at least 1");
            vector<Vertex> current;
            current.reserve(size);
            bool stop = false;

            std::function<void (const VertexSet &)> expand = [&] (const VertexSet & candidates) {
                for (Vertex v = candidates.first() ; v != -1 && ! stop ; v = candidates.next(v)) {
                    current.push_back(v);
                    if (static_cast<int>(current.size()) == size)
                        stop = callback(current);
                    else {
                        VertexSet next = candidates & g.neighbourhood(v);
                        // only later vertices, so each clique is produced once
                        for (Vertex w = next.first() ; w != -1 && w <= v ; w = next.next(w))
                            next.erase(w);
                        if (next.count() + static_cast<int>(current.size()) >= size)
                            expand(next);
                    }
                    current.pop_back();
                }
            };

            expand(g.all_vertices());
        }
    }

    auto find_clique(const Graph & g, int size) -> std::optional<vector<Vertex>>
    {
        std::optional<vector<Vertex>> result;
        enumerate_cliques(g, size, [&] (const vector<Vertex> & c) {
            result = c;
            return true;
        });
        return result;
    }

    auto all_cliques(const Graph & g, int size) -> vector<vector<Vertex>>
    {
        vector<vector<Vertex>> result;
        enumerate_cliques(g, size, [&] (const vector<Vertex> & c) {
            result.push_back(c);
            return false;
        });
        return result;
    }

    auto induced(const Graph & g, const VertexSet & s) -> InducedSubgraph
    {
        check_vertex_set(g, s);
        InducedSubgraph result;
        result.to_host = s.members();
        vector<int> local(g.n(), -1);
        for (std::size_t i = 0 ; i < result.to_host.size() ; ++i)
            local[result.to_host[i]] = static_cast<int>(i);

        result.graph = Graph(static_cast<int>(result.to_host.size()));
        for (std::size_t i = 0 ; i < result.to_host.size() ; ++i) {
            Vertex u = result.to_host[i];
            const auto & row = g.neighbourhood(u);
            for (Vertex w = row.next(u) ; w != -1 ; w = row.next(w))
                if (local[w] != -1)
                    result.graph.add_edge_unchecked(static_cast<int>(i), local[w]);
        }
        return result;
    }

    auto delete_vertices(const Graph & g, const VertexSet & s) -> InducedSubgraph
    {
        check_vertex_set(g, s);
        return induced(g, g.all_vertices() - s);
    }

    auto delete_edges(const Graph & g, std::span<const Edge> edges) -> Graph
    {
        Graph result = g;
        for (auto & e : edges) {
            if (e.u < 0 || e.v >= g.n())
                throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
            if (! result.adjacent(e.u, e.v))
                throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not present");
            result._rows[e.u].erase(e.v);
            result._rows[e.v].erase(e.u);
            --result._degree[e.u];
            --result._degree[e.v];
            --result._m;
        }
        return result;
    }

    auto spanning_forest_size(const Graph & g) -> Count
    {
        vector<int> parent(g.n());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int (int)> find = [&] (int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        Count result = 0;
        for (auto & e : g.edges()) {
            int a = find(e.u), b = find(e.v);
            if (a != b) {
                parent[a] = b;
                ++result;
            }
        }
        return result;
    }

    auto read_edge_list(std::istream & in) -> Graph
    {
        long long n, m;
        if (! (in >> n >> m))
            throw GraphError("edge list: expected header `n m`");
        if (n < 0 || m < 0)
            throw GraphError("edge list: negative header values");
        if (n > Graph::default_vertex_cap)
            throw CapExceeded("edge list: n=" + std::to_string(n) + " exceeds cap " + std::to_string(Graph::default_vertex_cap));
        EdgeList edges;
        edges.reserve(m);
        for (long long i = 0 ; i < m ; ++i) {
            long long u, v;
            if (! (in >> u >> v))
                throw GraphError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(i));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw GraphError("edge list: edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
            if (u == v)
                throw GraphError("self-loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        string rest;
        if (in >> rest)
            throw GraphError("edge list: trailing content after " + std::to_string(m) + " edges");
        return Graph::from_edge_list(static_cast<int>(n), edges);
    }

    auto read_edge_list_file(const string & path) -> Graph
    {
        std::ifstream in(path);
        if (! in)
            throw Error("cannot open graph file '" + path + "'");
        return read_edge_list(in);
    }

    auto write_edge_list(std::ostream & out, const Graph & g) -> void
    {
        out << g.n() << ' ' << g.m() << '\n';
        for (auto & e : g.edges())
            out << e.u << ' ' << e.v << '\n';
    }

    auto write_edge_list_file(const string & path, const Graph & g) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw Error("cannot write graph file '" + path + "'");
        write_edge_list(out, g);
    }

    auto to_dot(const Graph & g, std::span<const DotCluster> clusters, std::span<const Edge> highlight) -> string
    {
        EdgeList marked(highlight.begin(), highlight.end());
        std::sort(marked.begin(), marked.end());
        std::ostringstream out;
        out << "graph G {\n";
        for (std::size_t c = 0 ; c < clusters.size() ; ++c) {
            out << "  subgraph cluster_" << c << " {\n    label=\"" << clusters[c].name << "\";\n   ";
            for (auto v : clusters[c].members)
                out << ' ' << v << ';';
            out << "\n  }\n";
        }
        for (Vertex v = 0 ; v < g.n() ; ++v)
            if (g.degree(v) == 0)
                out << "  " << v << ";\n";
        for (auto & e : g.edges()) {
            out << "  " << e.u << " -- " << e.v;
            if (std::binary_search(marked.begin(), marked.end(), e))
                out << " [color=red]";
            out << ";\n";
        }
        out << "}\n";
        return out.str();
    }
}
