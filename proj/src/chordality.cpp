#include <chordal_forge/chordality.hpp>
#include <chordal_forge/errors.hpp>

#include <algorithm>
#include <deque>

using std::optional;
using std::string;
using std::vector;

namespace chordal_forge
{
    auto maximum_cardinality_search(const Graph & g) -> EliminationOrder
    {
        int n = g.n();
        vector<int> weight(n, 0);
        vector<char> visited(n, 0);
        EliminationOrder visit;
        visit.reserve(n);

        for (int step = 0 ; step < n ; ++step) {
            Vertex best = -1;
            for (Vertex v = 0 ; v < n ; ++v)
                if (! visited[v] && (best == -1 || weight[v] > weight[best]))
                    best = v;
            visited[best] = 1;
            visit.push_back(best);
            g.neighbourhood(best).for_each([&] (Vertex w) {
                if (! visited[w])
                    ++weight[w];
            });
        }

        std::reverse(visit.begin(), visit.end());
        return visit;
    }

    namespace
    {
        auto check_permutation(int n, std::span<const Vertex> order) -> vector<int>
        {
            if (static_cast<int>(order.size()) != n)
                throw PreconditionError("elimination order has " + std::to_string(order.size()) + " entries, expected " + std::to_string(n));
            vector<int> position(n, -1);
            for (std::size_t i = 0 ; i < order.size() ; ++i) {
                Vertex v = order[i];
                if (v < 0 || v >= n || position[v] != -1)
                    throw PreconditionError("elimination order is not a permutation of 0..n-1");
                position[v] = static_cast<int>(i);
            }
            return position;
        }

        struct PeoFailure
        {
            Vertex v, p, w;
        };

        // Later neighbours L(v); with p the earliest of them, every other
        // member of L(v) must be adjacent to p.
        auto find_peo_failure(const Graph & g, std::span<const Vertex> order, const vector<int> & position) -> optional<PeoFailure>
        {
            int n = g.n();
            VertexSet later = g.all_vertices();
            for (int i = 0 ; i < n ; ++i) {
                Vertex v = order[i];
                later.erase(v);
                VertexSet l = g.neighbourhood(v) & later;
                if (l.count() < 2)
                    continue;
                Vertex p = -1;
                l.for_each([&] (Vertex u) {
                    if (p == -1 || position[u] < position[p])
                        p = u;
                });
                l.erase(p);
                VertexSet missing = l - g.neighbourhood(p);
                if (! missing.empty())
                    return PeoFailure{ v, p, missing.first() };
            }
            return std::nullopt;
        }

        // Shortest p-w path avoiding v and the rest of N(v). Together with v it
        // closes an induced cycle of length at least four.
        auto hole_through(const Graph & g, Vertex v, Vertex p, Vertex w) -> optional<vector<Vertex>>
        {
            VertexSet blocked = g.neighbourhood(v);
            blocked.insert(v);
            blocked.erase(p);
            blocked.erase(w);

            vector<Vertex> parent(g.n(), -1);
            vector<char> seen(g.n(), 0);
            std::deque<Vertex> queue{ p };
            seen[p] = 1;
            while (! queue.empty()) {
                Vertex u = queue.front();
                queue.pop_front();
                if (u == w)
                    break;
                VertexSet next = g.neighbourhood(u) - blocked;
                next.for_each([&] (Vertex x) {
                    if (! seen[x]) {
                        seen[x] = 1;
                        parent[x] = u;
                        queue.push_back(x);
                    }
                });
            }
            if (! seen[w])
                return std::nullopt;

            vector<Vertex> path;
            for (Vertex u = w ; u != -1 ; u = parent[u])
                path.push_back(u);
            std::reverse(path.begin(), path.end());
            vector<Vertex> cycle{ v };
            cycle.insert(cycle.end(), path.begin(), path.end());
            return cycle;
        }

        auto find_any_hole(const Graph & g) -> optional<vector<Vertex>>
        {
            for (Vertex v = 0 ; v < g.n() ; ++v) {
                auto nb = g.neighbourhood(v).members();
                for (std::size_t i = 0 ; i < nb.size() ; ++i)
                    for (std::size_t j = i + 1 ; j < nb.size() ; ++j)
                        if (! g.adjacent(nb[i], nb[j]))
                            if (auto c = hole_through(g, v, nb[i], nb[j]))
                                return c;
            }
            return std::nullopt;
        }
    }

    auto is_chordal(const Graph & g) -> ChordalityWitness
    {
        ChordalityWitness result;
        auto order = maximum_cardinality_search(g);
        auto position = check_permutation(g.n(), order);
        auto failure = find_peo_failure(g, order, position);
        if (! failure) {
            result.chordal = true;
            result.peo = std::move(order);
            return result;
        }

        auto hole = hole_through(g, failure->v, failure->p, failure->w);
        if (! hole)
            hole = find_any_hole(g);
        if (! hole)
            throw InternalInvariantError("elimination order failed but no induced hole exists");
        result.hole = std::move(*hole);
        return result;
    }

    auto verify_peo(const Graph & g, std::span<const Vertex> order) -> bool
    {
        auto position = check_permutation(g.n(), order);
        return ! find_peo_failure(g, order, position);
    }

    auto is_induced_hole(const Graph & g, std::span<const Vertex> cycle) -> bool
    {
        int len = static_cast<int>(cycle.size());
        if (len < 4)
            return false;
        VertexSet members(g.n());
        for (auto v : cycle) {
            if (v < 0 || v >= g.n() || members.contains(v))
                return false;
            members.insert(v);
        }
        for (int i = 0 ; i < len ; ++i) {
            Vertex v = cycle[i];
            VertexSet expected(g.n(), { cycle[(i + 1) % len], cycle[(i + len - 1) % len] });
            if (! ((g.neighbourhood(v) & members) == expected))
                return false;
        }
        return true;
    }

    ChordalBuilder::ChordalBuilder(Graph host) :
        _host(std::move(host)),
        _adjacency(_host.n(), VertexSet(_host.n())),
        _present(_host.n(), 0)
    {
    }

    auto ChordalBuilder::from_subgraph(Graph host, const ChordalSubgraph & sub) -> ChordalBuilder
    {
        if (sub.n != host.n())
            throw CertificateError("subgraph on " + std::to_string(sub.n) + " vertices, host has " + std::to_string(host.n()));
        ChordalBuilder result(std::move(host));
        for (auto & a : sub.certificate)
            result.add_vertex(a.vertex, a.neighbours);

        auto edges = sub.edges;
        std::sort(edges.begin(), edges.end());
        if (result.build().edges != edges)
            throw CertificateError("certificate does not reproduce the subgraph's edge set");
        return result;
    }

    auto ChordalBuilder::add_vertex(Vertex v, std::span<const Vertex> neighbours) -> ChordalBuilder &
    {
        int n = _host.n();
        if (v < 0 || v >= n)
            throw CertificateError("vertex " + std::to_string(v) + " out of range");
        if (_present[v] && ! _adjacency[v].empty())
            throw CertificateError("vertex " + std::to_string(v) + " is already present with neighbours");

        // A lone neighbour that is not yet present joins as an isolated
        // vertex first, which keeps replay order intact.
        if (neighbours.size() == 1) {
            Vertex w = neighbours[0];
            if (w >= 0 && w < n && w != v && ! _present[w] && _host.adjacent(v, w)) {
                _present[w] = 1;
                _log.push_back(Addition{ w, { } });
            }
        }

        VertexSet nb(n);
        for (auto w : neighbours) {
            if (w < 0 || w >= n || w == v || ! _present[w] || nb.contains(w))
                throw CertificateError("neighbour " + std::to_string(w) + " of vertex " + std::to_string(v) + " is not a distinct present vertex");
            if (! _host.adjacent(v, w))
                throw CertificateError("edge (" + std::to_string(v) + "," + std::to_string(w) + ") is not a host edge");
            nb.insert(w);
        }
        bool clique = true;
        nb.for_each([&] (Vertex w) {
            if (clique && (nb - _adjacency[w]).count() != 1)
                clique = false;
        });
        if (! clique)
            throw CertificateError("neighbourhood of vertex " + std::to_string(v) + " is not a clique in the current subgraph");

        if (_present[v])
            std::erase_if(_log, [v] (const Addition & a) { return a.vertex == v; });

        _present[v] = 1;
        nb.for_each([&] (Vertex w) {
            _adjacency[v].insert(w);
            _adjacency[w].insert(v);
            ++_edges;
        });
        _log.push_back(Addition{ v, nb.members() });
        return *this;
    }

    auto ChordalBuilder::add_vertex(Vertex v, std::initializer_list<Vertex> neighbours) -> ChordalBuilder &
    {
        return add_vertex(v, std::span<const Vertex>(neighbours.begin(), neighbours.size()));
    }

    auto ChordalBuilder::remove_leaf_edge(Vertex u, Vertex v) -> ChordalBuilder &
    {
        int n = _host.n();
        if (u < 0 || v < 0 || u >= n || v >= n || ! _adjacency[u].contains(v))
            throw CertificateError("cannot remove absent edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        Vertex leaf, other;
        if (degree(v) == 1)
            leaf = v, other = u;
        else if (degree(u) == 1)
            leaf = u, other = v;
        else
            throw CertificateError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has no degree-one endpoint");

        _adjacency[leaf].erase(other);
        _adjacency[other].erase(leaf);
        --_edges;
        for (auto & a : _log) {
            if (a.vertex == leaf)
                a.neighbours.clear();
            else if (a.vertex == other)
                std::erase(a.neighbours, leaf);
        }
        return *this;
    }

    auto ChordalBuilder::build() const -> ChordalSubgraph
    {
        ChordalSubgraph result;
        result.n = _host.n();
        for (Vertex u = 0 ; u < result.n ; ++u)
            for (Vertex w = _adjacency[u].next(u) ; w != -1 ; w = _adjacency[u].next(w))
                result.edges.emplace_back(u, w);
        result.certificate = _log;
        return result;
    }

    auto certificate_problem(const Graph & host, const ChordalSubgraph & sub) -> optional<string>
    {
        try {
            ChordalBuilder::from_subgraph(host, sub);
        }
        catch (const Error & e) {
            return string(e.what());
        }
        return std::nullopt;
    }

    auto verify_certificate(const Graph & host, const ChordalSubgraph & sub) -> bool
    {
        return ! certificate_problem(host, sub);
    }

    auto as_graph(const ChordalSubgraph & sub) -> Graph
    {
        return Graph::from_edge_list(sub.n, sub.edges);
    }

    auto certify_chordal(const Graph & host, std::span<const Edge> edges) -> ChordalSubgraph
    {
        for (auto & e : edges)
            if (e.v >= host.n() || ! host.adjacent(e.u, e.v))
                throw CertificateError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not a host edge");
        Graph h = Graph::from_edge_list(host.n(), edges);
        auto witness = is_chordal(h);
        if (! witness.chordal)
            throw CertificateError("edge set is not chordal");

        ChordalSubgraph result;
        result.n = h.n();
        result.edges = h.edges();
        VertexSet added(h.n());
        for (auto it = witness.peo.rbegin() ; it != witness.peo.rend() ; ++it) {
            Vertex v = *it;
            if (h.degree(v) > 0)
                result.certificate.push_back(Addition{ v, (h.neighbourhood(v) & added).members() });
            added.insert(v);
        }
        return result;
    }

    auto lift(const ChordalSubgraph & sub, std::span<const Vertex> to_parent, int parent_n) -> ChordalSubgraph
    {
        if (static_cast<int>(to_parent.size()) != sub.n)
            throw PreconditionError("vertex map has wrong size for lifting");
        ChordalSubgraph result;
        result.n = parent_n;
        for (auto & e : sub.edges)
            result.edges.emplace_back(to_parent[e.u], to_parent[e.v]);
        std::sort(result.edges.begin(), result.edges.end());
        for (auto & a : sub.certificate) {
            Addition b{ to_parent[a.vertex], { } };
            for (auto w : a.neighbours)
                b.neighbours.push_back(to_parent[w]);
            result.certificate.push_back(std::move(b));
        }
        return result;
    }

    auto star_union(const Graph & g, const VertexSet & s) -> ChordalSubgraph
    {
        check_vertex_set(g, s);
        if (! g.is_clique(s))
            throw PreconditionError("star union centre is not a clique");
        ChordalBuilder builder(g);
        VertexSet so_far(g.n());
        s.for_each([&] (Vertex v) {
            builder.add_vertex(v, so_far.members());
            so_far.insert(v);
        });
        for (Vertex u = 0 ; u < g.n() ; ++u) {
            if (s.contains(u))
                continue;
            VertexSet nb = g.neighbourhood(u) & s;
            if (! nb.empty())
                builder.add_vertex(u, nb.members());
        }
        return builder.build();
    }

    auto star_union(const Graph & g, std::span<const Vertex> s) -> ChordalSubgraph
    {
        VertexSet set(g.n());
        for (auto v : s) {
            if (v < 0 || v >= g.n())
                throw GraphError("vertex " + std::to_string(v) + " out of range");
            set.insert(v);
        }
        return star_union(g, set);
    }
}
