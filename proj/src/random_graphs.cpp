#include <chordal_forge/random_graphs.hpp>
#include <chordal_forge/bounds.hpp>
#include <chordal_forge/errors.hpp>

#include <algorithm>
#include <numeric>
#include <set>

using std::vector;

namespace chordal_forge
{
    auto uniform(Rng & rng, Count lo, Count hi) -> Count
    {
        return std::uniform_int_distribution<Count>(lo, hi)(rng);
    }

    namespace
    {
        auto all_pairs(int n) -> EdgeList
        {
            EdgeList pairs;
            for (Vertex u = 0 ; u < n ; ++u)
                for (Vertex v = u + 1 ; v < n ; ++v)
                    pairs.emplace_back(u, v);
            return pairs;
        }

        // First m entries of a partial Fisher-Yates shuffle.
        template <typename T_>
        auto sample(vector<T_> items, Count m, Rng & rng) -> vector<T_>
        {
            for (Count i = 0 ; i < m ; ++i) {
                auto j = uniform(rng, i, static_cast<Count>(items.size()) - 1);
                std::swap(items[i], items[j]);
            }
            items.resize(m);
            return items;
        }
    }

    auto random_graph(int n, Count m, Rng & rng) -> Graph
    {
        if (m < 0 || m > binomial2(n))
            throw PreconditionError("random_graph needs 0 <= m <= C(n, 2)");
        auto edges = sample(all_pairs(n), m, rng);
        return Graph::from_edge_list(n, edges);
    }

    auto random_graph_p(int n, double p, Rng & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        EdgeList edges;
        for (auto & e : all_pairs(n))
            if (coin(rng))
                edges.push_back(e);
        return Graph::from_edge_list(n, edges);
    }

    auto random_permutation(int n, Rng & rng) -> vector<Vertex>
    {
        vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return perm;
    }

    auto relabel(const Graph & g, const vector<Vertex> & perm) -> Graph
    {
        if (static_cast<int>(perm.size()) != g.n())
            throw PreconditionError("permutation has the wrong length");
        EdgeList edges;
        for (auto & e : g.edges())
            edges.emplace_back(perm[e.u], perm[e.v]);
        return Graph::from_edge_list(g.n(), edges);
    }

    auto random_trim(const Graph & g, const vector<Vertex> & keep, Count target, Rng & rng) -> Graph
    {
        VertexSet kept(g.n(), keep);
        EdgeList removable;
        for (auto & e : g.edges())
            if (! (kept.contains(e.u) && kept.contains(e.v)))
                removable.push_back(e);
        Count surplus = g.m() - target;
        if (surplus < 0 || surplus > static_cast<Count>(removable.size()))
            throw PreconditionError("cannot trim to the requested edge count");
        auto doomed = sample(removable, surplus, rng);
        return delete_edges(g, doomed);
    }

    auto planted_k4(int n, Rng & rng) -> std::optional<PlantedK4>
    {
        if (n < 5)
            throw PreconditionError("planted_k4 needs n >= 5");
        std::set<Edge> s;
        for (Vertex i = 0 ; i < 4 ; ++i)
            for (Vertex j = i + 1 ; j < 4 ; ++j)
                s.insert(Edge(i, j));

        int kind = static_cast<int>(rng() % 8);
        if (kind >= 6) {
            // Explicit neighbour patterns on the clique, biased towards the
            // configurations of the final branches of the argument. The first
            // two outside vertices see {x2,x3,x4} and {x1,x3,x4}.
            const vector<vector<Vertex>> patterns{ { 0, 1 }, { 0 }, { 1 }, { 1, 2, 3 }, { 0, 2, 3 }, { 2 }, { 3 }, { }, { 0, 2 }, { 1, 3 } };
            vector<double> weights = kind == 6
                ? vector<double>{ 6, 1, 1, 0.5, 0.5, 1, 1, 0.3, 0.5, 0.5 }
                : vector<double>{ 4, 2, 2, 1, 1, 0.5, 0.5, 0.5, 1, 1 };
            std::discrete_distribution<int> pick(weights.begin(), weights.end());
            for (Vertex v = 4 ; v < n ; ++v) {
                int p = v == 4 ? 3 : v == 5 ? 4 : pick(rng);
                for (auto x : patterns[p])
                    s.insert(Edge(v, x));
            }
        }
        else {
            // How many clique vertices each outside vertex sees, with an
            // optional lonely clique vertex whose neighbours see little else.
            const vector<vector<double>> weights{ { 1, 1, 1, 0 }, { 0, 0, 1, 0 }, { 1, 1, 0, 0 },
                { 0.2, 0.3, 1, 1 }, { 0.1, 0.5, 0.5, 0.3 }, { 0, 0.2, 1, 0.6 } };
            std::discrete_distribution<int> pick(weights[kind].begin(), weights[kind].end());
            Vertex lonely_vertex = static_cast<Vertex>(rng() % 4);
            bool lonely = rng() % 2;
            for (Vertex v = 4 ; v < n ; ++v) {
                int j = pick(rng);
                vector<Vertex> xs{ 0, 1, 2, 3 };
                std::shuffle(xs.begin(), xs.end(), rng);
                if (lonely && j >= 2)
                    xs.erase(std::find(xs.begin(), xs.end(), lonely_vertex));
                else if (lonely && j == 1 && rng() % 2)
                    xs = { lonely_vertex };
                for (int i = 0 ; i < j && i < static_cast<int>(xs.size()) ; ++i)
                    s.insert(Edge(v, xs[i]));
            }
        }

        Count target = turan_number(3, n) + 1;
        if (static_cast<Count>(s.size()) > target)
            return std::nullopt;
        vector<int> part(n);
        for (Vertex v = 4 ; v < n ; ++v)
            part[v] = static_cast<int>(rng() % 3);
        EdgeList cross, inner;
        for (Vertex u = 4 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v)
                (part[u] != part[v] ? cross : inner).emplace_back(u, v);
        std::shuffle(cross.begin(), cross.end(), rng);
        std::shuffle(inner.begin(), inner.end(), rng);
        if (rng() % 3 == 0) {
            cross.insert(cross.end(), inner.begin(), inner.end());
            std::shuffle(cross.begin(), cross.end(), rng);
            inner.clear();
        }
        for (auto * pool : { &cross, &inner })
            for (auto & e : *pool) {
                if (static_cast<Count>(s.size()) >= target)
                    break;
                s.insert(e);
            }
        if (static_cast<Count>(s.size()) != target)
            return std::nullopt;

        auto perm = random_permutation(n, rng);
        auto g = relabel(Graph::from_edge_list(n, EdgeList(s.begin(), s.end())), perm);
        return PlantedK4{ std::move(g), { perm[0], perm[1], perm[2], perm[3] } };
    }
}
