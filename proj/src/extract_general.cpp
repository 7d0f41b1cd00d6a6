#include <chordal_forge/extract_general.hpp>
#include <chordal_forge/bounds.hpp>
#include <chordal_forge/errors.hpp>
#include <chordal_forge/oracle.hpp>

#include "extract_support.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

using std::string;
using std::vector;

namespace chordal_forge
{
    using namespace detail;

    auto default_general_params(int k) -> GeneralParams
    {
        GeneralParams p;
        p.k = k;
        p.c = 10.0 * k * k;
        p.c1 = 10.0 * k * p.c;
        p.C = 10.0 * (k + 1) * p.c1;
        return p;
    }

    auto clique_process(const Graph & g, int k) -> CliqueProcessResult
    {
        if (k < 1)
            throw PreconditionError("clique_process needs k >= 1");
        CliqueProcessResult result;
        result.N = g.all_vertices();
        for (int i = 1 ; i < k ; ++i) {
            if (result.N.empty())
                throw PreconditionError("clique process stopped after " + std::to_string(i - 1) + " steps");
            Vertex best = -1;
            result.N.for_each([&] (Vertex v) {
                if (best == -1 || g.degree(v) > g.degree(best))
                    best = v;
            });
            result.clique.push_back(best);
            result.N.intersect_with(g.neighbourhood(best));
        }
        result.edges_in_N = g.edges_within(result.N);
        return result;
    }

    auto forest_select(const Graph & g, int s) -> ForestSelection
    {
        if (s < 0 || s > g.n())
            throw PreconditionError("forest_select needs 0 <= s <= n");

        // Breadth-first order and parents of each component, rooted at its
        // smallest vertex. Any prefix of such an order induces a subtree.
        struct Component
        {
            vector<Vertex> order;
            vector<Vertex> parent;
        };
        vector<Component> components;
        vector<char> seen(g.n(), 0);
        for (Vertex root = 0 ; root < g.n() ; ++root) {
            if (seen[root])
                continue;
            Component c;
            seen[root] = 1;
            c.order.push_back(root);
            c.parent.push_back(-1);
            for (std::size_t head = 0 ; head < c.order.size() ; ++head) {
                Vertex u = c.order[head];
                g.neighbourhood(u).for_each([&] (Vertex w) {
                    if (! seen[w]) {
                        seen[w] = 1;
                        c.order.push_back(w);
                        c.parent.push_back(u);
                    }
                });
            }
            components.push_back(std::move(c));
        }
        std::stable_sort(components.begin(), components.end(), [] (const Component & x, const Component & y) {
            return x.order.size() > y.order.size();
        });

        ForestSelection f;
        f.vertices = VertexSet(g.n());
        int remaining = s;
        for (auto & c : components) {
            if (remaining == 0)
                break;
            int take = std::min<int>(remaining, c.order.size());
            for (int i = 0 ; i < take ; ++i) {
                f.vertices.insert(c.order[i]);
                f.order.push_back(c.order[i]);
                f.parent.push_back(c.parent[i]);
                if (c.parent[i] != -1)
                    f.edges.emplace_back(c.parent[i], c.order[i]);
            }
            ++f.components;
            remaining -= take;
        }
        std::sort(f.edges.begin(), f.edges.end());
        return f;
    }

    auto recursion_budget(int k, int n, double a, int t, double c) -> RecursionBudget
    {
        RecursionBudget b;
        b.a = a;
        b.t = t;
        double root = std::sqrt(2.0 * a / (k * (k + 1.0)));
        double sqrt_n = std::sqrt(static_cast<double>(n));
        b.d0 = (k - 1.0) * n / k + root - c * sqrt_n;
        b.a_prime = a - (k - 1.0) * t * t / (2.0 * k) - t * root + c / 2.0 * t * sqrt_n;
        b.h = (k + 1.0) * (k - 2.0) / 2.0 + 1.0 + 2.0 * std::pow(n, 1.5) / a;
        return b;
    }

    auto heavy_clique(const Graph & g, int size, long node_budget) -> std::optional<vector<Vertex>>
    {
        if (size < 1)
            throw PreconditionError("heavy_clique needs size >= 1");
        int n = g.n();
        if (size > n)
            return std::nullopt;

        // Work in positions of the decreasing-degree order so that the
        // remaining candidates always come heaviest first.
        vector<Vertex> by_degree(n);
        std::iota(by_degree.begin(), by_degree.end(), 0);
        std::stable_sort(by_degree.begin(), by_degree.end(), [&] (Vertex x, Vertex y) {
            return g.degree(x) > g.degree(y);
        });
        vector<int> position(n);
        for (int i = 0 ; i < n ; ++i)
            position[by_degree[i]] = i;
        vector<VertexSet> adjacent(n, VertexSet(n));
        vector<Count> weight(n);
        for (int i = 0 ; i < n ; ++i) {
            weight[i] = g.degree(by_degree[i]);
            g.neighbourhood(by_degree[i]).for_each([&] (Vertex w) { adjacent[i].insert(position[w]); });
        }

        vector<int> current, best;
        Count best_sum = -1;
        long nodes = 0;

        auto search = [&] (auto & self, const VertexSet & candidates, Count sum) -> void {
            if (static_cast<int>(current.size()) == size) {
                if (sum > best_sum) {
                    best_sum = sum;
                    best = current;
                }
                return;
            }
            int need = size - static_cast<int>(current.size());
            for (int p = candidates.first() ; p != -1 ; p = candidates.next(p)) {
                if (nodes >= node_budget && best_sum >= 0)
                    return;
                ++nodes;
                Count bound = sum;
                int counted = 0;
                for (int q = p ; q != -1 && counted < need ; q = candidates.next(q), ++counted)
                    bound += weight[q];
                if (counted < need || bound <= best_sum)
                    return;
                current.push_back(p);
                self(self, candidates & adjacent[p], sum + weight[p]);
                current.pop_back();
            }
        };
        search(search, g.all_vertices(), 0);

        if (best_sum < 0)
            return std::nullopt;
        vector<Vertex> clique;
        for (int p : best)
            clique.push_back(by_degree[p]);
        std::sort(clique.begin(), clique.end());
        return clique;
    }

    namespace
    {
        auto identity(int n) -> vector<Vertex>
        {
            vector<Vertex> v(n);
            std::iota(v.begin(), v.end(), 0);
            return v;
        }

        auto isqrt(Count x) -> Count
        {
            auto r = static_cast<Count>(std::sqrt(static_cast<double>(x)));
            while (r * r > x)
                --r;
            while ((r + 1) * (r + 1) <= x)
                ++r;
            return r;
        }

        auto max_degree_in(const Graph & g, const VertexSet & s) -> Vertex
        {
            Vertex best = -1;
            s.for_each([&] (Vertex v) {
                if (best == -1 || g.degree(v) > g.degree(best))
                    best = v;
            });
            return best;
        }

        auto min_degree_vertex(const Graph & g) -> Vertex
        {
            Vertex best = 0;
            for (Vertex v = 1 ; v < g.n() ; ++v)
                if (g.degree(v) < g.degree(best))
                    best = v;
            return best;
        }

        class GeneralExtractor
        {
            private:
                GeneralParams _p;
                Tracer & _tracer;
                bool _fallback = false;
                vector<RecursionBudget> _budgets;

                auto star(const Graph & g, const vector<Vertex> & to_top, const string & label,
                        const vector<Vertex> & clique) -> ChordalSubgraph
                {
                    auto step = _tracer.open(label, g, to_top, { });
                    auto result = star_union(g, clique);
                    _tracer.close(step, to_top, { }, result);
                    return result;
                }

                // Delete s, solve what is left, and add the deleted vertices
                // back in the given order, each towards its listed clique.
                auto delete_and_rebuild(const Graph & g, const vector<Vertex> & to_top, const string & label,
                        const VertexSet & s, const vector<std::pair<Vertex, vector<Vertex>>> & additions,
                        std::optional<Count> expected_gain) -> ChordalSubgraph
                {
                    auto step = _tracer.open(label, g, to_top, s.members());
                    auto sub = delete_vertices(g, s);
                    auto inner = solve(sub.graph, compose(to_top, sub.to_host));
                    auto builder = into_parent(g, sub, inner);
                    auto before = builder.build().edges;
                    for (auto & [v, clique] : additions)
                        builder.add_vertex(v, clique);
                    auto result = builder.build();
                    if (expected_gain)
                        expect(result.edge_count() - static_cast<Count>(before.size()) == *expected_gain,
                                "reassembly added a different number of edges than counted");
                    _tracer.close(step, to_top, before, result);
                    return result;
                }

                auto fallback(const Graph & g, const vector<Vertex> & to_top) -> ChordalSubgraph
                {
                    _fallback = true;
                    int k = _p.k;
                    if (auto clique = heavy_clique(g, k + 1))
                        return star(g, to_top, "fallback-clique-star", *clique);
                    if (g.n() <= f_exact_vertex_cap) {
                        auto step = _tracer.open("fallback-oracle", g, to_top, { });
                        auto result = max_chordal_subgraph(g).witness;
                        _tracer.close(step, to_top, { }, result);
                        return result;
                    }
                    Vertex v = min_degree_vertex(g);
                    return delete_and_rebuild(g, to_top, "fallback-min-degree", VertexSet(g.n(), { v }), { }, std::nullopt);
                }

                auto small_surplus(const Graph & g, const vector<Vertex> & to_top) -> ChordalSubgraph
                {
                    int k = _p.k, n = g.n();
                    Vertex v = min_degree_vertex(g);
                    // floor((k-1)n/k) - delta <= c1 sqrt(n), squared.
                    double gap = static_cast<double>((k - 1) * static_cast<Count>(n) / k - g.degree(v));
                    bool high_minimum = gap <= 0 || gap * gap <= _p.c1 * _p.c1 * n;
                    if (high_minimum) {
                        auto clique = heavy_clique(g, k + 1);
                        if (! clique)
                            return fallback(g, to_top);
                        return star(g, to_top, "small-a-clique-star", *clique);
                    }
                    return delete_and_rebuild(g, to_top, "small-a-min-degree", VertexSet(n, { v }), { }, std::nullopt);
                }

                auto large_surplus(const Graph & g, const vector<Vertex> & to_top, Count a) -> ChordalSubgraph
                {
                    int k = _p.k, n = g.n();
                    CliqueProcessResult process;
                    try {
                        process = clique_process(g, k);
                    }
                    catch (const PreconditionError &) {
                        return fallback(g, to_top);
                    }
                    auto & x = process.clique;
                    int s = static_cast<int>(isqrt(n));
                    double d0 = recursion_budget(k, n, static_cast<double>(a), 0, _p.c).d0;

                    VertexSet forest_vertices(n);
                    vector<Vertex> order, parent;
                    Count forest_edges = 0;
                    string label;

                    Vertex xk = max_degree_in(g, process.N);
                    if (xk != -1 && g.degree(xk) >= d0) {
                        auto common = process.N & g.neighbourhood(xk);
                        Vertex y = max_degree_in(g, common);
                        if (y == -1)
                            return fallback(g, to_top);
                        if (g.degree(y) >= d0) {
                            auto clique = x;
                            clique.push_back(xk);
                            clique.push_back(y);
                            std::sort(clique.begin(), clique.end());
                            return star(g, to_top, "case-a-clique-star", clique);
                        }
                        label = "case-a-star-forest";
                        forest_vertices.insert(xk);
                        order.push_back(xk);
                        parent.push_back(-1);
                        for (Vertex w = common.first() ; w != -1 && static_cast<int>(order.size()) < s ; w = common.next(w)) {
                            forest_vertices.insert(w);
                            order.push_back(w);
                            parent.push_back(xk);
                            ++forest_edges;
                        }
                        if (static_cast<int>(order.size()) < s)
                            label += ":short";
                    }
                    else {
                        if (process.N.count() < s || s < 1)
                            return fallback(g, to_top);
                        label = "case-b-forest";
                        auto local = induced(g, process.N);
                        auto f = forest_select(local.graph, s);
                        for (std::size_t i = 0 ; i < f.order.size() ; ++i) {
                            Vertex v = local.to_host[f.order[i]];
                            forest_vertices.insert(v);
                            order.push_back(v);
                            parent.push_back(f.parent[i] == -1 ? -1 : local.to_host[f.parent[i]]);
                        }
                        forest_edges = static_cast<Count>(f.edges.size());
                    }

                    auto deleted = forest_vertices;
                    vector<std::pair<Vertex, vector<Vertex>>> additions;
                    for (std::size_t i = 1 ; i < x.size() ; ++i) {
                        deleted.insert(x[i]);
                        additions.emplace_back(x[i], vector<Vertex>(x.begin(), x.begin() + i));
                    }
                    for (std::size_t i = 0 ; i < order.size() ; ++i) {
                        auto clique = x;
                        if (parent[i] != -1)
                            clique.push_back(parent[i]);
                        additions.emplace_back(order[i], std::move(clique));
                    }
                    int t = deleted.count();
                    _budgets.push_back(recursion_budget(k, n, static_cast<double>(a), t, _p.c));
                    Count km1 = k - 1;
                    Count gain = km1 * (km1 - 1) / 2 + km1 * static_cast<Count>(order.size()) + forest_edges;
                    return delete_and_rebuild(g, to_top, label, deleted, additions, gain);
                }

            public:
                GeneralExtractor(const GeneralParams & p, Tracer & tracer) :
                    _p(p),
                    _tracer(tracer)
                {
                }

                auto solve(const Graph & g, const vector<Vertex> & to_top) -> ChordalSubgraph
                {
                    int k = _p.k, n = g.n();
                    // A chordal graph is its own best subgraph.
                    if (is_chordal(g).chordal) {
                        auto step = _tracer.open("chordal-host", g, to_top, { });
                        auto edges = g.edges();
                        auto result = certify_chordal(g, edges);
                        _tracer.close(step, to_top, { }, result);
                        return result;
                    }
                    Count a = g.m() - turan_number(k, n);
                    if (a < 1)
                        return fallback(g, to_top);
                    double limit = (_p.c * k + 1.0) * (_p.c * k + 1.0) * n;
                    if (static_cast<double>(a) <= limit)
                        return small_surplus(g, to_top);
                    return large_surplus(g, to_top, a);
                }

                auto used_fallback() const -> bool { return _fallback; }
                auto budgets() const -> const vector<RecursionBudget> & { return _budgets; }
        };
    }

    auto extract_general(const Graph & g, const GeneralParams & p) -> ExtractionReport
    {
        if (p.k < 1)
            throw PreconditionError("extract_general needs k >= 1");
        if (! (0 < p.c && p.c < p.c1 && p.c1 < p.C))
            throw PreconditionError("extract_general needs 0 < c < c1 < C");
        Count a = g.m() - turan_number(p.k, g.n());
        if (a < 1)
            throw PreconditionError("extract_general needs m >= t_k(n) + 1 = " + std::to_string(turan_number(p.k, g.n()) + 1));

        Tracer tracer;
        GeneralExtractor extractor(p, tracer);
        ExtractionReport r;
        r.algorithm = "general";
        r.n = g.n();
        r.m = g.m();
        r.subgraph = extractor.solve(g, identity(g.n()));
        r.achieved = r.subgraph.edge_count();
        r.trace = tracer.steps();

        GeneralDiagnostics d;
        d.k = p.k;
        d.c = p.c;
        d.c1 = p.c1;
        d.C = p.C;
        d.a = a;
        d.target_without_C = general_target({ p.k, g.n(), static_cast<double>(a), 0.0 });
        double sqrt_n = std::sqrt(static_cast<double>(g.n()));
        d.fitted_C = std::max(0.0, (d.target_without_C - static_cast<double>(r.achieved)) / sqrt_n);
        d.used_fallback = extractor.used_fallback();
        d.budgets = extractor.budgets();

        // Outside the asymptotic regime the requested C may be too small; the
        // guarantee is then stated with the fitted constant instead.
        double effective_C = std::max(p.C, d.fitted_C);
        double target = general_target({ p.k, g.n(), static_cast<double>(a), effective_C });
        r.guarantee = std::max<Count>(0, static_cast<Count>(std::ceil(target - 1e-9)));
        r.general = d;
        return r;
    }
}
