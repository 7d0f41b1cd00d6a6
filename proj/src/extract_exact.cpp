#include <chordal_forge/extract_exact.hpp>
#include <chordal_forge/bounds.hpp>
#include <chordal_forge/errors.hpp>
#include <chordal_forge/oracle.hpp>

#include "extract_support.hpp"

#include <algorithm>
#include <string>

using std::string;
using std::vector;

namespace chordal_forge
{
    using namespace detail;

    auto smallest_triangle(const Graph & g) -> std::optional<TriangleAnchor>
    {
        auto c = find_clique(g, 3);
        if (! c)
            return std::nullopt;
        return TriangleAnchor{ (*c)[0], (*c)[1], (*c)[2] };
    }

    auto smallest_k4(const Graph & g) -> std::optional<CliqueAnchor4>
    {
        auto c = find_clique(g, 4);
        if (! c)
            return std::nullopt;
        return CliqueAnchor4{ { (*c)[0], (*c)[1], (*c)[2], (*c)[3] } };
    }

    auto dirac_diamond(const Graph & g) -> std::optional<DiracDiamond>
    {
        for (auto & t : all_cliques(g, 3)) {
            auto common = common_neighbourhood(g, VertexSet(g.n(), t));
            if (common.count() >= 2) {
                Vertex u = common.first();
                return DiracDiamond{ { t[0], t[1], t[2] }, u, common.next(u) };
            }
        }
        return std::nullopt;
    }

    namespace
    {
        // ---- k = 1 ----------------------------------------------------------

        auto k1_level(const Graph & g, const vector<Vertex> & to_top, Tracer & tracer) -> ChordalSubgraph
        {
            if (g.m() == 0)
                return ChordalSubgraph{ g.n(), { }, { } };

            int r = g1(g.m());
            Vertex x = 0;
            while (g.degree(x) == 0)
                ++x;
            Vertex y = g.neighbourhood(x).first();

            ChordalSubgraph result;
            if (g.degree(x) + g.degree(y) >= r) {
                auto step = tracer.open("star", g, to_top, { });
                result = star_union(g, VertexSet(g.n(), { x, y }));
                tracer.close(step, to_top, { }, result);
            }
            else {
                Vertex del = g.degree(x) <= g.degree(y) ? x : y;
                Vertex other = del == x ? y : x;
                auto step = tracer.open("delete-endpoint", g, to_top, { del });
                auto sub = delete_vertices(g, VertexSet(g.n(), { del }));
                auto inner = k1_level(sub.graph, compose(to_top, sub.to_host), tracer);
                auto builder = into_parent(g, sub, inner);
                auto before = builder.build().edges;
                builder.add_vertex(del, { other });
                result = builder.build();
                tracer.close(step, to_top, before, result);
            }
            expect(result.edge_count() >= r - 1, "k1 level below g1(m) - 1");
            return result;
        }

        // ---- k = 2 ----------------------------------------------------------

        auto k2_level(const Graph & g, TriangleAnchor t, const vector<Vertex> & to_top, Tracer & tracer) -> ChordalSubgraph;

        auto k2_recurse(const Graph & g, const InducedSubgraph & sub, const vector<Vertex> & to_top, Tracer & tracer,
                std::optional<TriangleAnchor> anchor = std::nullopt) -> ChordalBuilder
        {
            expect(sub.graph.m() >= turan_number(2, sub.graph.n()) + 1, "k2 recursion below t_2 + 1");
            if (! anchor)
                anchor = smallest_triangle(sub.graph);
            expect(anchor.has_value(), "k2 recursion graph has no triangle");
            auto inner = k2_level(sub.graph, *anchor, compose(to_top, sub.to_host), tracer);
            return into_parent(g, sub, inner);
        }

        auto k2_level(const Graph & g, TriangleAnchor t, const vector<Vertex> & to_top, Tracer & tracer) -> ChordalSubgraph
        {
            int n = g.n();
            Count m = g.m();
            expect(m >= turan_number(2, n) + 1, "k2 level below t_2(n) + 1");
            Count bound = g2(n, m).value;
            std::array<Vertex, 3> tri{ t.x, t.y, t.z };
            std::sort(tri.begin(), tri.end());
            auto d = [&] (Vertex v) { return Count{ g.degree(v) }; };

            ChordalSubgraph result;
            auto check = [&] () {
                expect(result.edge_count() >= bound - 3, "k2 level below g2(n,m) - 3");
                expect(contains_clique(result, tri), "k2 level lost its anchor triangle");
                return result;
            };

            if (n <= 3) {
                auto step = tracer.open("base", g, to_top, { });
                result = max_chordal_subgraph(g).witness;
                tracer.close(step, to_top, { }, result);
                return check();
            }

            // Case 1
            if (d(tri[0]) + d(tri[1]) + d(tri[2]) >= bound) {
                auto step = tracer.open("case-1", g, to_top, { });
                result = star_union(g, tri);
                tracer.close(step, to_top, { }, result);
                return check();
            }

            const std::array<std::array<int, 3>, 3> pairs{ { { 0, 1, 2 }, { 0, 2, 1 }, { 1, 2, 0 } } };

            // Case 2
            for (auto & [i, j, k] : pairs) {
                Vertex u = tri[i], v = tri[j], w = tri[k];
                if (d(u) + d(v) <= n) {
                    auto step = tracer.open("case-2", g, to_top, { u, v });
                    auto sub = delete_vertices(g, VertexSet(n, { u, v }));
                    auto builder = k2_recurse(g, sub, to_top, tracer);
                    auto before = builder.build().edges;
                    builder.add_vertex(u, { w });
                    builder.add_vertex(v, { u, w });
                    result = builder.build();
                    tracer.close(step, to_top, before, result);
                    return check();
                }
            }

            expect(m >= turan_number(2, n) + 2, "cases 1-2 failed at m = t_2(n) + 1");

            // Case 3
            for (auto & [i, j, k] : pairs) {
                Vertex u = tri[i], v = tri[j], w = tri[k];
                auto common = g.neighbourhood(u) & g.neighbourhood(v);
                if (common.count() != 1)
                    continue;

                expect(d(u) + d(v) == n + 1, "case 3 degree sum is not n + 1");
                auto step = tracer.open("case-3", g, to_top, { u, v });
                auto sub = delete_vertices(g, VertexSet(n, { u, v }));
                auto builder = k2_recurse(g, sub, to_top, tracer);
                auto before = builder.build().edges;

                if (builder.degree(w) == 0) {
                    auto rest = g.neighbourhood(w) - VertexSet(n, { u, v });
                    expect(! rest.empty(), "case 3: z has no neighbour outside the triangle");
                    builder.add_vertex(w, { rest.first() });
                    builder.add_vertex(u, { w });
                    builder.add_vertex(v, { u, w });
                }
                else {
                    Vertex w2 = builder.neighbourhood(w).first();
                    bool at_u = g.adjacent(u, w2), at_v = g.adjacent(v, w2);
                    expect(at_u != at_v, "case 3: neighbour of z sees both or neither of x, y");
                    Vertex p = at_u ? u : v, q = at_u ? v : u;
                    builder.add_vertex(p, { w, w2 });
                    builder.add_vertex(q, { p, w });
                }
                result = builder.build();
                tracer.close(step, to_top, before, result);
                return check();
            }

            // Case 4
            Vertex x = tri[0];
            for (auto v : tri)
                if (d(v) < d(x))
                    x = v;
            vector<Vertex> yz;
            for (auto v : tri)
                if (v != x)
                    yz.push_back(v);
            auto common = (g.neighbourhood(yz[0]) & g.neighbourhood(yz[1])) - VertexSet(n, { x });
            expect(! common.empty(), "case 4: y, z have no second common neighbour");
            expect(3 * d(x) <= bound - 1, "case 4: minimum anchor degree too large");
            Vertex w = common.first();

            auto step = tracer.open("case-4", g, to_top, { x });
            auto sub = delete_vertices(g, VertexSet(n, { x }));
            auto builder = k2_recurse(g, sub, to_top, tracer,
                    TriangleAnchor{ local_id(sub, yz[0]), local_id(sub, yz[1]), local_id(sub, w) });
            auto before = builder.build().edges;
            builder.add_vertex(x, { yz[0], yz[1] });
            result = builder.build();
            tracer.close(step, to_top, before, result);
            return check();
        }

        // ---- k = 3 ----------------------------------------------------------

        using Quad = std::array<Vertex, 4>;

        auto k3_level(const Graph & g, Quad x, const vector<Vertex> & to_top, Tracer & tracer) -> ChordalSubgraph;

        auto trim_keeping(const Graph & g, const Quad & anchor, Count target) -> Graph
        {
            expect(g.m() >= target, "graph already below the K4 threshold");
            Count surplus = g.m() - target;
            EdgeList drop;
            for (auto & e : g.edges()) {
                if (surplus == 0)
                    break;
                bool in_anchor = std::find(anchor.begin(), anchor.end(), e.u) != anchor.end()
                    && std::find(anchor.begin(), anchor.end(), e.v) != anchor.end();
                if (! in_anchor) {
                    drop.push_back(e);
                    --surplus;
                }
            }
            expect(surplus == 0, "cannot trim without touching the anchor");
            return delete_edges(g, drop);
        }

        // Anchor given in g's ids; the smallest K4 of sub is used otherwise.
        auto k3_recurse(const Graph & g, const InducedSubgraph & sub, const vector<Vertex> & to_top, Tracer & tracer,
                std::optional<Quad> anchor = std::nullopt) -> ChordalBuilder
        {
            int n2 = sub.graph.n();
            expect(n2 >= 4, "K4 recursion on fewer than four vertices");
            expect(sub.graph.m() >= turan_number(3, n2) + 1, "K4 recursion below t_3 + 1");
            Quad local;
            if (anchor) {
                for (int i = 0 ; i < 4 ; ++i)
                    local[i] = local_id(sub, (*anchor)[i]);
            }
            else {
                auto k4 = smallest_k4(sub.graph);
                expect(k4.has_value(), "K4 recursion graph has no K4");
                local = k4->x;
            }
            auto trimmed = trim_keeping(sub.graph, local, turan_number(3, n2) + 1);
            auto inner = k3_level(trimmed, local, compose(to_top, sub.to_host), tracer);
            return into_parent(g, sub, inner);
        }

        auto incident(const Graph & g, Vertex v) -> EdgeList
        {
            EdgeList result;
            g.neighbourhood(v).for_each([&] (Vertex w) { result.emplace_back(v, w); });
            return result;
        }

        auto k3_level(const Graph & g, Quad x, const vector<Vertex> & to_top, Tracer & tracer) -> ChordalSubgraph
        {
            int n = g.n();
            Count m = g.m();
            expect(m == turan_number(3, n) + 1, "K4 level not at t_3(n) + 1");
            std::sort(x.begin(), x.end());
            Count bound = g3(n);
            int third = 2 * n / 3;
            VertexSet xs(n, x);
            auto d = [&] (Vertex v) { return Count{ g.degree(v) }; };
            auto x_neighbours = [&] (Vertex v) { return g.neighbourhood(v) & xs; };
            auto outside = [&] () { return g.all_vertices() - xs; };

            ChordalSubgraph result;
            const Quad anchor = x;
            auto check = [&] () {
                expect(result.edge_count() >= bound - 6, "K4 level below g3(n) - 6");
                expect(contains_clique(result, anchor), "K4 level lost its anchor clique");
                return result;
            };
            auto add_in_order = [&] (ChordalBuilder & b, std::initializer_list<Vertex> order, VertexSet done) {
                for (auto v : order) {
                    b.add_vertex(v, done.members());
                    done.insert(v);
                }
            };

            if (n <= 4) {
                auto step = tracer.open("base", g, to_top, { });
                result = max_chordal_subgraph(g).witness;
                tracer.close(step, to_top, { }, result);
                return check();
            }

            // No outside vertex sees three of X.
            bool some_three = false;
            outside().for_each([&] (Vertex v) { if (x_neighbours(v).count() >= 3) some_three = true; });
            if (! some_three) {
                int a0 = 0, a2 = 0;
                outside().for_each([&] (Vertex v) {
                    int c = x_neighbours(v).count();
                    a0 += c == 0;
                    a2 += c == 2;
                });
                Count degree_sum = d(x[0]) + d(x[1]) + d(x[2]) + d(x[3]);
                expect(degree_sum == n + 8 + a2 - a0, "degenerate X degree identity");

                if (a2 > 0 && a2 <= n - 5) {
                    Vertex z = -1;
                    outside().for_each([&] (Vertex v) { if (z == -1 && x_neighbours(v).count() == 2) z = v; });
                    auto zx = x_neighbours(z).members();
                    Vertex p = zx[0], q = zx[1];
                    vector<Vertex> rest;
                    for (auto v : x)
                        if (v != p && v != q)
                            rest.push_back(v);

                    auto step = tracer.open("claim0-case1", g, to_top, { q, rest[0], rest[1] });
                    auto stripped = delete_edges(g, incident(g, p));
                    auto sub = delete_vertices(stripped, VertexSet(n, { q, rest[0], rest[1] }));
                    expect(n - 3 >= 4, "claim0 case 1 with n - 3 < 4");
                    auto builder = k3_recurse(g, sub, to_top, tracer);
                    auto before = builder.build().edges;
                    builder.add_vertex(p, { z });
                    builder.add_vertex(q, { p, z });
                    builder.add_vertex(rest[0], { p, q });
                    builder.add_vertex(rest[1], { p, q, rest[0] });
                    result = builder.build();
                    tracer.close(step, to_top, before, result);
                    return check();
                }

                if (a2 == n - 4) {
                    Vertex v = outside().first();
                    Vertex p = x_neighbours(v).first();
                    vector<Vertex> rest;
                    for (auto w : x)
                        if (w != p)
                            rest.push_back(w);

                    auto step = tracer.open("claim0-case2", g, to_top, rest);
                    auto drop = incident(g, p);
                    std::erase(drop, Edge(p, v));
                    auto stripped = delete_edges(g, drop);
                    auto sub = delete_vertices(stripped, VertexSet(n, rest));
                    expect(sub.graph.m() == turan_number(3, n - 3) + 1, "claim0 case 2 edge count");
                    auto k4 = smallest_k4(sub.graph);
                    expect(k4.has_value(), "claim0 case 2: no K4 after deletion");
                    Quad ys;
                    for (int i = 0 ; i < 4 ; ++i)
                        ys[i] = sub.to_host[k4->x[i]];
                    auto builder = k3_recurse(g, sub, to_top, tracer, ys);
                    auto before = builder.build().edges;

                    Vertex y1 = -1, y2 = -1, xk = -1;
                    for (int i = 0 ; i < 4 && xk == -1 ; ++i)
                        for (int j = i + 1 ; j < 4 && xk == -1 ; ++j) {
                            auto shared = x_neighbours(ys[i]) & x_neighbours(ys[j]);
                            if (! shared.empty())
                                y1 = ys[i], y2 = ys[j], xk = shared.first();
                        }
                    expect(xk != -1, "claim0 case 2: pigeonhole pair not found");
                    auto other = x_neighbours(y1) - VertexSet(n, { xk });
                    expect(other.count() == 1, "claim0 case 2: y1 does not have two X-neighbours");
                    Vertex xl = other.first();

                    expect(builder.degree(p) <= 1, "claim0 case 2: x1 is not a leaf");
                    if (builder.has_edge(p, v))
                        builder.remove_leaf_edge(p, v);
                    builder.add_vertex(xk, { y1, y2 });
                    builder.add_vertex(xl, { y1, xk });
                    VertexSet done(n, { xk, xl });
                    for (auto w : x)
                        if (! done.contains(w)) {
                            builder.add_vertex(w, done.members());
                            done.insert(w);
                        }
                    result = builder.build();
                    tracer.close(step, to_top, before, result);
                    return check();
                }

                expect(a2 == 0, "degenerate a2 outside the three cases");
                expect(n >= 8, "claim0 case 3 with n < 8");
                Vertex p = x[0];
                auto step = tracer.open("claim0-case3", g, to_top, { x[1], x[2], x[3] });
                auto stripped = delete_edges(g, incident(g, p));
                auto sub = delete_vertices(stripped, VertexSet(n, { x[1], x[2], x[3] }));
                auto diamond = dirac_diamond(sub.graph);
                expect(diamond.has_value(), "claim0 case 3: no diamond");
                Vertex v1 = sub.to_host[diamond->u], v2 = sub.to_host[diamond->v];
                Vertex w1 = sub.to_host[diamond->triangle[0]], w2 = sub.to_host[diamond->triangle[1]],
                       w3 = sub.to_host[diamond->triangle[2]];

                auto twice = delete_edges(stripped, incident(stripped, v1));
                auto sub2 = delete_vertices(twice, VertexSet(n, { x[1], x[2], x[3] }));
                auto builder = k3_recurse(g, sub2, to_top, tracer, Quad{ v2, w1, w2, w3 });
                auto before = builder.build().edges;
                builder.add_vertex(v1, { w1, w2, w3 });
                builder.add_vertex(p, std::span<const Vertex>{ });
                add_in_order(builder, { x[1], x[2], x[3] }, VertexSet(n, { p }));
                result = builder.build();
                tracer.close(step, to_top, before, result);
                return check();
            }

            // High-degree x_i with no outside vertex seeing it and two others.
            for (int i = 0 ; i < 4 ; ++i) {
                Vertex x1 = x[i];
                if (d(x1) < third + 1)
                    continue;
                bool witness = false;
                outside().for_each([&] (Vertex v) {
                    if (g.adjacent(v, x1) && x_neighbours(v).count() >= 3)
                        witness = true;
                });
                if (witness)
                    continue;

                vector<Vertex> o;
                for (auto w : x)
                    if (w != x1)
                        o.push_back(w);
                VertexSet os(n, o);
                vector<VertexSet> a(4, VertexSet(n));
                (g.all_vertices() - os).for_each([&] (Vertex z) {
                    a[(g.neighbourhood(z) & os).count()].insert(z);
                });
                auto a3_rest = a[3] - VertexSet(n, { x1 });
                expect(! a3_rest.empty(), "degenerate claim: A3 has nothing but x1");

                Vertex x4, v = -1;
                vector<Vertex> x23;
                VertexSet keep = a[3];
                bool a0_empty = a[0].empty();
                if (a0_empty) {
                    auto a12 = a[1] | a[2];
                    expect(! a12.empty(), "degenerate claim: A1 and A2 empty");
                    v = a12.first();
                    x4 = (g.neighbourhood(v) & os).first();
                    keep.insert(v);
                }
                else
                    x4 = o[2];
                for (auto w : o)
                    if (w != x4) {
                        x23.push_back(w);
                        keep.insert(w);
                    }

                EdgeList f;
                (g.neighbourhood(x4) - keep).for_each([&] (Vertex w) { f.emplace_back(x4, w); });
                expect(Count(f.size()) <= d(x4) - a[3].count() - 3 + a[0].count(), "degenerate claim: |F| too large");

                auto step = tracer.open("claim-degenerate", g, to_top, { x1, x23[0], x23[1] });
                auto stripped = delete_edges(g, f);
                auto sub = delete_vertices(stripped, VertexSet(n, { x1, x23[0], x23[1] }));
                auto builder = k3_recurse(g, sub, to_top, tracer);
                auto before = builder.build().edges;

                Vertex z = -1;
                a3_rest.for_each([&] (Vertex c) { if (z == -1 && builder.has_edge(x4, c)) z = c; });
                if (z == -1) {
                    if (v != -1 && builder.has_edge(x4, v)) {
                        expect(builder.degree(x4) == 1, "degenerate claim: x4 not a leaf");
                        builder.remove_leaf_edge(x4, v);
                    }
                    expect(builder.degree(x4) == 0, "degenerate claim: x4 has stray neighbours");
                    z = a3_rest.first();
                    builder.add_vertex(x4, { z });
                }
                builder.add_vertex(x23[0], { x4, z });
                builder.add_vertex(x23[1], { x23[0], x4, z });
                builder.add_vertex(x1, { x23[0], x23[1], x4 });
                result = builder.build();
                tracer.close(step, to_top, before, result);
                return check();
            }

            // Deletable x_i.
            for (int i = 0 ; i < 4 ; ++i) {
                if (d(x[i]) > third)
                    continue;
                vector<Vertex> o;
                for (auto w : x)
                    if (w != x[i])
                        o.push_back(w);
                auto common = common_neighbourhood(g, VertexSet(n, o)) - xs;
                if (common.empty())
                    continue;
                Vertex y = common.first();

                auto step = tracer.open("deletable", g, to_top, { x[i] });
                auto sub = delete_vertices(g, VertexSet(n, { x[i] }));
                auto builder = k3_recurse(g, sub, to_top, tracer, Quad{ o[0], o[1], o[2], y });
                auto before = builder.build().edges;
                builder.add_vertex(x[i], o);
                result = builder.build();
                tracer.close(step, to_top, before, result);
                return check();
            }

            // Clique star.
            if (d(x[0]) + d(x[1]) + d(x[2]) + d(x[3]) >= bound) {
                auto step = tracer.open("clique-star", g, to_top, { });
                result = star_union(g, x);
                tracer.close(step, to_top, { }, result);
                return check();
            }

            expect(common_neighbourhood(g, xs).empty(), "K5 on the anchor survived");

            // Three of X with degree sum above 2n.
            for (int i = 0 ; i < 4 ; ++i) {
                vector<Vertex> o;
                for (auto w : x)
                    if (w != x[i])
                        o.push_back(w);
                if (d(o[0]) + d(o[1]) + d(o[2]) < 2 * Count{ n } + 1)
                    continue;
                Vertex x4 = x[i];
                VertexSet os(n, o);
                expect(d(x4) <= third, "xi-degree claim: x4 degree too large");
                outside().for_each([&] (Vertex v) {
                    expect((g.neighbourhood(v) & os).count() == 2, "xi-degree claim: outside vertex not on exactly two");
                });

                auto step = tracer.open("claim-xi-degree", g, to_top, { x[0], x[1], x[2], x[3] });
                auto sub = delete_vertices(g, xs);
                expect(n - 4 >= 4, "xi-degree claim with n - 4 < 4");
                auto k4 = smallest_k4(sub.graph);
                expect(k4.has_value(), "xi-degree claim: no K4 after deletion");
                Quad ws;
                for (int j = 0 ; j < 4 ; ++j)
                    ws[j] = sub.to_host[k4->x[j]];
                auto builder = k3_recurse(g, sub, to_top, tracer, ws);
                auto before = builder.build().edges;

                int wi = -1, wj = -1;
                for (int p = 0 ; p < 4 && wi == -1 ; ++p)
                    for (int q = p + 1 ; q < 4 && wi == -1 ; ++q)
                        if ((g.neighbourhood(ws[p]) & os) == (g.neighbourhood(ws[q]) & os))
                            wi = p, wj = q;
                expect(wi != -1, "xi-degree claim: pigeonhole pair not found");
                Vertex w3 = -1;
                for (int p = 0 ; p < 4 && w3 == -1 ; ++p)
                    if (p != wi && p != wj)
                        w3 = ws[p];
                auto pq = (g.neighbourhood(ws[wi]) & os).members();
                Vertex nx1 = g.adjacent(pq[0], w3) ? pq[0] : pq[1];
                Vertex nx2 = nx1 == pq[0] ? pq[1] : pq[0];
                expect(g.adjacent(nx1, w3), "xi-degree claim: w3 misses both");
                Vertex nx3 = (os - VertexSet(n, { nx1, nx2 })).first();

                builder.add_vertex(nx1, { ws[wi], ws[wj], w3 });
                builder.add_vertex(nx2, { nx1, ws[wi], ws[wj] });
                builder.add_vertex(nx3, { nx1, nx2 });
                builder.add_vertex(x4, { nx1, nx2, nx3 });
                result = builder.build();
                tracer.close(step, to_top, before, result);
                return check();
            }

            // Main branch.
            Vertex y0 = -1;
            outside().for_each([&] (Vertex v) { if (y0 == -1 && x_neighbours(v).count() >= 3) y0 = v; });
            expect(y0 != -1, "main branch: no y0");
            expect(x_neighbours(y0).count() == 3, "main branch: y0 sees all of X");
            Vertex x1 = (xs - g.neighbourhood(y0)).first();
            expect(d(x1) >= third + 1, "main branch: x1 deletable");

            Vertex z0 = -1;
            outside().for_each([&] (Vertex v) {
                if (z0 == -1 && g.adjacent(v, x1) && x_neighbours(v).count() >= 3)
                    z0 = v;
            });
            expect(z0 != -1, "main branch: no z0");
            expect(z0 != y0, "main branch: y0 = z0");
            Vertex x2 = (xs - g.neighbourhood(z0) - VertexSet(n, { x1 })).first();
            expect(x2 != -1, "main branch: z0 sees all of X");
            auto x34 = (xs - VertexSet(n, { x1, x2 })).members();
            Vertex x3 = x34[0], x4 = x34[1];
            expect(d(x2) >= third + 1, "main branch: x2 deletable");
            expect(d(x3) <= third && d(x4) <= third, "main branch: x3 or x4 degree too large");

            if (d(y0) <= third) {
                auto step = tracer.open("delete-y0", g, to_top, { y0 });
                auto sub = delete_vertices(g, VertexSet(n, { y0 }));
                auto builder = k3_recurse(g, sub, to_top, tracer, x);
                auto before = builder.build().edges;
                builder.add_vertex(y0, { x2, x3, x4 });
                result = builder.build();
                tracer.close(step, to_top, before, result);
                return check();
            }

            auto vs = (g.neighbourhood(x2) & g.neighbourhood(y0)) - VertexSet(n, { x3, x4 });
            expect(! vs.empty(), "main branch: no v");
            Vertex v = vs.first();
            expect(v != x1 && v != z0, "main branch: v is x1 or z0");
            auto ws = g.neighbourhood(x2) & g.neighbourhood(y0) & g.neighbourhood(v);

            if (ws.empty()) {
                auto step = tracer.open("delete-x2-y0-v", g, to_top, { x2, y0, v });
                auto sub = delete_vertices(g, VertexSet(n, { x2, y0, v }));
                auto builder = k3_recurse(g, sub, to_top, tracer, Quad{ x1, x3, x4, z0 });
                auto before = builder.build().edges;
                builder.add_vertex(x2, { x1, x3, x4 });
                builder.add_vertex(y0, { x2, x3, x4 });
                builder.add_vertex(v, { x2, y0 });
                result = builder.build();
                tracer.close(step, to_top, before, result);
                return check();
            }

            auto in_x = ws & VertexSet(n, { x3, x4 });
            if (! in_x.empty()) {
                Vertex w = in_x.first();
                Vertex other = w == x3 ? x4 : x3;
                auto step = tracer.open("delete-x1-x4", g, to_top, { x1, other });
                auto sub = delete_vertices(g, VertexSet(n, { x1, other }));
                auto builder = k3_recurse(g, sub, to_top, tracer, Quad{ x2, y0, v, w });
                auto before = builder.build().edges;
                builder.add_vertex(other, { x2, w, y0 });
                builder.add_vertex(x1, { x2, w, other });
                result = builder.build();
                tracer.close(step, to_top, before, result);
                return check();
            }

            Vertex w = ws.first();
            auto step = tracer.open("delete-x1-x3-x4", g, to_top, { x1, x3, x4 });
            auto sub = delete_vertices(g, VertexSet(n, { x1, x3, x4 }));
            auto builder = k3_recurse(g, sub, to_top, tracer, Quad{ x2, y0, v, w });
            auto before = builder.build().edges;
            builder.add_vertex(x3, { x2, y0 });
            builder.add_vertex(x4, { x2, x3, y0 });
            builder.add_vertex(x1, { x2, x3, x4 });
            result = builder.build();
            tracer.close(step, to_top, before, result);
            return check();
        }

        auto identity(int n) -> vector<Vertex>
        {
            vector<Vertex> result(n);
            for (int i = 0 ; i < n ; ++i)
                result[i] = i;
            return result;
        }

        auto check_anchor(const Graph & g, std::span<const Vertex> anchor, const string & what) -> void
        {
            for (auto v : anchor)
                if (v < 0 || v >= g.n())
                    throw PreconditionError(what + " vertex " + std::to_string(v) + " out of range");
            for (std::size_t i = 0 ; i < anchor.size() ; ++i)
                for (std::size_t j = i + 1 ; j < anchor.size() ; ++j)
                    if (anchor[i] == anchor[j] || ! g.adjacent(anchor[i], anchor[j]))
                        throw PreconditionError(what + " is not a clique");
        }
    }

    auto extract_k1(const Graph & g) -> ExtractionReport
    {
        if (g.m() < 1)
            throw PreconditionError("extract_k1 needs at least one edge");
        Tracer tracer;
        ExtractionReport r;
        r.algorithm = "k1";
        r.n = g.n();
        r.m = g.m();
        r.subgraph = k1_level(g, identity(g.n()), tracer);
        r.achieved = r.subgraph.edge_count();
        r.guarantee = g1(g.m()) - 1;
        r.trace = tracer.steps();
        return r;
    }

    auto extract_k2(const Graph & g, TriangleAnchor anchor) -> ExtractionReport
    {
        if (g.m() < turan_number(2, g.n()) + 1)
            throw PreconditionError("extract_k2 needs m >= t_2(n) + 1 = " + std::to_string(turan_number(2, g.n()) + 1));
        std::array<Vertex, 3> tri{ anchor.x, anchor.y, anchor.z };
        check_anchor(g, tri, "anchor triangle");
        Tracer tracer;
        ExtractionReport r;
        r.algorithm = "k2";
        r.n = g.n();
        r.m = g.m();
        r.subgraph = k2_level(g, anchor, identity(g.n()), tracer);
        r.achieved = r.subgraph.edge_count();
        r.guarantee = g2(g.n(), g.m()).value - 3;
        std::sort(tri.begin(), tri.end());
        r.anchor.assign(tri.begin(), tri.end());
        r.trace = tracer.steps();
        return r;
    }

    auto trim_to_k3_threshold(const Graph & g, CliqueAnchor4 anchor) -> Graph
    {
        check_anchor(g, anchor.x, "anchor K4");
        Count target = turan_number(3, g.n()) + 1;
        if (g.m() < target)
            throw PreconditionError("graph has fewer than t_3(n) + 1 = " + std::to_string(target) + " edges");
        return trim_keeping(g, anchor.x, target);
    }

    auto extract_k3(const Graph & g, CliqueAnchor4 anchor) -> ExtractionReport
    {
        if (g.n() < 5)
            throw PreconditionError("extract_k3 needs n >= 5");
        check_anchor(g, anchor.x, "anchor K4");
        if (g.m() != turan_number(3, g.n()) + 1)
            throw PreconditionError("extract_k3 needs m = t_3(n) + 1 = " + std::to_string(turan_number(3, g.n()) + 1)
                    + ", got " + std::to_string(g.m()));
        Tracer tracer;
        ExtractionReport r;
        r.algorithm = "k3";
        r.n = g.n();
        r.m = g.m();
        r.subgraph = k3_level(g, anchor.x, identity(g.n()), tracer);
        r.achieved = r.subgraph.edge_count();
        r.guarantee = g3(g.n()) - 6;
        auto sorted = anchor.x;
        std::sort(sorted.begin(), sorted.end());
        r.anchor.assign(sorted.begin(), sorted.end());
        r.trace = tracer.steps();
        return r;
    }
}
