#include <chordal_forge/constructions.hpp>
#include <chordal_forge/bounds.hpp>
#include <chordal_forge/errors.hpp>

#include <cmath>

using std::string;
using std::vector;

namespace chordal_forge
{
    auto variant_name(Variant v) -> string
    {
        switch (v) {
            case Variant::turan: return "turan";
            case Variant::turan_plus_edge: return "turan-plus-edge";
            case Variant::k1_isolated: return "k1-isolated";
            case Variant::k2_bipartite: return "k2-bipartite";
            case Variant::general_fig1: return "general-fig1";
        }
        return "?";
    }

    auto parse_variant(const string & name) -> Variant
    {
        for (auto v : { Variant::turan, Variant::turan_plus_edge, Variant::k1_isolated, Variant::k2_bipartite, Variant::general_fig1 })
            if (variant_name(v) == name)
                return v;
        throw PreconditionError("unknown construction variant '" + name + "'");
    }

    auto Construction::part(const string & name) const -> const Part &
    {
        for (auto & p : parts)
            if (p.name == name)
                return p;
        throw PreconditionError("construction has no part named '" + name + "'");
    }

    auto Construction::clusters() const -> vector<DotCluster>
    {
        vector<DotCluster> result;
        for (auto & p : parts) {
            DotCluster c{ p.name, { } };
            for (Vertex v = p.begin ; v < p.end ; ++v)
                c.members.push_back(v);
            result.push_back(std::move(c));
        }
        return result;
    }

    namespace
    {
        auto range(Vertex begin, Vertex end) -> vector<Vertex>
        {
            vector<Vertex> result;
            for (Vertex v = begin ; v < end ; ++v)
                result.push_back(v);
            return result;
        }

        auto add_independent(Construction & c, Vertex begin, Vertex end) -> void
        {
            if (begin < end)
                c.independent_parts.push_back(range(begin, end));
        }

        // Complete multipartite edges between distinct classes given as
        // contiguous ranges.
        auto multipartite_edges(const vector<Part> & classes) -> EdgeList
        {
            EdgeList edges;
            for (std::size_t i = 0 ; i < classes.size() ; ++i)
                for (std::size_t j = i + 1 ; j < classes.size() ; ++j)
                    for (Vertex u = classes[i].begin ; u < classes[i].end ; ++u)
                        for (Vertex v = classes[j].begin ; v < classes[j].end ; ++v)
                            edges.emplace_back(u, v);
            return edges;
        }

        auto complete_bipartite(EdgeList & edges, const Part & a, const Part & b) -> void
        {
            for (Vertex u = a.begin ; u < a.end ; ++u)
                for (Vertex v = b.begin ; v < b.end ; ++v)
                    edges.emplace_back(u, v);
        }

        auto turan_classes(int k, int n) -> vector<Part>
        {
            vector<Part> classes;
            Vertex at = 0;
            int index = 1;
            for (auto s : turan_part_sizes(k, n)) {
                classes.push_back(Part{ "V" + std::to_string(index++), at, at + s });
                at += s;
            }
            return classes;
        }
    }

    auto turan_graph(int k, int n) -> Construction
    {
        if (k < 1)
            throw PreconditionError("Turan graph needs k >= 1");
        Construction c;
        c.variant = Variant::turan;
        c.k = k;
        c.parts = turan_classes(k, n);
        c.graph = Graph::from_edge_list(n, multipartite_edges(c.parts));
        for (auto & p : c.parts)
            add_independent(c, p.begin, p.end);
        return c;
    }

    auto turan_plus_edge(int k, int n) -> Construction
    {
        if (k < 1)
            throw PreconditionError("Turan graph needs k >= 1");
        auto classes = turan_classes(k, n);
        if (classes.front().size() < 2)
            throw PreconditionError("largest class of T_" + std::to_string(k) + "(" + std::to_string(n) + ") has no room for an edge");
        Construction c;
        c.variant = Variant::turan_plus_edge;
        c.k = k;
        c.parts = classes;
        auto edges = multipartite_edges(classes);
        edges.emplace_back(0, 1);
        c.graph = Graph::from_edge_list(n, edges);
        add_independent(c, 0, 1);
        add_independent(c, 1, classes.front().end);
        for (std::size_t i = 1 ; i < classes.size() ; ++i)
            add_independent(c, classes[i].begin, classes[i].end);
        return c;
    }

    auto k1_isolated(int n, Count m) -> Construction
    {
        if (m < 0)
            throw PreconditionError("negative edge count");
        if (m > turan_number(2, n))
            throw PreconditionError("k1_isolated needs m <= t_2(n) = " + std::to_string(turan_number(2, n)));
        int r = g1(m);
        Construction c;
        c.variant = Variant::k1_isolated;
        c.k = 1;
        c.r = r;
        Part a{ "A", 0, (r + 1) / 2 }, b{ "B", (r + 1) / 2, r }, rest{ "isolated", r, n };
        c.parts = { a, b, rest };
        EdgeList edges;
        complete_bipartite(edges, a, b);
        c.graph = Graph::from_edge_list(n, edges);
        add_independent(c, a.begin, a.end);
        add_independent(c, b.begin, b.end);
        add_independent(c, rest.begin, rest.end);
        return c;
    }

    auto k2_bipartite(int n, int t, int r) -> Construction
    {
        if (t < 0 || r < 0 || t > n)
            throw PreconditionError("k2_bipartite needs 0 <= t <= n and r >= 0");
        if (r > t)
            throw PreconditionError("k2_bipartite needs r <= t");
        Construction c;
        c.variant = Variant::k2_bipartite;
        c.k = 2;
        c.t = t;
        c.r = r;
        Part x{ "X", 0, t }, y{ "Y", t, n }, a{ "A", 0, (r + 1) / 2 }, b{ "B", (r + 1) / 2, r };
        c.parts = { x, y, a, b };
        EdgeList edges;
        complete_bipartite(edges, x, y);
        complete_bipartite(edges, a, b);
        c.graph = Graph::from_edge_list(n, edges);
        add_independent(c, a.begin, a.end);
        add_independent(c, b.begin, b.end);
        add_independent(c, r, t);
        add_independent(c, y.begin, y.end);
        return c;
    }

    auto general_fig1(int k, int n, Count a) -> Construction
    {
        if (k < 1)
            throw PreconditionError("general_fig1 needs k >= 1");
        if (n < 1)
            throw PreconditionError("general_fig1 needs n >= 1");
        Count max_a = turan_number(k + 1, n) - turan_number(k, n);
        if (a < 0 || a > max_a)
            throw PreconditionError("general_fig1 needs 0 <= a <= t_{k+1}(n) - t_k(n) = " + std::to_string(max_a));

        int r = static_cast<int>(std::lround(std::sqrt(2.0 * k * static_cast<double>(a) / (k + 1.0))));
        int x_size = (n + (k - 1) * r + k - 1) / k;
        if (x_size > n)
            x_size = n;
        if (2 * r > x_size)
            throw PreconditionError("general_fig1: 2r = " + std::to_string(2 * r) + " does not fit in |X| = " + std::to_string(x_size));

        Construction c;
        c.variant = Variant::general_fig1;
        c.k = k;
        c.r = r;
        c.t = x_size;
        c.a = a;

        vector<Part> classes{ Part{ "X", 0, x_size } };
        int rest = n - x_size;
        Vertex at = x_size;
        for (int i = 0 ; i < k - 1 ; ++i) {
            int s = rest / (k - 1) + (i < rest % (k - 1) ? 1 : 0);
            classes.push_back(Part{ "Y" + std::to_string(i + 1), at, at + s });
            at += s;
        }

        Part pa{ "A", 0, r }, pb{ "B", r, 2 * r };
        auto edges = multipartite_edges(classes);
        complete_bipartite(edges, pa, pb);
        c.graph = Graph::from_edge_list(n, edges);

        c.parts = classes;
        c.parts.push_back(pa);
        c.parts.push_back(pb);
        add_independent(c, pa.begin, pa.end);
        add_independent(c, pb.begin, pb.end);
        add_independent(c, 2 * r, x_size);
        for (std::size_t i = 1 ; i < classes.size() ; ++i)
            add_independent(c, classes[i].begin, classes[i].end);
        return c;
    }

    auto fig1_chordal_upper_bound(const Construction & c) -> Count
    {
        if (c.variant != Variant::general_fig1)
            throw PreconditionError("not a general_fig1 construction");
        return static_cast<Count>(c.k) * c.graph.n() - c.t + 2 * c.r - binomial2(c.k + 1);
    }

    auto k2_chordal_upper_bound(const Construction & c) -> Count
    {
        if (c.variant != Variant::k2_bipartite)
            throw PreconditionError("not a k2_bipartite construction");
        return 2 * static_cast<Count>(c.graph.n()) - c.t + c.r - 3;
    }
}
