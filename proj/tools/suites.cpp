#include "suites.hpp"
#include "worker_pool.hpp"

#include <chordal_forge/bounds.hpp>
#include <chordal_forge/constructions.hpp>
#include <chordal_forge/errors.hpp>
#include <chordal_forge/extract_exact.hpp>
#include <chordal_forge/extract_general.hpp>
#include <chordal_forge/oracle.hpp>
#include <chordal_forge/random_graphs.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

using std::int64_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace chordal_forge::tools
{
    auto SuiteReport::passed() const -> bool
    {
        return std::all_of(checks.begin(), checks.end(), [] (const CheckTally & c) { return c.passed(); });
    }

    namespace
    {
        auto merged(const string & name, const vector<CheckTally> & parts) -> CheckTally
        {
            CheckTally total{ name };
            for (auto & p : parts)
                total.merge(p);
            return total;
        }

        // Runs body(i, tally) for each task and merges the per-task tallies
        // in task order.
        template <typename F_>
        auto tally_tasks(const string & name, int64_t count, int threads, F_ && body) -> CheckTally
        {
            auto parts = parallel_map(count, threads, [&] (int64_t i) {
                CheckTally t{ name };
                try {
                    body(i, t);
                }
                catch (const Error & e) {
                    t.record(false, "task " + to_string(i) + ": " + e.what());
                }
                return t;
            });
            return merged(name, parts);
        }

        auto graph_tag(const Graph & g) -> string
        {
            return "n=" + to_string(g.n()) + " m=" + to_string(g.m());
        }

        auto record_report(CheckTally & t, const Graph & g, const ExtractionReport & r, const string & where) -> void
        {
            auto problem = report_problem(g, r);
            t.record(! problem, where + (problem ? ": " + *problem : ""));
        }

        auto oracle_value(const Construction & c) -> Count
        {
            OracleOptions options;
            options.independent_parts = c.independent_parts;
            return max_chordal_subgraph(c.graph, options).max_edges;
        }

        auto graph_from_mask(int n, uint64_t mask) -> Graph
        {
            EdgeList edges;
            int bit = 0;
            for (Vertex u = 0 ; u < n ; ++u)
                for (Vertex v = u + 1 ; v < n ; ++v, ++bit)
                    if (mask >> bit & 1)
                        edges.emplace_back(u, v);
            return Graph::from_edge_list(n, edges);
        }

        // ---- clique process and forest selection --------------------------

        auto check_clique_process(const Graph & g, int k, CheckTally & t, const string & where) -> void
        {
            Count n = g.n();
            // 2k * surplus over (k-1)n^2/2k, kept integral.
            Count scaled_surplus = 2 * k * g.m() - (k - 1) * n * n;
            CliqueProcessResult result;
            try {
                result = clique_process(g, k);
            }
            catch (const PreconditionError &) {
                t.record(scaled_surplus <= 0, where + " k=" + to_string(k) + ": process stopped early");
                return;
            }
            bool ok = g.is_clique(result.clique) && static_cast<int>(result.clique.size()) == k - 1;
            auto N = g.all_vertices();
            for (auto x : result.clique) {
                if (! N.contains(x))
                    ok = false;
                else {
                    int best = -1;
                    Vertex first_best = -1;
                    N.for_each([&] (Vertex v) {
                        if (g.degree(v) > best) {
                            best = g.degree(v);
                            first_best = v;
                        }
                    });
                    ok = ok && x == first_best;
                }
                N.intersect_with(g.neighbourhood(x));
            }
            ok = ok && N == result.N && result.edges_in_N == g.edges_within(N);
            ok = ok && 2 * k * result.edges_in_N >= scaled_surplus;
            t.record(ok, where + " k=" + to_string(k));
        }

        auto check_forest(const Graph & g, int s, CheckTally & t, const string & where) -> void
        {
            auto f = forest_select(g, s);
            bool ok = f.vertices.count() == s && static_cast<int>(f.order.size()) == s && f.parent.size() == f.order.size();

            // Union-find over the forest edges: acyclic, inside the vertex
            // set, host edges, and the component count adds up.
            vector<Vertex> root(g.n());
            std::iota(root.begin(), root.end(), 0);
            auto find = [&] (Vertex v) {
                while (root[v] != v)
                    v = root[v] = root[root[v]];
                return v;
            };
            for (auto & e : f.edges) {
                ok = ok && g.adjacent(e.u, e.v) && f.vertices.contains(e.u) && f.vertices.contains(e.v);
                auto a = find(e.u), b = find(e.v);
                ok = ok && a != b;
                root[a] = b;
            }
            ok = ok && static_cast<int>(f.edges.size()) == s - f.components;

            // Every forest component lies in its own host component.
            auto host = g.all_vertices();
            int touched = 0;
            VertexSet seen(g.n());
            for (auto v : f.order) {
                if (seen.contains(v))
                    continue;
                ++touched;
                vector<Vertex> stack{ v };
                seen.insert(v);
                while (! stack.empty()) {
                    auto u = stack.back();
                    stack.pop_back();
                    g.neighbourhood(u).for_each([&] (Vertex w) {
                        if (! seen.contains(w)) {
                            seen.insert(w);
                            stack.push_back(w);
                        }
                    });
                }
            }
            ok = ok && touched == f.components;

            Count a = g.m();
            if (s >= 1 && a >= 2 * static_cast<Count>(s) * s)
                ok = ok && a * static_cast<Count>(f.edges.size()) >= a * (s - 1) - static_cast<Count>(s) * g.n();
            t.record(ok, where + " s=" + to_string(s));
        }

        // Dense graphs whose last class is a union of small cliques, which
        // keeps degrees low inside the common neighbourhood.
        auto clustered_graph(int n, int parts, int cluster, double density, Rng & rng) -> Graph
        {
            std::bernoulli_distribution keep(density);
            EdgeList edges;
            for (Vertex u = 0 ; u < n ; ++u)
                for (Vertex v = u + 1 ; v < n ; ++v) {
                    if (u % parts != v % parts)
                        edges.emplace_back(u, v);
                    else if ((u / parts) / cluster == (v / parts) / cluster && keep(rng))
                        edges.emplace_back(u, v);
                }
            return Graph::from_edge_list(n, edges);
        }

        auto k2_witness_check(int nmax, int threads) -> CheckTally
        {
            vector<std::pair<int, Count>> cases;
            for (int n = 4 ; n <= nmax ; ++n)
                for (Count m = turan_number(2, n) + 1 ; m <= turan_number(3, n) ; ++m)
                    cases.emplace_back(n, m);
            return tally_tasks("k2-witness-tight", cases.size(), threads, [&] (int64_t i, CheckTally & t) {
                auto [n, m] = cases[i];
                auto w = g2(n, m);
                auto c = k2_bipartite(n, w.t, w.r);
                auto best = oracle_value(c);
                auto report = extract_k2(c.graph, *smallest_triangle(c.graph));
                string where = "n=" + to_string(n) + " m=" + to_string(m);
                record_report(t, c.graph, report, where);
                t.record(best == w.value - 3 && report.achieved == best, where + " oracle=" + to_string(best)
                        + " achieved=" + to_string(report.achieved));
            });
        }

        auto k1_random_check(int nmax, int64_t count, uint64_t seed, int threads) -> CheckTally
        {
            return tally_tasks("k1-random", count, threads, [&] (int64_t i, CheckTally & t) {
                Rng rng(task_seed(seed, i));
                int n = static_cast<int>(uniform(rng, 2, std::max(2, nmax)));
                auto g = random_graph(n, uniform(rng, 1, binomial2(n)), rng);
                record_report(t, g, extract_k1(g), graph_tag(g));
            });
        }

        auto general_random_check(int64_t count, uint64_t seed, int threads) -> CheckTally
        {
            return tally_tasks("general-random-small-constants", count, threads, [&] (int64_t i, CheckTally & t) {
                Rng rng(task_seed(seed, i));
                int k = static_cast<int>(uniform(rng, 1, 3));
                // Retry until the draw is above the Turán threshold.
                for (int attempt = 0 ; attempt < 100 ; ++attempt) {
                    int n = static_cast<int>(uniform(rng, 5, 64));
                    int kind = static_cast<int>(uniform(rng, 0, 2));
                    Graph g;
                    if (kind == 0)
                        g = random_graph_p(n, 0.3 + 0.7 * std::uniform_real_distribution<double>()(rng), rng);
                    else
                        g = clustered_graph(n, kind == 1 ? k : 1, static_cast<int>(uniform(rng, 3, 7)), 0.9, rng);
                    if (g.m() < turan_number(k, n) + 1)
                        continue;
                    double c = attempt % 2 ? 0.001 + 0.01 * std::uniform_real_distribution<double>()(rng)
                        : 0.05 + 0.5 * std::uniform_real_distribution<double>()(rng);
                    auto report = extract_general(g, GeneralParams{ k, c, 2 * c, 4 * c });
                    record_report(t, g, report, graph_tag(g) + " k=" + to_string(k));
                    return;
                }
            });
        }

        auto fmt(double x) -> string
        {
            std::ostringstream out;
            out.precision(6);
            out << x;
            return out.str();
        }
    }

    auto clique_lemma_checks(int exhaustive_nmax, int64_t fuzz_count, uint64_t seed, int threads) -> vector<CheckTally>
    {
        // Exhaustive part: every labelled graph, split into mask ranges.
        struct Range
        {
            int n;
            uint64_t begin, end;
        };
        vector<Range> ranges;
        const uint64_t chunk = 1 << 14;
        for (int n = 1 ; n <= exhaustive_nmax ; ++n) {
            uint64_t total = uint64_t{ 1 } << binomial2(n);
            for (uint64_t b = 0 ; b < total ; b += chunk)
                ranges.push_back({ n, b, std::min(total, b + chunk) });
        }
        auto exhaustive = parallel_map(ranges.size(), threads, [&] (int64_t i) {
            std::pair<CheckTally, CheckTally> tallies{ CheckTally{ "clique-process-exhaustive" }, CheckTally{ "forest-select-exhaustive" } };
            auto & [cp, fs] = tallies;
            for (uint64_t mask = ranges[i].begin ; mask < ranges[i].end ; ++mask) {
                auto g = graph_from_mask(ranges[i].n, mask);
                string where = "n=" + to_string(g.n()) + " mask=" + to_string(mask);
                for (int k = 1 ; k <= 3 ; ++k)
                    check_clique_process(g, k, cp, where);
                for (int s = 0 ; s <= g.n() ; ++s)
                    check_forest(g, s, fs, where);
            }
            return tallies;
        });
        CheckTally cp_total{ "clique-process-exhaustive" }, fs_total{ "forest-select-exhaustive" };
        for (auto & [cp, fs] : exhaustive) {
            cp_total.merge(cp);
            fs_total.merge(fs);
        }

        auto cp_fuzz = tally_tasks("clique-process-fuzz", fuzz_count, threads, [&] (int64_t i, CheckTally & t) {
            Rng rng(task_seed(seed, 2 * i));
            int n = static_cast<int>(uniform(rng, 2, 60));
            int k = static_cast<int>(uniform(rng, 1, 4));
            Graph g;
            if (i % 2 == 0) {
                // m uniform above (k-1)n^2/2k.
                Count lo = ((k - 1) * static_cast<Count>(n) * n) / (2 * k) + 1;
                g = random_graph(n, uniform(rng, std::min(lo, binomial2(n)), binomial2(n)), rng);
            }
            else
                g = clustered_graph(n, std::max(1, k - 1), static_cast<int>(uniform(rng, 2, 8)), 0.8, rng);
            check_clique_process(g, k, t, graph_tag(g));
        });

        auto fs_fuzz = tally_tasks("forest-select-fuzz", fuzz_count, threads, [&] (int64_t i, CheckTally & t) {
            Rng rng(task_seed(seed, 2 * i + 1));
            int n = static_cast<int>(uniform(rng, 4, 60));
            Graph g = i % 2 == 0
                ? random_graph_p(n, 0.05 + 0.95 * std::uniform_real_distribution<double>()(rng), rng)
                : clustered_graph(n, 1, static_cast<int>(uniform(rng, 2, 10)), 0.7, rng);
            // A size inside the hypothesis a >= 2s^2 when one exists.
            int s_max = static_cast<int>(std::sqrt(g.m() / 2.0));
            while (2 * static_cast<Count>(s_max + 1) * (s_max + 1) <= g.m())
                ++s_max;
            while (s_max > 0 && 2 * static_cast<Count>(s_max) * s_max > g.m())
                --s_max;
            int s = s_max >= 1 ? static_cast<int>(uniform(rng, 1, s_max)) : static_cast<int>(uniform(rng, 0, n));
            check_forest(g, s, t, graph_tag(g));
        });

        return { cp_total, cp_fuzz, fs_total, fs_fuzz };
    }

    auto k1_exact_check(int nmax, int threads) -> CheckTally
    {
        vector<std::pair<int, Count>> cases;
        for (int n = 1 ; n <= nmax ; ++n)
            for (Count m = 1 ; m <= turan_number(2, n) ; ++m)
                cases.emplace_back(n, m);
        return tally_tasks("k1-f-exact", cases.size(), threads, [&] (int64_t i, CheckTally & t) {
            auto [n, m] = cases[i];
            auto f = f_exact(n, m).f_exact;
            t.record(f == g1(m) - 1, "n=" + to_string(n) + " m=" + to_string(m) + " f=" + to_string(f));
        });
    }

    auto k2_exact_check(int nmax, int threads) -> CheckTally
    {
        vector<std::pair<int, Count>> cases;
        for (int n = 1 ; n <= nmax ; ++n)
            for (Count m = turan_number(2, n) + 1 ; m <= turan_number(3, n) ; ++m)
                cases.emplace_back(n, m);
        return tally_tasks("k2-f-exact", cases.size(), threads, [&] (int64_t i, CheckTally & t) {
            auto [n, m] = cases[i];
            auto f = f_exact(n, m).f_exact;
            t.record(f == g2(n, m).value - 3, "n=" + to_string(n) + " m=" + to_string(m) + " f=" + to_string(f));
        });
    }

    auto k3_exact_check(const vector<int> & ns, int threads) -> CheckTally
    {
        return tally_tasks("k3-f-exact", ns.size(), threads, [&] (int64_t i, CheckTally & t) {
            int n = ns[i];
            auto f = f_exact(n, turan_number(3, n) + 1).f_exact;
            t.record(f == g3(n) - 6, "n=" + to_string(n) + " f=" + to_string(f));
        });
    }

    auto k2_random_check(int nmin, int nmax, int64_t count, uint64_t seed, int threads) -> CheckTally
    {
        return tally_tasks("k2-random", count, threads, [&] (int64_t i, CheckTally & t) {
            Rng rng(task_seed(seed, i));
            int n = static_cast<int>(uniform(rng, nmin, nmax));
            auto m = uniform(rng, turan_number(2, n) + 1, turan_number(3, n));
            auto g = random_graph(n, m, rng);
            auto triangles = all_cliques(g, 3);
            auto & tri = triangles[uniform(rng, 0, static_cast<Count>(triangles.size()) - 1)];
            TriangleAnchor anchor{ tri[0], tri[1], tri[2] };
            auto report = extract_k2(g, anchor);
            string where = graph_tag(g);
            record_report(t, g, report, where);
            t.record(report.guarantee == g2(n, m).value - 3, where + " guarantee");
            if (i % 10 == 0)
                t.record(extract_k2(g, anchor) == report, where + " determinism");
        });
    }

    auto k3_turan_check(int nmin, int nmax, int threads) -> CheckTally
    {
        return tally_tasks("k3-turan-plus-edge", nmax - nmin + 1, threads, [&] (int64_t i, CheckTally & t) {
            int n = nmin + static_cast<int>(i);
            auto c = turan_plus_edge(3, n);
            auto anchor = smallest_k4(c.graph);
            string where = "n=" + to_string(n);
            bool has_edge = anchor && anchor->x[0] == 0 && anchor->x[1] == 1;
            t.record(has_edge, where + " anchor through the added edge");
            if (! has_edge)
                return;
            auto report = extract_k3(c.graph, *anchor);
            record_report(t, c.graph, report, where);
            t.record(report.guarantee == g3(n) - 6, where + " guarantee");
        });
    }

    auto k3_random_check(int nmin, int nmax, int64_t count, uint64_t seed, int threads) -> CheckTally
    {
        return tally_tasks("k3-random", count, threads, [&] (int64_t i, CheckTally & t) {
            Rng rng(task_seed(seed, i));
            Graph g;
            CliqueAnchor4 anchor{};
            if (i % 2 == 0) {
                std::optional<PlantedK4> planted;
                while (! planted)
                    planted = planted_k4(static_cast<int>(uniform(rng, nmin, nmax)), rng);
                g = planted->graph;
                anchor.x = planted->anchor;
            }
            else {
                int n = static_cast<int>(uniform(rng, nmin, nmax));
                Count target = turan_number(3, n) + 1;
                auto dense = random_graph(n, uniform(rng, target, std::min(binomial2(n), target + n)), rng);
                auto cliques = all_cliques(dense, 4);
                auto & q = cliques[uniform(rng, 0, static_cast<Count>(cliques.size()) - 1)];
                std::copy(q.begin(), q.end(), anchor.x.begin());
                g = random_trim(dense, q, target, rng);
            }
            auto report = extract_k3(g, anchor);
            string where = graph_tag(g);
            record_report(t, g, report, where);
            if (i % 10 == 1)
                t.record(extract_k3(g, anchor) == report, where + " determinism");
        });
    }

    auto construction_tightness_checks(int nmax, int threads) -> vector<CheckTally>
    {
        vector<CheckTally> out;

        vector<std::pair<int, int>> kn;
        for (int n = 1 ; n <= nmax ; ++n)
            for (int k = 1 ; k <= n + 1 ; ++k)
                kn.emplace_back(k, n);
        out.push_back(tally_tasks("turan-tight", kn.size(), threads, [&] (int64_t i, CheckTally & t) {
            auto [k, n] = kn[i];
            Count kk = std::min(k, n);
            auto best = oracle_value(turan_graph(k, n));
            t.record(best == (kk - 1) * n - binomial2(kk), "k=" + to_string(k) + " n=" + to_string(n));
        }));

        vector<std::pair<int, int>> kn_plus;
        for (auto [k, n] : kn)
            if (k < n)
                kn_plus.emplace_back(k, n);
        out.push_back(tally_tasks("turan-plus-edge-tight", kn_plus.size(), threads, [&] (int64_t i, CheckTally & t) {
            auto [k, n] = kn_plus[i];
            auto best = oracle_value(turan_plus_edge(k, n));
            t.record(best == turan_plus_edge_value(k, n), "k=" + to_string(k) + " n=" + to_string(n)
                    + " oracle=" + to_string(best));
        }));

        vector<std::pair<int, Count>> nm;
        for (int n = 1 ; n <= nmax ; ++n)
            for (Count m = 1 ; m <= turan_number(2, n) ; ++m)
                nm.emplace_back(n, m);
        out.push_back(tally_tasks("k1-isolated-tight", nm.size(), threads, [&] (int64_t i, CheckTally & t) {
            auto [n, m] = nm[i];
            auto c = k1_isolated(n, m);
            auto best = oracle_value(c);
            auto report = extract_k1(c.graph);
            t.record(best == g1(m) - 1 && report.achieved == best, "n=" + to_string(n) + " m=" + to_string(m));
        }));

        // r = 0 or 1 leaves K_{t,n-t}, a forest-only host, where the bound
        // is attained only for t = n - 1.
        vector<std::array<int, 3>> ntr;
        for (int n = 2 ; n <= nmax ; ++n)
            for (int t = 1 ; t < n ; ++t)
                for (int r = 1 ; r <= t ; ++r)
                    if (r >= 2 || t == n - 1)
                        ntr.push_back({ n, t, r });
        out.push_back(tally_tasks("k2-bipartite-tight", ntr.size(), threads, [&] (int64_t i, CheckTally & t) {
            auto [n, tt, r] = ntr[i];
            auto c = k2_bipartite(n, tt, r);
            auto best = oracle_value(c);
            t.record(best == k2_chordal_upper_bound(c), "n=" + to_string(n) + " t=" + to_string(tt) + " r=" + to_string(r)
                    + " oracle=" + to_string(best));
        }));

        out.push_back(k2_witness_check(nmax, threads));

        // Instances with r >= 1 and every Y_i non-empty; otherwise the
        // construction collapses and the count is not claimed to be exact.
        vector<std::array<Count, 3>> kna;
        for (int k = 1 ; k <= 4 ; ++k)
            for (int n = 1 ; n <= nmax ; ++n)
                for (Count a = 1 ; a <= turan_number(k + 1, n) - turan_number(k, n) ; ++a)
                    kna.push_back({ k, n, a });
        struct Fig1Case
        {
            bool built = false;
            bool eligible = false;
            Count best = 0;
            Count bound = 0;
        };
        auto fig1 = parallel_map(kna.size(), threads, [&] (int64_t i) {
            auto [k, n, a] = kna[i];
            Fig1Case out;
            Construction c;
            try {
                c = general_fig1(static_cast<int>(k), static_cast<int>(n), a);
            }
            catch (const PreconditionError &) {
                return out;
            }
            out.built = true;
            out.best = oracle_value(c);
            out.bound = fig1_chordal_upper_bound(c);
            out.eligible = c.r >= 1;
            for (int j = 1 ; j < k ; ++j)
                if (c.part("Y" + to_string(j)).size() == 0)
                    out.eligible = false;
            return out;
        });
        CheckTally tight{ "fig1-tight" };
        for (std::size_t i = 0 ; i < kna.size() ; ++i) {
            auto [k, n, a] = kna[i];
            auto & f = fig1[i];
            if (! f.built)
                continue;
            string where = "k=" + to_string(k) + " n=" + to_string(n) + " a=" + to_string(a)
                + " oracle=" + to_string(f.best) + " bound=" + to_string(f.bound);
            if (f.eligible)
                tight.record(f.best == f.bound, where);
        }
        out.push_back(tight);
        return out;
    }

    auto general_fig1_sweep(const vector<int> & ks, const vector<int> & ns, const vector<double> & fractions, int threads) -> GeneralSweep
    {
        struct Case
        {
            int k, n;
            double fraction;
        };
        struct Row
        {
            Case c;
            Count a = 0, m = 0, achieved = 0, upper = 0;
            double target0 = 0, fitted = 0;
            bool fallback = false;
            std::optional<string> problem;
        };
        vector<Case> cases;
        for (int k : ks)
            for (double f : fractions)
                for (int n : ns)
                    cases.push_back({ k, n, f });

        auto rows = parallel_map(cases.size(), threads, [&] (int64_t i) {
            Row row;
            row.c = cases[i];
            auto [k, n, f] = cases[i];
            Count room = turan_number(k + 1, n) - turan_number(k, n);
            Count a = std::max<Count>(1, static_cast<Count>(std::floor(f * static_cast<double>(room))));
            auto c = general_fig1(k, n, a);
            auto report = extract_general(c.graph, default_general_params(k));
            row.a = report.general->a;
            row.m = c.graph.m();
            row.achieved = report.achieved;
            row.upper = fig1_chordal_upper_bound(c);
            row.target0 = report.general->target_without_C;
            row.fitted = report.general->fitted_C;
            row.fallback = report.general->used_fallback;
            row.problem = report_problem(c.graph, report);
            return row;
        });

        GeneralSweep sweep;
        CheckTally certified{ "general-fig1-certificate" }, below{ "general-fig1-below-upper-bound" };
        CheckTally bounded{ "general-fitted-C-bounded" }, monotone{ "general-fitted-C-non-increasing" };
        sweep.table.header = { "k", "n", "slice", "a", "a_over_n2", "m", "achieved", "upper_bound", "target_without_C", "fitted_C", "fallback" };
        std::map<std::pair<int, double>, vector<const Row *>> slices;
        for (auto & row : rows) {
            auto [k, n, f] = row.c;
            string where = "k=" + to_string(k) + " n=" + to_string(n) + " a=" + to_string(row.a);
            certified.record(! row.problem, where + (row.problem ? ": " + *row.problem : ""));
            below.record(row.achieved <= row.upper, where);
            bounded.record(row.fitted <= default_general_params(k).C, where);
            slices[{ k, f }].push_back(&row);
            sweep.table.rows.push_back({ to_string(k), to_string(n), fmt(f), to_string(row.a),
                fmt(static_cast<double>(row.a) / (static_cast<double>(n) * n)), to_string(row.m), to_string(row.achieved),
                to_string(row.upper), fmt(row.target0), fmt(row.fitted), row.fallback ? "1" : "0" });
        }
        for (auto & [key, members] : slices) {
            std::sort(members.begin(), members.end(), [] (const Row * x, const Row * y) { return x->c.n < y->c.n; });
            for (std::size_t i = 1 ; i < members.size() ; ++i)
                monotone.record(members[i]->fitted <= members[i - 1]->fitted + 1e-9,
                        "k=" + to_string(key.first) + " slice=" + fmt(key.second) + " n=" + to_string(members[i]->c.n));
        }
        sweep.checks = { certified, below, bounded, monotone };
        return sweep;
    }

    auto suite_names() -> vector<string>
    {
        return { "lemmas", "k1", "k2", "k3", "general", "constructions" };
    }

    auto run_suite(const string & name, const SuiteOptions & o) -> SuiteReport
    {
        SuiteReport report;
        report.name = name;
        auto count = [&] (int64_t fallback) { return o.count.value_or(fallback); };
        auto nmax = [&] (int fallback) { return o.nmax.value_or(fallback); };
        auto add = [&] (vector<CheckTally> checks) {
            report.checks.insert(report.checks.end(), checks.begin(), checks.end());
        };

        if (name == "lemmas")
            add(lemma_checks(nmax(60)));
        else if (name == "k1") {
            int n = nmax(40);
            add({ k1_random_check(n, count(1000), o.seed, o.threads), k1_exact_check(std::min(n, 6), o.threads) });
        }
        else if (name == "k2") {
            int n = nmax(40);
            if (n < 5)
                throw PreconditionError("the k2 suite needs nmax >= 5");
            add({ k2_random_check(5, n, count(1000), o.seed, o.threads), k2_exact_check(std::min(n, 6), o.threads),
                k2_witness_check(std::min(n, 7), o.threads) });
        }
        else if (name == "k3") {
            int n = nmax(30);
            if (n < 5)
                throw PreconditionError("the k3 suite needs nmax >= 5");
            vector<int> exact;
            for (int i = 5 ; i <= std::min(n, 7) ; ++i)
                exact.push_back(i);
            add({ k3_turan_check(5, n, o.threads), k3_random_check(5, n, count(1000), o.seed, o.threads),
                k3_exact_check(exact, o.threads) });
        }
        else if (name == "general") {
            vector<int> ns;
            for (int n : { 60, 120, 240, 480 })
                if (n <= nmax(480))
                    ns.push_back(n);
            auto sweep = general_fig1_sweep({ 2, 3 }, ns, { 0.1, 0.3, 0.5, 0.7, 0.9 }, o.threads);
            add(sweep.checks);
            report.table = sweep.table;
            add({ general_random_check(count(1000), o.seed, o.threads) });
            add(clique_lemma_checks(std::min(nmax(480), 7), count(1000), o.seed, o.threads));
        }
        else if (name == "constructions") {
            int n = nmax(200);
            vector<std::pair<int, int>> kn;
            for (int j = 1 ; j <= n ; ++j)
                for (int k = 1 ; k <= j ; ++k)
                    kn.emplace_back(k, j);
            report.checks.push_back(tally_tasks("turan-edge-count", kn.size(), o.threads, [&] (int64_t i, CheckTally & t) {
                auto [k, j] = kn[i];
                t.record(turan_graph(k, j).graph.m() == turan_number(k, j), "k=" + to_string(k) + " n=" + to_string(j));
            }));
            add(construction_tightness_checks(std::min(n, 7), o.threads));
        }
        else
            throw PreconditionError("unknown suite '" + name + "'");

        if (report.table.header.empty())
            report.table = checks_table(report.checks);
        return report;
    }

    auto checks_table(const vector<CheckTally> & checks) -> SuiteTable
    {
        SuiteTable table;
        table.header = { "check", "checked", "failed", "first_failure" };
        for (auto & c : checks)
            table.rows.push_back({ c.name, to_string(c.checked), to_string(c.failed), c.first_failure });
        return table;
    }

    auto write_csv(std::ostream & out, const SuiteTable & table) -> void
    {
        auto cell = [] (const string & s) {
            if (s.find_first_of(",\"\n") == string::npos)
                return s;
            string quoted = "\"";
            for (char ch : s) {
                if (ch == '"')
                    quoted += '"';
                quoted += ch;
            }
            return quoted + "\"";
        };
        auto line = [&] (const vector<string> & row) {
            for (std::size_t i = 0 ; i < row.size() ; ++i)
                out << (i ? "," : "") << cell(row[i]);
            out << "\n";
        };
        line(table.header);
        for (auto & row : table.rows)
            line(row);
    }
}
