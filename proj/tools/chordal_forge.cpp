#include "suites.hpp"
#include "worker_pool.hpp"

#include <chordal_forge/bounds.hpp>
#include <chordal_forge/constructions.hpp>
#include <chordal_forge/errors.hpp>
#include <chordal_forge/extract_exact.hpp>
#include <chordal_forge/extract_general.hpp>
#include <chordal_forge/json_io.hpp>
#include <chordal_forge/oracle.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace chordal_forge;
using std::string;
using std::vector;

namespace
{
    // Exit status 1 means a guarantee was broken; 2 means the request could
    // not be carried out.
    constexpr int exit_violation = 1;
    constexpr int exit_usage = 2;

    class Violation : public Error
    {
        public:
            using Error::Error;
    };

    struct ConstructArgs
    {
        string variant, out = "-", dot;
        int k = 0, n = 0, t = -1, r = -1;
        Count m = -1, a = -1;
    };

    struct BoundsArgs
    {
        int n = 0, k = 0;
        Count m = -1;
        double C = 0;
    };

    struct ExtractArgs
    {
        string alg, graph, anchor, json_report;
        int k = 2;
        std::optional<double> c, c1, C;
    };

    struct CheckArgs
    {
        string graph, report;
    };

    struct OracleArgs
    {
        string graph, out;
        int n = 0, threads = 0, edge_cap = 24;
        Count m = -1;
        bool dedup = false;
    };

    struct VerifyArgs
    {
        string suite, csv;
        std::optional<int> nmax;
        std::optional<std::int64_t> count;
        std::uint64_t seed = tools::default_seed;
        int threads = 0;
    };

    auto write_output(const string & path, const string & text) -> void
    {
        if (path == "-")
            std::cout << text;
        else
            write_text_file(path, text);
    }

    auto parse_anchor(const string & text) -> vector<Vertex>
    {
        vector<Vertex> out;
        std::stringstream in(text);
        string item;
        while (std::getline(in, item, ',')) {
            try {
                std::size_t used = 0;
                out.push_back(std::stoi(item, &used));
                if (used != item.size())
                    throw std::invalid_argument(item);
            }
            catch (const std::logic_error &) {
                throw PreconditionError("bad anchor vertex '" + item + "'");
            }
        }
        return out;
    }

    auto run_construct(const ConstructArgs & a) -> int
    {
        auto need = [&] (bool present, const char * flag) {
            if (! present)
                throw PreconditionError(string("--variant ") + a.variant + " needs " + flag);
        };
        Construction c;
        switch (parse_variant(a.variant)) {
            case Variant::turan:
                need(a.k > 0, "--k");
                c = turan_graph(a.k, a.n);
                break;
            case Variant::turan_plus_edge:
                need(a.k > 0, "--k");
                c = turan_plus_edge(a.k, a.n);
                break;
            case Variant::k1_isolated:
                need(a.m >= 0, "--m");
                c = k1_isolated(a.n, a.m);
                break;
            case Variant::k2_bipartite:
                need(a.t >= 0 && a.r >= 0, "--t and --r");
                c = k2_bipartite(a.n, a.t, a.r);
                break;
            case Variant::general_fig1:
                need(a.k > 0 && a.a >= 0, "--k and --a");
                c = general_fig1(a.k, a.n, a.a);
                break;
        }
        std::ostringstream text;
        write_edge_list(text, c.graph);
        write_output(a.out, text.str());
        if (! a.dot.empty()) {
            auto clusters = c.clusters();
            write_text_file(a.dot, to_dot(c.graph, clusters));
        }
        std::cerr << variant_name(c.variant) << ": n=" << c.graph.n() << " m=" << c.graph.m() << "\n";
        return 0;
    }

    auto run_bounds(const BoundsArgs & a) -> int
    {
        if (a.n < 1)
            throw PreconditionError("--n must be at least 1");
        Count lo = a.m >= 0 ? a.m : 1, hi = a.m >= 0 ? a.m : binomial2(a.n);
        std::cout << "n,m,g1,g2,t,r,g3";
        if (a.k > 0)
            std::cout << ",general_target" << (a.k >= 2 ? ",conjecture,conjecture_t,conjecture_r" : "");
        std::cout << "\n";
        for (Count m = lo ; m <= hi ; ++m) {
            std::cout << a.n << "," << m << "," << g1(m);
            if (m >= turan_number(2, a.n) + 1) {
                auto w = g2(a.n, m);
                std::cout << "," << w.value << "," << w.t << "," << w.r;
            }
            else
                std::cout << ",,,";
            std::cout << "," << g3(a.n);
            if (a.k > 0) {
                Count surplus = m - turan_number(a.k, a.n);
                std::cout << ",";
                if (surplus >= 1)
                    std::cout << general_target({ a.k, a.n, static_cast<double>(surplus), a.C });
                if (a.k >= 2) {
                    if (surplus >= 1) {
                        auto w = conjecture_bound(a.k, a.n, m);
                        std::cout << "," << w.value << "," << w.t << "," << w.r;
                    }
                    else
                        std::cout << ",,,";
                }
            }
            std::cout << "\n";
        }
        return 0;
    }

    auto run_extract(const ExtractArgs & a) -> int
    {
        auto g = read_edge_list_file(a.graph);
        auto anchor = parse_anchor(a.anchor);
        auto start = std::chrono::steady_clock::now();
        ExtractionReport report;

        if (a.alg == "k1") {
            if (! anchor.empty())
                throw PreconditionError("--anchor is not used by k1");
            report = extract_k1(g);
        }
        else if (a.alg == "k2") {
            TriangleAnchor t{};
            if (anchor.empty()) {
                auto found = smallest_triangle(g);
                if (! found)
                    throw PreconditionError("graph has no triangle");
                t = *found;
            }
            else if (anchor.size() == 3)
                t = TriangleAnchor{ anchor[0], anchor[1], anchor[2] };
            else
                throw PreconditionError("k2 needs a three-vertex --anchor");
            report = extract_k2(g, t);
        }
        else if (a.alg == "k3") {
            CliqueAnchor4 q{};
            if (anchor.empty()) {
                auto found = smallest_k4(g);
                if (! found)
                    throw PreconditionError("graph has no 4-clique");
                q = *found;
            }
            else if (anchor.size() == 4)
                std::copy(anchor.begin(), anchor.end(), q.x.begin());
            else
                throw PreconditionError("k3 needs a four-vertex --anchor");
            auto trimmed = trim_to_k3_threshold(g, q);
            report = extract_k3(trimmed, q);
            if (trimmed.m() != g.m()) {
                // The subgraph is also one of g; state the report against g
                // and record the trimmed edges as a first step.
                auto kept = trimmed.edges();
                TraceStep trim;
                trim.label = "trim-to-threshold";
                trim.n = g.n();
                trim.m = g.m();
                for (auto & e : g.edges())
                    if (! std::binary_search(kept.begin(), kept.end(), e))
                        trim.removed.push_back(e);
                report.m = g.m();
                report.trace.insert(report.trace.begin(), trim);
            }
        }
        else if (a.alg == "general") {
            auto p = default_general_params(a.k);
            p.c = a.c.value_or(p.c);
            p.c1 = a.c1.value_or(p.c1);
            p.C = a.C.value_or(p.C);
            if (! anchor.empty())
                throw PreconditionError("--anchor is not used by general");
            report = extract_general(g, p);
        }
        else
            throw PreconditionError("unknown --alg '" + a.alg + "'");

        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (! a.json_report.empty())
            write_text_file(a.json_report, report_to_json(report, elapsed));

        std::cout << "algorithm " << report.algorithm << ": n=" << report.n << " m=" << report.m
            << " achieved=" << report.achieved << " guarantee=" << report.guarantee
            << " steps=" << report.trace.size() << "\n";
        if (report.general)
            std::cout << "fitted C=" << report.general->fitted_C
                << (report.general->used_fallback ? " (fallback used)" : "") << "\n";
        if (auto problem = report_problem(g, report))
            throw Violation(*problem);
        return 0;
    }

    auto run_check(const CheckArgs & a) -> int
    {
        auto g = read_edge_list_file(a.graph);
        auto report = report_from_json(read_text_file(a.report));
        if (auto problem = report_problem(g, report))
            throw Violation(*problem);
        std::cout << "ok: " << report.algorithm << " report, " << report.achieved << " edges, guarantee "
            << report.guarantee << "\n";
        return 0;
    }

    auto run_max_chordal(const OracleArgs & a) -> int
    {
        auto g = read_edge_list_file(a.graph);
        OracleOptions options;
        options.edge_cap = a.edge_cap;
        auto result = max_chordal_subgraph(g, options);
        std::cout << "max chordal subgraph: " << result.max_edges << " edges\n";
        for (auto & e : result.witness.edges)
            std::cout << e.u << " " << e.v << "\n";
        return 0;
    }

    auto run_f_table(const OracleArgs & a) -> int
    {
        if (a.n < 1 || a.n > f_exact_vertex_cap)
            throw CapExceeded("f-table needs 1 <= n <= " + std::to_string(f_exact_vertex_cap));
        FTable table;
        if (std::filesystem::exists(a.out))
            table = ftable_from_json(read_text_file(a.out));
        int threads = tools::thread_count(a.threads);

        Count lo = a.m >= 0 ? a.m : 0, hi = a.m >= 0 ? a.m : binomial2(a.n);
        if (lo > binomial2(a.n))
            throw PreconditionError("--m exceeds C(n, 2)");
        for (Count m = lo ; m <= hi ; ++m) {
            if (auto cached = table.find(a.n, m)) {
                std::cout << "n=" << a.n << " m=" << m << " f=" << cached->f_exact << " (cached)\n";
                continue;
            }
            auto total = labelled_graph_count(a.n, m);
            std::int64_t chunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(threads) * 16);
            auto parts = tools::parallel_map(chunks, threads, [&] (std::int64_t i) {
                auto begin = total / chunks * i + std::min<std::uint64_t>(i, total % chunks);
                auto end = begin + total / chunks + (static_cast<std::uint64_t>(i) < total % chunks ? 1 : 0);
                return f_exact_chunk(a.n, m, begin, end, a.dedup);
            });
            FChunk best;
            for (auto & p : parts)
                best = merge_chunks(best, p);
            if (! best.found)
                throw InternalInvariantError("f-table saw no graphs");
            table.insert(FTableEntry{ a.n, m, best.value, best.witness });
            std::cout << "n=" << a.n << " m=" << m << " f=" << best.value << "\n";
            write_text_file(a.out, ftable_to_json(table));
        }
        write_text_file(a.out, ftable_to_json(table));
        return 0;
    }

    auto run_verify(const VerifyArgs & a) -> int
    {
        tools::SuiteOptions options;
        options.nmax = a.nmax;
        options.count = a.count;
        options.seed = a.seed;
        options.threads = tools::thread_count(a.threads);
        auto report = tools::run_suite(a.suite, options);

        std::int64_t checked = 0, failed = 0;
        for (auto & c : report.checks) {
            std::cout << (c.passed() ? "PASS " : "FAIL ") << c.name << ": " << c.checked - c.failed << "/" << c.checked;
            if (c.failed > 0)
                std::cout << " first failure: " << c.first_failure;
            std::cout << "\n";
            checked += c.checked;
            failed += c.failed;
        }
        std::cout << "suite " << report.name << ": " << checked - failed << "/" << checked << " passed\n";
        if (! a.csv.empty()) {
            std::ofstream out(a.csv);
            if (! out)
                throw Error("cannot open " + a.csv + " for writing");
            tools::write_csv(out, report.table);
        }
        if (! report.passed())
            throw Violation("suite " + report.name + " has failing checks");
        return 0;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Chordal subgraph extraction, bounds and exhaustive checks" };
    app.require_subcommand(1);

    ConstructArgs construct;
    auto * c = app.add_subcommand("construct", "Write an extremal construction as an edge list");
    c->add_option("--variant", construct.variant, "turan | turan-plus-edge | k1-isolated | k2-bipartite | general-fig1")->required();
    c->add_option("--n", construct.n, "Vertex count")->required();
    c->add_option("--k", construct.k, "Part count");
    c->add_option("--m", construct.m, "Edge target (k1-isolated)");
    c->add_option("--t", construct.t, "Size of the big side (k2-bipartite)");
    c->add_option("--r", construct.r, "Size of the inner bipartite graph (k2-bipartite)");
    c->add_option("--a", construct.a, "Edge surplus over t_k(n) (general-fig1)");
    c->add_option("--out", construct.out, "Edge-list output, - for stdout");
    c->add_option("--dot", construct.dot, "Also write DOT with the parts as clusters");

    BoundsArgs bounds;
    auto * b = app.add_subcommand("bounds", "Print g1, g2 with its witness, and g3");
    b->add_option("--n", bounds.n, "Vertex count")->required();
    b->add_option("--m", bounds.m, "Single edge count; all m up to C(n,2) when absent");
    b->add_option("--k", bounds.k, "Also print the general target and, for k >= 2, the conjectured bound");
    b->add_option("--C", bounds.C, "Constant of the square-root term of the general target");

    ExtractArgs extract;
    auto * e = app.add_subcommand("extract", "Extract a chordal subgraph with a guaranteed size");
    e->add_option("--alg", extract.alg, "k1 | k2 | k3 | general")->required();
    e->add_option("--graph", extract.graph, "Edge-list input")->required();
    e->add_option("--anchor", extract.anchor, "Comma-separated anchor clique (k2: 3 vertices, k3: 4)");
    e->add_option("--k", extract.k, "Clique level for general");
    e->add_option("--c", extract.c, "Constant c for general");
    e->add_option("--c1", extract.c1, "Constant c1 for general");
    e->add_option("--C", extract.C, "Constant C for general");
    e->add_option("--json-report", extract.json_report, "Write the full report as JSON");

    CheckArgs check;
    auto * k = app.add_subcommand("check", "Re-validate a JSON report against its graph");
    k->add_option("--graph", check.graph, "Edge-list input")->required();
    k->add_option("--report", check.report, "JSON report")->required();

    OracleArgs oracle;
    auto * o = app.add_subcommand("oracle", "Exhaustive ground truth at small sizes");
    o->require_subcommand(1);
    auto * mc = o->add_subcommand("max-chordal", "Exact maximum chordal subgraph of a graph");
    mc->add_option("--graph", oracle.graph, "Edge-list input")->required();
    mc->add_option("--edge-cap", oracle.edge_cap, "Refuse graphs with more edges");
    auto * ft = o->add_subcommand("f-table", "Exact f(n, m) over all labelled graphs, cached in a JSON table");
    ft->add_option("--n", oracle.n, "Vertex count")->required();
    ft->add_option("--m", oracle.m, "Single edge count; all m when absent");
    ft->add_option("--out", oracle.out, "JSON table, read first if it exists")->required();
    ft->add_flag("--dedup", oracle.dedup, "Evaluate one graph per isomorphism class");
    ft->add_option("--threads", oracle.threads, "Worker threads");

    VerifyArgs verify;
    auto * v = app.add_subcommand("verify", "Run a property suite");
    v->add_option("--suite", verify.suite, "lemmas | k1 | k2 | k3 | general | constructions")->required();
    v->add_option("--nmax", verify.nmax, "Largest n examined");
    v->add_option("--count", verify.count, "Random instances per fuzzed check");
    v->add_option("--seed", verify.seed, "Seed of all random draws");
    v->add_option("--threads", verify.threads, "Worker threads");
    v->add_option("--csv", verify.csv, "Write the suite table as CSV");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & error) {
        int status = app.exit(error);
        return status == 0 ? 0 : exit_usage;
    }

    try {
        if (c->parsed())
            return run_construct(construct);
        if (b->parsed())
            return run_bounds(bounds);
        if (e->parsed())
            return run_extract(extract);
        if (k->parsed())
            return run_check(check);
        if (mc->parsed())
            return run_max_chordal(oracle);
        if (ft->parsed())
            return run_f_table(oracle);
        if (v->parsed())
            return run_verify(verify);
    }
    catch (const Violation & error) {
        std::cerr << "guarantee violated: " << error.what() << "\n";
        return exit_violation;
    }
    catch (const InternalInvariantError & error) {
        std::cerr << error.what() << "\n";
        return exit_violation;
    }
    catch (const CapExceeded & error) {
        std::cerr << "size cap exceeded: " << error.what() << "\n";
        return exit_usage;
    }
    catch (const std::exception & error) {
        std::cerr << "error: " << error.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
