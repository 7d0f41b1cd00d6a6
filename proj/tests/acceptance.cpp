// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include "suites.hpp"
#include "worker_pool.hpp"

#include <chordal_forge/bounds.hpp>
#include <chordal_forge/oracle.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace chordal_forge;
using namespace chordal_forge::tools;

using std::string;
using std::vector;

namespace
{
    struct Outcome
    {
        bool ok = true;
        string detail;
    };

    auto summarise(const vector<CheckTally> & checks) -> Outcome
    {
        Outcome o;
        std::ostringstream s;
        for (auto & c : checks) {
            if (! c.passed())
                o.ok = false;
            if (s.tellp() > 0)
                s << "; ";
            s << c.name << " " << c.checked - c.failed << "/" << c.checked;
            if (c.failed > 0)
                s << " first failure: " << c.first_failure;
            else if (c.checked == 0)
                s << " (nothing checked)";
        }
        o.detail = s.str();
        return o;
    }

    auto f_values(const vector<std::array<Count, 3>> & expected) -> Outcome
    {
        Outcome o;
        std::ostringstream s;
        for (auto [n, m, want] : expected) {
            auto got = f_exact(static_cast<int>(n), m, true).f_exact;
            if (got != want)
                o.ok = false;
            if (s.tellp() > 0)
                s << ", ";
            s << "f(" << n << "," << m << ")=" << got << (got == want ? "" : " expected " + std::to_string(want));
        }
        o.detail = s.str();
        return o;
    }

    auto run(int number, const string & title, double budget_seconds, const std::function<Outcome()> & body) -> bool
    {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        }
        catch (const std::exception & e) {
            o = { false, string("exception: ") + e.what() };
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = seconds <= budget_seconds;
        bool ok = o.ok && in_time;
        std::printf("%s %2d %s [%.2fs, budget %.0fs] %s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(),
                seconds, budget_seconds, o.detail.c_str(), in_time ? "" : " (over time budget)");
        std::fflush(stdout);
        return ok;
    }
}

auto main(int argc, char ** argv) -> int
{
    string csv_path = argc > 1 ? argv[1] : "general_fig1_sweep.csv";
    int threads = thread_count(0);
    std::uint64_t seed = default_seed;
    int failures = 0;

    auto tally = [&] (bool ok) { failures += ok ? 0 : 1; };

    tally(run(1, "k=2 threshold f_exact(6,10)", 300, [] {
        return f_values({ { 6, 10, 8 } });
    }));

    tally(run(2, "k=3 threshold f_exact at n=5,6,7", 900, [&] {
        auto o = f_values({ { 5, 9, 9 }, { 6, 13, 12 }, { 7, 17, 14 } });
        auto formula = summarise({ k3_exact_check({ 5, 6, 7 }, threads) });
        for (int n = 5 ; n <= 7 ; ++n)
            if (g3(n) - 6 != 3 * n - (n + 2) / 3 - 4)
                o.ok = false;
        return Outcome{ o.ok && formula.ok, o.detail + "; " + formula.detail };
    }));

    tally(run(3, "k=1 full range f_exact = g1(m)-1, n<=6", 1800, [&] {
        return summarise({ k1_exact_check(6, threads) });
    }));

    tally(run(4, "k=2 range f_exact = g2(n,m)-3, n<=6", 1800, [&] {
        return summarise({ k2_exact_check(6, threads) });
    }));

    tally(run(5, "extract_k2 on 1000 random graphs, 5<=n<=40", 120, [&] {
        return summarise({ k2_random_check(5, 40, 1000, seed, threads) });
    }));

    tally(run(6, "extract_k3 on turan_plus_edge(3,5..30) and 500 trimmed graphs", 300, [&] {
        return summarise({ k3_turan_check(5, 30, threads), k3_random_check(5, 30, 500, seed, threads) });
    }));

    tally(run(7, "bound lemmas exhaustive for n<=60", 60, [] {
        return summarise(lemma_checks(60));
    }));

    tally(run(8, "clique process and forest lemmas, exhaustive n<=7 and 1000 fuzzed", 600, [&] {
        return summarise(clique_lemma_checks(7, 1000, seed, threads));
    }));

    tally(run(9, "construction tightness for n<=7", 600, [&] {
        return summarise(construction_tightness_checks(7, threads));
    }));

    tally(run(10, "extract_general fig1 sweep k in {2,3}, n in {60,120,240,480}", 600, [&] {
        auto sweep = general_fig1_sweep({ 2, 3 }, { 60, 120, 240, 480 }, { 0.1, 0.3, 0.5, 0.7, 0.9 }, threads);
        auto o = summarise(sweep.checks);
        std::ofstream out(csv_path);
        write_csv(out, sweep.table);
        if (! out) {
            o.ok = false;
            o.detail += "; could not write " + csv_path;
        }
        else
            o.detail += "; table in " + csv_path;
        return o;
    }));

    std::printf("%d of 10 criteria failed\n", failures);
    return failures;
}
