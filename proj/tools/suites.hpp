#ifndef CHORDAL_FORGE_TOOLS_SUITES_HPP
#define CHORDAL_FORGE_TOOLS_SUITES_HPP

#include <chordal_forge/lemmas.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace chordal_forge::tools
{
    inline constexpr std::uint64_t default_seed = 0x5eed'c0de'2024ULL;

    struct SuiteOptions
    {
        std::optional<int> nmax;
        std::uint64_t seed = default_seed;
        std::optional<std::int64_t> count;
        int threads = 1;
    };

    struct SuiteTable
    {
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;
    };

    struct SuiteReport
    {
        std::string name;
        std::vector<CheckTally> checks;
        SuiteTable table;

        auto passed() const -> bool;
    };

    auto suite_names() -> std::vector<std::string>;

    /// Throws PreconditionError for an unknown name.
    auto run_suite(const std::string & name, const SuiteOptions & options) -> SuiteReport;

    // The pieces run_suite composes, exposed for the acceptance harness.

    auto clique_lemma_checks(int exhaustive_nmax, std::int64_t fuzz_count, std::uint64_t seed, int threads) -> std::vector<CheckTally>;

    /// f_exact(n, m) = g1(m) - 1 for n <= nmax and 1 <= m <= t_2(n).
    auto k1_exact_check(int nmax, int threads) -> CheckTally;
    /// f_exact(n, m) = g2(n, m) - 3 for n <= nmax and t_2(n) < m <= t_3(n).
    auto k2_exact_check(int nmax, int threads) -> CheckTally;
    /// f_exact(n, t_3(n) + 1) = g3(n) - 6 for each listed n.
    auto k3_exact_check(const std::vector<int> & ns, int threads) -> CheckTally;

    auto k2_random_check(int nmin, int nmax, std::int64_t count, std::uint64_t seed, int threads) -> CheckTally;
    auto k3_turan_check(int nmin, int nmax, int threads) -> CheckTally;
    /// Half planted-clique graphs, half random graphs trimmed at random to
    /// t_3(n) + 1 edges.
    auto k3_random_check(int nmin, int nmax, std::int64_t count, std::uint64_t seed, int threads) -> CheckTally;

    /// Oracle optimum against the closed-form upper bound for every
    /// construction instance with n <= nmax on which the bound is attained.
    auto construction_tightness_checks(int nmax, int threads) -> std::vector<CheckTally>;

    struct GeneralSweep
    {
        std::vector<CheckTally> checks;
        SuiteTable table;
    };

    auto general_fig1_sweep(const std::vector<int> & ks, const std::vector<int> & ns,
            const std::vector<double> & fractions, int threads) -> GeneralSweep;

    auto write_csv(std::ostream & out, const SuiteTable & table) -> void;
    auto checks_table(const std::vector<CheckTally> & checks) -> SuiteTable;
}

#endif
