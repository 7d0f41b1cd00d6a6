#include <chordal_forge/lemmas.hpp>
#include <chordal_forge/bounds.hpp>
#include <chordal_forge/errors.hpp>

#include <string>

using std::string;
using std::to_string;
using std::vector;

namespace chordal_forge
{
    auto CheckTally::record(bool ok, const string & where) -> void
    {
        ++checked;
        if (! ok && failed++ == 0)
            first_failure = where;
    }

    auto CheckTally::merge(const CheckTally & other) -> void
    {
        checked += other.checked;
        if (other.failed > 0 && failed == 0)
            first_failure = other.first_failure;
        failed += other.failed;
    }

    namespace
    {
        // g2(n, m) for m in [t_2(n) + 1, C(n, 2)], indexed by m - t_2(n) - 1.
        auto g2_row(int n) -> vector<Count>
        {
            vector<Count> row;
            for (Count m = turan_number(2, n) + 1 ; m <= binomial2(n) ; ++m)
                row.push_back(g2(n, m).value);
            return row;
        }

        auto ceil_div(Count a, Count b) -> Count
        {
            return (a + b - 1) / b;
        }
    }

    auto lemma_checks(int nmax, int tnmax) -> vector<CheckTally>
    {
        if (nmax < 1)
            throw PreconditionError("lemma checks need nmax >= 1");

        vector<vector<Count>> rows(nmax + 1);
        for (int n = 1 ; n <= nmax ; ++n)
            rows[n] = g2_row(n);
        auto lookup = [&] (int n, Count m) -> Count {
            auto i = m - turan_number(2, n) - 1;
            if (i < static_cast<Count>(rows[n].size()))
                return rows[n][i];
            return g2(n, m).value;
        };
        auto at = [] (int n, Count m) { return "n=" + to_string(n) + " m=" + to_string(m); };

        CheckTally threshold{ "g2-at-threshold" };
        CheckTally balance{ "g2-witness-balance" };
        CheckTally step{ "g2-drop-one-edge" };
        CheckTally two_removed{ "g2-remove-two-vertices" };
        CheckTally one_removed{ "g2-remove-low-degree-vertex" };

        for (int n = 1 ; n <= nmax ; ++n) {
            Count t2 = turan_number(2, n);
            if (n >= 4)
                threshold.record(lookup(n, t2 + 1) == 2 * n - ceil_div(n, 2) + 2, at(n, t2 + 1));

            for (Count m = t2 + 1 ; m <= binomial2(n) ; ++m) {
                Count g = lookup(n, m);

                // Some minimiser has -1/2 <= 2t - n - r/2 <= 1/2.
                if (m <= turan_number(3, n)) {
                    bool found = false;
                    for (int t = 0 ; t <= n && ! found ; ++t) {
                        int r = g1(m - static_cast<Count>(t) * (n - t));
                        if (2 * n - t + r != g)
                            continue;
                        Count h2 = 4 * t - 2 * n - r;
                        found = -1 <= h2 && h2 <= 1;
                    }
                    balance.record(found, at(n, m));
                }

                if (m >= t2 + 2)
                    step.record(lookup(n, m - 1) >= g - 1, at(n, m));

                if (n >= 3) {
                    Count t2_small = turan_number(2, n - 2);
                    bool ok = m - n + 1 >= t2_small + 1;
                    if (ok)
                        ok = lookup(n - 2, m - n + 1) >= g - 3;
                    two_removed.record(ok, at(n, m) + " first");
                    if (m >= t2 + 2) {
                        ok = m - n >= t2_small + 1;
                        if (ok)
                            ok = lookup(n - 2, m - n) >= g - 4;
                        two_removed.record(ok, at(n, m) + " second");
                    }
                }

                if (n >= 2) {
                    Count t2_less = turan_number(2, n - 1);
                    for (Count d = 0 ; 3 * d <= g - 1 ; ++d) {
                        bool ok = m - d >= t2_less + 1;
                        if (ok)
                            ok = lookup(n - 1, m - d) >= g - 2;
                        one_removed.record(ok, at(n, m) + " d=" + to_string(d));
                    }
                }
            }
        }

        CheckTally t3{ "t3-differences" };
        CheckTally g3_steps{ "g3-differences" };
        for (int n = 5 ; n <= tnmax ; ++n) {
            Count t = turan_number(3, n);
            string where = "n=" + to_string(n);
            t3.record(t - turan_number(3, n - 1) == 2 * n / 3, where + " one");
            t3.record(t - turan_number(3, n - 2) == 4 * n / 3 - 1, where + " two");
            t3.record(t - turan_number(3, n - 3) == 2 * n - 3, where + " three");
            t3.record(t - turan_number(3, n - 4) == g3(n) - 7, where + " four");

            Count step1 = g3(n) - g3(n - 1);
            g3_steps.record(step1 == (n % 3 == 1 ? 2 : 3), where + " one");
            g3_steps.record(g3(n) - g3(n - 2) <= 6, where + " two");
            g3_steps.record(g3(n) - g3(n - 3) == 8, where + " three");
            g3_steps.record(g3(n) - g3(n - 4) <= 11, where + " four");
        }

        return {
            threshold, balance, step, two_removed,
            one_removed, t3, g3_steps
        };
    }
}
