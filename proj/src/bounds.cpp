#include <chordal_forge/bounds.hpp>
#include <chordal_forge/errors.hpp>

#include <cmath>
#include <string>

namespace chordal_forge
{
    auto binomial2(Count x) -> Count
    {
        return x < 2 ? 0 : x * (x - 1) / 2;
    }

    auto turan_part_sizes(int k, int n) -> std::vector<int>
    {
        if (k < 1)
            throw PreconditionError("Turan graph needs at least one class");
        if (n < 0)
            throw PreconditionError("negative vertex count");
        std::vector<int> sizes(k, n / k);
        for (int i = 0 ; i < n % k ; ++i)
            ++sizes[i];
        return sizes;
    }

    auto turan_number(int k, int n) -> Count
    {
        Count result = binomial2(n);
        for (auto s : turan_part_sizes(k, n))
            result -= binomial2(s);
        return result;
    }

    auto g1(Count m) -> int
    {
        if (m <= 0)
            return 0;
        auto r = static_cast<Count>(std::sqrt(4.0 * static_cast<double>(m)));
        while (r > 0 && (r - 1) * (r - 1) / 4 >= m)
            --r;
        while (r * r / 4 < m)
            ++r;
        return static_cast<int>(r);
    }

    auto g2(int n, Count m) -> BoundWitness
    {
        if (n < 1)
            throw PreconditionError("g2 needs n >= 1");
        if (m < turan_number(2, n) + 1)
            throw PreconditionError("g2(" + std::to_string(n) + ", " + std::to_string(m) + ") needs m >= t_2(n) + 1 = " + std::to_string(turan_number(2, n) + 1));

        BoundWitness best{ -1, 0, 0 };
        for (int t = 0 ; t <= n ; ++t) {
            Count needed = m - static_cast<Count>(t) * (n - t);
            int r = g1(needed);
            Count value = 2 * static_cast<Count>(n) - t + r;
            if (best.value < 0 || value < best.value)
                best = BoundWitness{ value, t, r };
        }
        return best;
    }

    auto g3(int n) -> Count
    {
        if (n < 1)
            throw PreconditionError("g3 needs n >= 1");
        return 3 * static_cast<Count>(n) - (n + 2) / 3 + 2;
    }

    auto general_target(const GeneralBoundParams & p) -> double
    {
        if (p.k < 1)
            throw PreconditionError("general target needs k >= 1");
        double k = p.k;
        double n = p.n;
        return (k - 1.0 / k) * n + std::sqrt(2.0 * (k + 1.0) * p.a / k)
            - p.C * std::sqrt(n) - static_cast<double>(binomial2(p.k + 1));
    }

    auto turan_plus_edge_value(int k, int n) -> Count
    {
        if (k < 1)
            throw PreconditionError("needs k >= 1");
        return static_cast<Count>(k) * n - (n + k - 1) / k + 2 - binomial2(k + 1);
    }

    auto conjecture_bound(int k, int n, Count m) -> BoundWitness
    {
        if (k < 2)
            throw PreconditionError("conjecture bound needs k >= 2");
        if (m < turan_number(k, n) + 1)
            throw PreconditionError("conjecture bound needs m >= t_k(n) + 1");

        BoundWitness best{ -1, 0, 0 };
        for (int t = 0 ; t <= n ; ++t) {
            Count needed = m - turan_number(k - 1, n - t) - static_cast<Count>(t) * (n - t);
            int r = g1(needed);
            Count value = static_cast<Count>(k) * n - t + r - binomial2(k + 1);
            if (best.value < 0 || value < best.value)
                best = BoundWitness{ value, t, r };
        }
        return best;
    }
}
