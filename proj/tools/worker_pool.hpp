#ifndef CHORDAL_FORGE_TOOLS_WORKER_POOL_HPP
#define CHORDAL_FORGE_TOOLS_WORKER_POOL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace chordal_forge::tools
{
    /// CHORDAL_FORGE_THREADS if set, else requested if positive, else the
    /// hardware concurrency.
    inline auto thread_count(int requested = 0) -> int
    {
        if (const char * env = std::getenv("CHORDAL_FORGE_THREADS")) {
            int value = std::atoi(env);
            if (value > 0)
                return value;
        }
        if (requested > 0)
            return requested;
        return std::max(1u, std::thread::hardware_concurrency());
    }

    /// Calls f(i) for every i in [0, count) over a fixed set of threads and
    /// returns the results in index order, so output never depends on the
    /// thread count. The first exception thrown by any task is rethrown.
    template <typename F_>
    auto parallel_map(std::int64_t count, int threads, F_ && f)
    {
        using Result = decltype(f(std::int64_t{ 0 }));
        std::vector<std::optional<Result>> slots(count);
        std::atomic<std::int64_t> next{ 0 };
        std::exception_ptr failure;
        std::mutex failure_mutex;

        auto work = [&] {
            while (true) {
                auto i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    slots[i] = f(i);
                }
                catch (...) {
                    std::lock_guard<std::mutex> guard(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        };

        int used = static_cast<int>(std::min<std::int64_t>(std::max(1, threads), std::max<std::int64_t>(count, 1)));
        if (used <= 1)
            work();
        else {
            std::vector<std::thread> pool;
            for (int t = 0 ; t < used ; ++t)
                pool.emplace_back(work);
            for (auto & t : pool)
                t.join();
        }
        if (failure)
            std::rethrow_exception(failure);
        std::vector<Result> results;
        results.reserve(count);
        for (auto & slot : slots)
            results.push_back(std::move(*slot));
        return results;
    }

    /// Independent stream for task i of a run seeded with seed.
    inline auto task_seed(std::uint64_t seed, std::uint64_t i) -> std::uint64_t
    {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
}

#endif
