/**
 * Deterministic fork/join helper: splits an index range into contiguous
 * chunks, runs them on worker threads, and lets the caller merge chunk
 * results in order.  Output never depends on the worker count.
 */

#ifndef AIINV_PARALLEL_HPP
#define AIINV_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace aiinv {

/**
 * Invoke chunk(begin, end) over a partition of [0, count) using the given
 * number of workers.  Chunks are disjoint; the callee must only touch its
 * own slots.  Exceptions from workers are rethrown on the caller.
 */
inline void parallelChunks(std::int64_t count, int threads,
                           const std::function<void(std::int64_t, std::int64_t)>& chunk)
{
    if (count <= 0)
        return;
    if (threads < 1)
        threads = 1;
    const int workers = static_cast<int>(std::min<std::int64_t>(threads, count));
    if (workers == 1) {
        chunk(0, count);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    const std::int64_t step = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t begin = std::int64_t(w) * step;
        const std::int64_t end = std::min(count, begin + step);
        pool.emplace_back([&, w, begin, end] {
            try {
                if (begin < end)
                    chunk(begin, end);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool)
        t.join();
    for (const std::exception_ptr& e : errors)
        if (e)
            std::rethrow_exception(e);
}

}  // namespace aiinv

#endif  // AIINV_PARALLEL_HPP
