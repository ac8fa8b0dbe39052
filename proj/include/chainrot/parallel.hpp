#pragma once

// Minimal fork-join helper: static range partitioning over std::thread.
// Callers own determinism by reducing per-chunk results in chunk order.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace chainrot {

inline int effective_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(begin, end) over disjoint chunks of [begin, end). With one thread
// (or a tiny range) everything runs inline. The first exception thrown by a
// worker is rethrown after all workers join.
inline void parallel_for_chunks(int64_t begin, int64_t end, int threads,
                                const std::function<void(int64_t, int64_t)>& fn) {
    int64_t count = end - begin;
    if (count <= 0) return;
    int workers = static_cast<int>(
        std::min<int64_t>(effective_threads(threads), count));
    if (workers <= 1) {
        fn(begin, end);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    int64_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int64_t lo = begin + w * chunk;
        int64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, w, lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool) th.join();
    for (std::exception_ptr& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace chainrot
