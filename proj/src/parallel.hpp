#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace onsetpair::detail {

inline int resolve_threads(int n_threads) {
    if (n_threads > 0) return n_threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, n) on up to n_threads workers. Each index writes
// only its own output slot, so the partition never affects the result.
template <typename Fn>
void parallel_for(int64_t n, int n_threads, Fn&& fn) {
    const int workers = std::min<int64_t>(resolve_threads(n_threads), n);
    if (workers <= 1) {
        for (int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const int64_t lo = n * w / workers;
        const int64_t hi = n * (w + 1) / workers;
        pool.emplace_back([lo, hi, &fn] {
            for (int64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace onsetpair::detail
