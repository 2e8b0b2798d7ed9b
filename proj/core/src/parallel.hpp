#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace corridor::detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(begin, end) over [0, n) split into contiguous blocks, one per
/// worker. Results must be combined by the caller in index order so the
/// outcome is identical for any worker count.
inline void parallel_blocks(long n, int n_threads,
                            const std::function<void(long, long)>& fn) {
    const int workers = std::min<long>(resolve_threads(n_threads), std::max(n, 1L));
    if (workers <= 1 || n <= 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long b = w * chunk;
        const long e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back(fn, b, e);
    }
    for (auto& th : pool) th.join();
}

}  // namespace corridor::detail
