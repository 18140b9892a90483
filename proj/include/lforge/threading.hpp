#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace lforge {

// Worker count: LFORGE_THREADS if set (>=1), otherwise hardware concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("LFORGE_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Run fn(i) for i in [0, n). Work is cut into fixed contiguous blocks so that
// each index is processed identically no matter how many threads execute;
// callers that need a reduction store per-index results and fold them in
// index order afterwards. That is what keeps reports byte-identical when
// LFORGE_THREADS changes.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned workers = thread_budget();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t nthreads = std::min<std::size_t>(workers, n);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace lforge
