#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace minkprod::detail {

/// Thread budget: MINKPROD_THREADS if set (>=1), else hardware concurrency.
inline int thread_budget() {
    if (const char* env = std::getenv("MINKPROD_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run fn(block_index, thread_index) over [0, blocks) on up to
/// thread_budget() threads. Work must be pure or write to per-thread state.
inline void parallel_blocks(int blocks, const std::function<void(int, int)>& fn) {
    const int threads = std::min(thread_budget(), std::max(1, blocks));
    if (threads == 1) {
        for (int b = 0; b < blocks; ++b) fn(b, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([=, &fn] {
            for (int b = t; b < blocks; b += threads) fn(b, t);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace minkprod::detail
