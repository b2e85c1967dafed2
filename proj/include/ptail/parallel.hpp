#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace ptail {

// Runs fn(begin, end) over contiguous blocks of [0, count) on the requested
// number of threads (0 = hardware concurrency). Callers write results into
// per-index slots and reduce sequentially afterwards, so the outcome does not
// depend on the worker count.
inline void parallel_for_blocks(std::size_t count, unsigned threads,
                                const std::function<void(std::size_t, std::size_t)>& fn) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || count < 2) {
        fn(0, count);
        return;
    }
    if (threads > count) threads = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = static_cast<std::size_t>(t) * chunk;
        if (lo >= count) break;
        const std::size_t hi = std::min(count, lo + chunk);
        pool.emplace_back(fn, lo, hi);
    }
    for (auto& th : pool) th.join();
}

}  // namespace ptail
