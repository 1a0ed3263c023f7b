#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace primeap {

/// Worker count: PRIMEAP_THREADS if set, otherwise the logical CPU count.
inline unsigned default_thread_count() {
    if (const char* env = std::getenv("PRIMEAP_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(chunk_index) for chunk_index in [0, chunks). Chunks are handed
/// out in index order; callers that need a deterministic result must merge
/// per-chunk outputs by chunk index, never by completion order.
inline void parallel_for_chunks(std::size_t chunks,
                                unsigned threads,
                                const std::function<void(std::size_t)>& fn) {
    if (chunks == 0) return;
    if (threads <= 1 || chunks == 1) {
        for (std::size_t i = 0; i < chunks; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= chunks) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<std::size_t>(threads, chunks);
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace primeap
