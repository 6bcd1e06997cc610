#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hypercov {

/// Resolves a worker-count request; 0 means hardware concurrency.
inline unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(index, worker) for index in [0, count) on up to `workers` threads.
/// Indices are claimed dynamically, so fn must write only to per-index or
/// per-worker state. The first exception thrown is rethrown on the caller.
template <typename Fn>
void parallel_for(std::uint64_t count, unsigned workers, Fn&& fn) {
    workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), std::max<std::uint64_t>(count, 1)));
    if (workers == 1) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i, 0u);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t i = next++; i < count; i = next++) {
                    try {
                        fn(i, w);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                        next = count;
                    }
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace hypercov
