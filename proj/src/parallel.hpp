#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace wsatlab::detail {

// Runs fn(i) for i in [0, count) across `workers` threads. Work is handed
// out through a shared counter, so the mapping of index to thread is not
// deterministic — callers must make fn(i) depend only on i.
inline void parallel_for_index(std::uint64_t count, int workers,
                               const std::function<void(std::uint64_t)>& fn) {
    if (workers < 1) throw std::invalid_argument("workers must be at least 1");
    if (count == 0) return;
    if (workers == 1) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) break;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };
    std::vector<std::thread> pool;
    int spawn = workers;
    if (static_cast<std::uint64_t>(spawn) > count) spawn = static_cast<int>(count);
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int t = 0; t < spawn; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace wsatlab::detail
