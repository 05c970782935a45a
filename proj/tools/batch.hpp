#pragma once

// Deterministic fan-out: every sample index owns its own RNG stream
// (stream = base + index), so results are identical for any worker count
// and threads never contend on shared state.

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cclab_cli {

template <typename T, typename Fn>
std::vector<T> run_batch(std::int64_t m, int workers, Fn&& fn) {
    std::vector<T> out(static_cast<std::size_t>(m));
    if (workers <= 1) {
        for (std::int64_t i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    std::atomic<std::int64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::int64_t i = next.fetch_add(1); i < m; i = next.fetch_add(1))
                out[static_cast<std::size_t>(i)] = fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(m);
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace cclab_cli
