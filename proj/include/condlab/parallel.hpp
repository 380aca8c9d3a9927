#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace condlab {

// Fixed work-chunk size. Chunk boundaries depend only on the index range,
// never on the thread count, so per-chunk reductions merged in chunk order
// give identical results for any pool size.
inline constexpr std::size_t kWorkChunk = 256;

inline std::size_t work_chunk_count(std::size_t total) {
    return (total + kWorkChunk - 1) / kWorkChunk;
}

// Runs work(chunk_index, index) for index in [0, total).
template <typename Work>
void run_indexed(std::size_t total, int threads, Work&& work) {
    const std::size_t chunks = work_chunk_count(total);
    const int n_threads = std::max(1, std::min<int>(threads, 64));
    if (n_threads == 1 || chunks <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            const std::size_t lo = c * kWorkChunk;
            const std::size_t hi = std::min(total, lo + kWorkChunk);
            for (std::size_t i = lo; i < hi; ++i) work(c, i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_lock;
    auto body = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t c = next.fetch_add(1);
            if (c >= chunks) break;
            const std::size_t lo = c * kWorkChunk;
            const std::size_t hi = std::min(total, lo + kWorkChunk);
            try {
                for (std::size_t i = lo; i < hi; ++i) work(c, i);
            } catch (...) {
                std::lock_guard<std::mutex> g(error_lock);
                if (!error) error = std::current_exception();
                failed.store(true);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(body);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace condlab
