#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace nonarch {

/**
 * Deterministic fork-join over an indexed chunk space: fn(i) is evaluated
 * for i in [0, chunks), results land in a vector by index, and the caller
 * folds them in index order.  Thread count only changes who computes which
 * chunk, never the result — every merge in this codebase is either exact
 * (integer adds, ordered concatenation) or order-free (max), so outputs are
 * byte-identical at any worker count.
 */
template <typename R>
std::vector<R> parallel_map(std::int64_t chunks, int threads,
                            const std::function<R(std::int64_t)>& fn) {
    std::vector<R> out(static_cast<std::size_t>(chunks));
    if (chunks == 0) return out;
    if (threads < 1) threads = 1;
    const int workers = static_cast<int>(std::min<std::int64_t>(threads, chunks));
    if (workers == 1) {
        for (std::int64_t i = 0; i < chunks; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    std::atomic<std::int64_t> cursor{0};
    std::exception_ptr first_error = nullptr;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                std::int64_t i = cursor.fetch_add(1);
                if (i >= chunks || failed.load()) return;
                try {
                    out[static_cast<std::size_t>(i)] = fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

}  // namespace nonarch
