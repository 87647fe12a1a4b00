#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hpoly {

// Worker cap: HPOLY_THREADS when set, otherwise hardware concurrency
// (at most 8; these are desk-scale computations).
inline unsigned worker_count() {
    if (const char* env = std::getenv("HPOLY_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 8u);
}

// Applies f to every item, returning results in item order. Work items are
// claimed atomically but results land by index, so output is identical to
// the serial run regardless of thread count.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F&& f)
    -> std::vector<decltype(f(items.front()))> {
    using R = decltype(f(items.front()));
    std::vector<R> results(items.size());
    if (items.empty()) return results;
    const unsigned workers =
        std::min<unsigned>(worker_count(), static_cast<unsigned>(items.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) results[i] = f(items[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto run = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size() || failed.load()) return;
            try {
                results[i] = f(items[i]);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(error);
    return results;
}

}  // namespace hpoly
