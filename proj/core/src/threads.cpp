#include "sknn/threads.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace sknn {

std::size_t effective_threads(std::size_t requested) {
    std::size_t n = requested;
    if (n == 0) {
        if (const char* env = std::getenv("SKNN_THREADS")) {
            const long v = std::atol(env);
            if (v > 0) n = static_cast<std::size_t>(v);
        }
    }
    if (n == 0) n = 1;
    const std::size_t hw = std::thread::hardware_concurrency();
    if (hw > 0 && n > hw) n = hw;
    return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, std::size_t threads) {
    const std::size_t workers = std::min(effective_threads(threads), n == 0 ? std::size_t{1} : n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace sknn
