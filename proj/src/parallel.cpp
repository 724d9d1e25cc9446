#include "corrcp/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace corrcp {

namespace {

int default_threads() {
    static int cached = [] {
        if (const char* env = std::getenv("CORRCP_THREADS")) {
            int n = std::atoi(env);
            if (n >= 1) return n;
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }();
    return cached;
}

std::atomic<int> g_max_threads{0};  // 0 = use default

}  // namespace

int max_threads() {
    int n = g_max_threads.load(std::memory_order_relaxed);
    return n >= 1 ? n : default_threads();
}

void set_max_threads(int n) { g_max_threads.store(n >= 1 ? n : 0, std::memory_order_relaxed); }

void parallel_for(std::size_t n, std::size_t grain,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    if (grain == 0) grain = 1;
    const std::size_t n_chunks = (n + grain - 1) / grain;
    const int workers = std::min<std::size_t>(static_cast<std::size_t>(max_threads()), n_chunks);

    if (workers <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c)
            fn(c * grain, std::min(n, (c + 1) * grain));
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto body = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= n_chunks) return;
            try {
                fn(c * grain, std::min(n, (c + 1) * grain));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();

    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace corrcp
