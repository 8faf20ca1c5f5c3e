#ifndef RDOS_PARALLEL_HPP
#define RDOS_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rdos::parallel {

// Process-wide worker cap. 0 means hardware concurrency. Results never
// depend on this value: every parallel loop writes each slot exactly once.
inline std::atomic<int>& max_threads_slot() {
    static std::atomic<int> value{0};
    return value;
}

inline void set_max_threads(int n) { max_threads_slot().store(n < 0 ? 0 : n); }

inline int effective_threads(std::ptrdiff_t n_items) {
    int cap = max_threads_slot().load();
    if (cap <= 0) {
        cap = static_cast<int>(std::thread::hardware_concurrency());
        if (cap <= 0) cap = 1;
    }
    if (static_cast<std::ptrdiff_t>(cap) > n_items) cap = static_cast<int>(n_items);
    return cap < 1 ? 1 : cap;
}

// Runs fn(i) for i in [0, n). fn must only write state owned by index i.
template <typename Fn>
void parallel_for(std::ptrdiff_t n, Fn&& fn) {
    if (n <= 0) return;
    const int workers = effective_threads(n);
    if (workers == 1) {
        for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::ptrdiff_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::ptrdiff_t i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace rdos::parallel

#endif  // RDOS_PARALLEL_HPP
