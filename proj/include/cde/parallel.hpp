#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace cde {

/// Worker cap from CDE_NUM_THREADS (0 or unset = hardware concurrency).
inline unsigned num_threads() {
    if (const char* env = std::getenv("CDE_NUM_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Runs fn(i) for i in [0, n). Each index owns its output slot, so results are
/// bitwise-identical for any worker count. Exceptions propagate to the caller.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
    const unsigned workers = std::min<unsigned>(num_threads(), n > 0 ? static_cast<unsigned>(n) : 1u);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = static_cast<int>(w); i < n; i += static_cast<int>(workers)) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace cde
