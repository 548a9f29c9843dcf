#ifndef TRISUM_PARALLEL_HPP
#define TRISUM_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace trisum {

// Runs fn(i) for i in [0, n). Work is chunked by index so any association
// of results must be done by slot, keeping reductions deterministic.
inline void parallel_for(size_t n, unsigned jobs, const std::function<void(size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    unsigned workers = std::min<size_t>(jobs, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace trisum

#endif
