#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace fc {

// Runs fn(i) for i in [0, n). Results must be written to pre-sized slots so
// the merge order is deterministic regardless of the job count.
template <class Fn>
void parallel_for(size_t n, int jobs, Fn&& fn) {
    if (jobs <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    size_t workers = std::min<size_t>(static_cast<size_t>(jobs), n);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (size_t t = 0; t < workers; ++t) {
        threads.emplace_back([&, t] {
            for (size_t i = t; i < n; i += workers) fn(i);
        });
    }
    for (auto& th : threads) th.join();
}

} // namespace fc
