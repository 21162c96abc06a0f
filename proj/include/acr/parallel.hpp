#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace acr {

/// Runs body(i) for i in [0, count) on up to `workers` threads, each taking a
/// contiguous block. Callers write results by index, so output order never
/// depends on the worker count.
template <class Body>
void parallel_for(std::size_t count, int workers, Body body) {
    const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), std::max<std::size_t>(count, 1));
    if (w <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::jthread> threads;
    for (std::size_t k = 0; k < w; ++k) {
        threads.emplace_back([&, k] {
            for (std::size_t i = count * k / w; i < count * (k + 1) / w; ++i) body(i);
        });
    }
}

}  // namespace acr
