// Worker-count control. SUPERCAS_THREADS caps the number of worker threads;
// all parallelized loops are over independent read-only inputs.
#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace supercas {

inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SUPERCAS_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

// Runs fn(begin, end) over [0, n) split across workers.
inline void parallel_ranges(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    unsigned w = worker_count();
    if (w <= 1 || n < 2) {
        fn(0, n);
        return;
    }
    if (w > n) w = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    std::size_t chunk = (n + w - 1) / w;
    for (unsigned t = 0; t < w; ++t) {
        std::size_t b = t * chunk, e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back(fn, b, e);
    }
    for (auto& th : pool) th.join();
}

} // namespace supercas
