#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace scatlab {

inline unsigned effective_threads(unsigned requested) {
    if (requested) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Partition [begin, end) into contiguous chunks, one per worker, and run
/// body(worker_index, chunk_begin, chunk_end) on each. Deterministic results
/// require the caller to merge per-worker state in worker order.
template <typename Body>
void parallel_ranges(std::uint64_t begin, std::uint64_t end, unsigned threads, Body&& body) {
    unsigned t = effective_threads(threads);
    std::uint64_t total = end > begin ? end - begin : 0;
    if (t <= 1 || total < 2 * t) {
        body(0u, begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    std::uint64_t chunk = total / t, rem = total % t, lo = begin;
    for (unsigned w = 0; w < t; ++w) {
        std::uint64_t hi = lo + chunk + (w < rem ? 1 : 0);
        pool.emplace_back([&body, w, lo, hi] { body(w, lo, hi); });
        lo = hi;
    }
    for (auto& th : pool) th.join();
}

}  // namespace scatlab
