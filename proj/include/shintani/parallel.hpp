#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace shintani {

/// Worker count from SHINTANI_THREADS, else the hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, n) on a small pool; rethrows the first exception
/// in index order. Callers write results into preallocated slots.
void parallel_for(size_t n, const std::function<void(size_t)>& body);

/// Per-trial seed derived from a root seed (splitmix64 mixing).
inline uint64_t derive_seed(uint64_t root, uint64_t index) {
    auto mix = [](uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    };
    return mix(root ^ mix(index));
}

}  // namespace shintani
