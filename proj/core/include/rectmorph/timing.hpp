#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include "rectmorph/error.hpp"

namespace rectmorph::timing {

/// Compiler barrier: forces `p` (and everything reachable through it)
/// to be considered used so timed work is not dead-code eliminated.
inline void do_not_optimize(const void* p) {
    asm volatile("" : : "g"(p) : "memory");
}

/// Median wall time of one call to fn, in nanoseconds. One untimed
/// warmup call runs first. When a single call is shorter than
/// min_sample_ns the call is batched (doubling) until the sample is
/// long enough to divide; pass 0 to time single calls as-is.
template <class F>
std::uint64_t median_ns(F&& fn, int reps, std::uint64_t min_sample_ns = 100000) {
    if (reps < 1)
        throw Error(Errc::BadArgument, "timing needs at least one repetition");
    using clock = std::chrono::steady_clock;

    fn();

    std::vector<std::uint64_t> samples;
    samples.reserve(std::size_t(reps));
    for (int r = 0; r < reps; ++r) {
        std::uint64_t batch = 1;
        for (;;) {
            const auto t0 = clock::now();
            for (std::uint64_t i = 0; i < batch; ++i)
                fn();
            const auto t1 = clock::now();
            const auto ns = std::uint64_t(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                    .count());
            if (ns >= min_sample_ns || batch >= (std::uint64_t(1) << 20)) {
                samples.push_back(ns / batch);
                break;
            }
            batch *= 2;
        }
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    if (samples.size() % 2 == 1) return samples[mid];
    return (samples[mid - 1] + samples[mid]) / 2;
}

} // namespace rectmorph::timing
