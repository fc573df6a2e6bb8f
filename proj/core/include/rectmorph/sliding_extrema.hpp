#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rectmorph/image.hpp"

namespace rectmorph {

/// Tally of two-input min/max evaluations. Callers that want counts
/// pass one in; passing nullptr costs nothing on the hot paths since
/// the algorithms account in bulk per pass, never per element.
struct OpCounter {
    std::uint64_t comparisons = 0;
    void reset() noexcept { comparisons = 0; }
};

/// Sliding window extremum over a 1-D signal, direct algorithm:
/// (window - 1) shifted elementwise passes over a padded copy.
/// Costs exactly (window - 1) * n comparisons but each pass is a
/// contiguous elementwise loop the compiler turns into byte-wide
/// vector min/max. A provided counter is reset, then filled.
void linear_window_1d(const std::uint8_t* in, std::size_t n, int window,
                      OpKind op, const BorderPolicy& border, std::uint8_t* out,
                      OpCounter* counter = nullptr);

/// Sliding window extremum, van Herk / Gil-Werman algorithm: one
/// forward and one backward running-extremum sweep over blocks of
/// `window` elements plus one merge per output. Comparison count is
/// bounded by ~3 per element regardless of window size; the per-block
/// sweeps are serial chains, so they run several blocks in lockstep.
void van_herk_1d(const std::uint8_t* in, std::size_t n, int window,
                 OpKind op, const BorderPolicy& border, std::uint8_t* out,
                 OpCounter* counter = nullptr);

std::vector<std::uint8_t> linear_window_1d(const std::vector<std::uint8_t>& in,
                                           int window, OpKind op,
                                           const BorderPolicy& border,
                                           OpCounter* counter = nullptr);
std::vector<std::uint8_t> van_herk_1d(const std::vector<std::uint8_t>& in,
                                      int window, OpKind op,
                                      const BorderPolicy& border,
                                      OpCounter* counter = nullptr);

namespace detail {

struct MinOp {
    static std::uint8_t apply(std::uint8_t a, std::uint8_t b) noexcept {
        return a < b ? a : b;
    }
};

struct MaxOp {
    static std::uint8_t apply(std::uint8_t a, std::uint8_t b) noexcept {
        return a > b ? a : b;
    }
};

/// Writes n + 2*wing elements: wing border-resolved values, the signal,
/// wing border-resolved values. Replicate repeats in[0] / in[n-1].
void pad_row(const std::uint8_t* in, std::size_t n, int wing,
             const BorderPolicy& border, std::uint8_t* padded);

/// Core loops over an already padded buffer of n + window - 1 values.
/// out[i] = extremum of padded[i .. i+window-1]. Both add to *counter
/// (when given) without resetting it.
void linear_windows(const std::uint8_t* padded, std::size_t n, int window,
                    OpKind op, std::uint8_t* out, OpCounter* counter);

void van_herk_windows(const std::uint8_t* padded, std::size_t n, int window,
                      OpKind op, std::uint8_t* out,
                      std::vector<std::uint8_t>& fwd_scratch,
                      std::vector<std::uint8_t>& bwd_scratch,
                      OpCounter* counter);

void validate_window(int window);

} // namespace detail

} // namespace rectmorph
