#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "rectmorph/image.hpp"

namespace rectmorph {

namespace detail {

/// In-place transpose of an n x n tile (n a power of two) as log2(n)
/// rounds of block interleaves. Round k swaps, within every aligned
/// pair of row groups, the length-k run at column offset c+k in the
/// low row with the run at offset c in the high row. After all rounds
/// every element has moved from (r, c) to (c, r) without an auxiliary
/// buffer. `stride` is in elements.
template <class T>
void interleave_rounds(T* base, std::size_t stride, int n) {
    for (int bit = 1; bit < n; bit <<= 1) {
        for (int r = 0; r < n; ++r) {
            if (r & bit) continue;
            T* lo = base + std::size_t(r) * stride;
            T* hi = base + std::size_t(r | bit) * stride;
            for (int c = 0; c < n; c += 2 * bit)
                std::swap_ranges(lo + c + bit, lo + c + 2 * bit, hi + c);
        }
    }
}

} // namespace detail

/// In-place square tile transpose for the element widths the image
/// pipeline uses. The tile side must be 4, 8 or 16.
void transpose_tile(std::uint8_t* data, std::size_t stride, int n);
void transpose_tile(std::uint16_t* data, std::size_t stride, int n);
void transpose_tile(std::uint32_t* data, std::size_t stride, int n);

/// Out-of-place whole-image transpose: 16 x 16 tiles through the
/// interleave kernel for the aligned interior, scalar loops for the
/// ragged right and bottom edges.
Image transpose_image(const Image& src);

} // namespace rectmorph
