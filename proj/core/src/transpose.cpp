#include "rectmorph/transpose.hpp"

namespace rectmorph {

namespace {

void check_tile_side(int n) {
    if (n != 4 && n != 8 && n != 16)
        throw Error(Errc::UnsupportedTile, "tile side must be 4, 8 or 16");
}

} // namespace

void transpose_tile(std::uint8_t* data, std::size_t stride, int n) {
    check_tile_side(n);
    detail::interleave_rounds(data, stride, n);
}

void transpose_tile(std::uint16_t* data, std::size_t stride, int n) {
    check_tile_side(n);
    detail::interleave_rounds(data, stride, n);
}

void transpose_tile(std::uint32_t* data, std::size_t stride, int n) {
    check_tile_side(n);
    detail::interleave_rounds(data, stride, n);
}

Image transpose_image(const Image& src) {
    Image dst(src.height(), src.width());
    const int w = src.width();
    const int h = src.height();
    const int tw = w & ~15; // widest tile-aligned span
    const int th = h & ~15;

    std::uint8_t tile[16 * 16];
    for (int y = 0; y < th; y += 16) {
        for (int x = 0; x < tw; x += 16) {
            for (int r = 0; r < 16; ++r)
                std::copy_n(src.row(y + r) + x, 16, tile + 16 * r);
            detail::interleave_rounds(tile, 16, 16);
            for (int r = 0; r < 16; ++r)
                std::copy_n(tile + 16 * r, 16, dst.row(x + r) + y);
        }
    }
    for (int y = 0; y < h; ++y) {
        const int x0 = y < th ? tw : 0;
        const std::uint8_t* srow = src.row(y);
        for (int x = x0; x < w; ++x)
            dst.at(y, x) = srow[x];
    }
    return dst;
}

} // namespace rectmorph
