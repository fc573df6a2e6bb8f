#include "rectmorph/image.hpp"

#include <algorithm>

namespace rectmorph {

namespace {

std::size_t padded_stride(int width) noexcept {
    // Round up to a multiple of 16 so row starts stay aligned for the
    // vector loops; a zero-width image keeps a zero stride.
    if (width <= 0) return 0;
    return (std::size_t(width) + 15u) & ~std::size_t(15);
}

} // namespace

StructuringElement make_se(int width, int height) {
    if (width < 1 || height < 1)
        throw Error(Errc::ZeroExtent, "structuring element extents must be >= 1");
    if (width % 2 == 0 || height % 2 == 0)
        throw Error(Errc::EvenExtent, "structuring element extents must be odd");
    return {width, height};
}

Image::Image(int width, int height)
    : width_(width), height_(height), stride_(padded_stride(width)) {
    if (width < 0 || height < 0)
        throw Error(Errc::BadArgument, "image dimensions must be non-negative");
    data_.resize(stride_ * std::size_t(height_));
}

Image Image::from_pixels(int width, int height,
                         const std::vector<std::uint8_t>& pixels) {
    if (pixels.size() != std::size_t(width) * std::size_t(height))
        throw Error(Errc::BadArgument, "pixel count does not match dimensions");
    Image img(width, height);
    for (int y = 0; y < height; ++y)
        std::copy_n(pixels.data() + std::size_t(y) * width, width, img.row(y));
    return img;
}

std::vector<std::uint8_t> Image::to_pixels() const {
    std::vector<std::uint8_t> out(std::size_t(width_) * std::size_t(height_));
    for (int y = 0; y < height_; ++y)
        std::copy_n(row(y), width_, out.data() + std::size_t(y) * width_);
    return out;
}

bool equal_pixels(const Image& a, const Image& b) {
    if (a.width() != b.width() || a.height() != b.height()) return false;
    for (int y = 0; y < a.height(); ++y)
        if (!std::equal(a.row(y), a.row(y) + a.width(), b.row(y)))
            return false;
    return true;
}

std::uint8_t sample(const Image& img, int x, int y, const BorderPolicy& border) {
    if (x >= 0 && x < img.width() && y >= 0 && y < img.height())
        return img.at(x, y);
    if (border.mode == BorderPolicy::Mode::Constant)
        return border.value;
    int cx = std::clamp(x, 0, img.width() - 1);
    int cy = std::clamp(y, 0, img.height() - 1);
    return img.at(cx, cy);
}

} // namespace rectmorph
