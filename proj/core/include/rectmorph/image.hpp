#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rectmorph/error.hpp"

namespace rectmorph {

/// Grayscale operation selector. Erosion takes the window minimum,
/// dilation the window maximum.
enum class OpKind { Erode, Dilate };

/// Neutral element of the window reduction: min over any set that
/// includes 255 ignores it, likewise 0 for max.
inline std::uint8_t identity_value(OpKind op) noexcept {
    return op == OpKind::Erode ? 255 : 0;
}

/// Out-of-bounds handling for samples past the image border.
struct BorderPolicy {
    enum class Mode { Replicate, Constant };

    Mode mode = Mode::Replicate;
    std::uint8_t value = 0; // used only when mode == Constant

    static BorderPolicy replicate() { return {Mode::Replicate, 0}; }
    static BorderPolicy constant(std::uint8_t v) { return {Mode::Constant, v}; }
};

/// Flat rectangular structuring element, odd extents only, anchored
/// at the geometric center.
struct StructuringElement {
    int width = 1;
    int height = 1;

    int wing_x() const noexcept { return width / 2; }
    int wing_y() const noexcept { return height / 2; }
};

/// Validating factory: extents must be odd and >= 1.
StructuringElement make_se(int width, int height);

/// 8-bit single-channel image with rows padded so the stride is a
/// multiple of 16 pixels. Padding bytes are never read by any
/// algorithm in this library and carry no defined value.
class Image {
public:
    Image() = default;
    Image(int width, int height);

    static Image from_pixels(int width, int height,
                             const std::vector<std::uint8_t>& pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t stride() const noexcept { return stride_; }
    bool empty() const noexcept { return width_ == 0 || height_ == 0; }

    std::uint8_t* row(int y) noexcept { return data_.data() + std::size_t(y) * stride_; }
    const std::uint8_t* row(int y) const noexcept { return data_.data() + std::size_t(y) * stride_; }

    std::uint8_t& at(int x, int y) noexcept { return row(y)[x]; }
    std::uint8_t at(int x, int y) const noexcept { return row(y)[x]; }

    /// Visible pixels in row-major order, padding stripped.
    std::vector<std::uint8_t> to_pixels() const;

private:
    int width_ = 0;
    int height_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint8_t> data_;
};

/// True when the visible pixels match; stride and padding are ignored.
bool equal_pixels(const Image& a, const Image& b);

/// Border-aware pixel fetch. Coordinates may lie outside the image.
std::uint8_t sample(const Image& img, int x, int y, const BorderPolicy& border);

} // namespace rectmorph
