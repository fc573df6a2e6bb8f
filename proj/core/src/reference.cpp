#include "rectmorph/reference.hpp"

#include <algorithm>

namespace rectmorph {

Image morph_reference(const Image& src, OpKind op,
                      const StructuringElement& se,
                      const BorderPolicy& border) {
    Image dst(src.width(), src.height());
    const int wx = se.wing_x();
    const int wy = se.wing_y();
    const bool erode = op == OpKind::Erode;

    for (int y = 0; y < src.height(); ++y) {
        for (int x = 0; x < src.width(); ++x) {
            std::uint8_t acc = identity_value(op);
            for (int dy = -wy; dy <= wy; ++dy)
                for (int dx = -wx; dx <= wx; ++dx) {
                    std::uint8_t v = sample(src, x + dx, y + dy, border);
                    acc = erode ? std::min(acc, v) : std::max(acc, v);
                }
            dst.at(x, y) = acc;
        }
    }
    return dst;
}

} // namespace rectmorph
