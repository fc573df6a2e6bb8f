#pragma once

#include "rectmorph/image.hpp"

namespace rectmorph {

/// Brute-force morphology: every output pixel scans its full
/// width x height neighborhood. Quadratic in the window extents and
/// deliberately free of shortcuts; the fast paths are tested against it.
Image morph_reference(const Image& src, OpKind op,
                      const StructuringElement& se,
                      const BorderPolicy& border);

} // namespace rectmorph
