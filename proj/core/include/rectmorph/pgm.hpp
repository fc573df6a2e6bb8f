#pragma once

#include <iosfwd>
#include <string>

#include "rectmorph/image.hpp"

namespace rectmorph {

/// Reads a binary (P5) or ASCII (P2) PGM stream with maxval 255.
/// '#' comments are accepted anywhere in the header and, for P2,
/// between pixel tokens.
Image read_pgm(std::istream& in);

/// Writes a canonical PGM: "P5\n<w> <h>\n255\n" followed by the raw
/// rows, or the P2 equivalent with text lines kept under 70 columns.
/// Never emits comments.
void write_pgm(std::ostream& out, const Image& img, bool binary = true);

/// File wrappers; failures mention the path.
Image load_pgm(const std::string& path);
void store_pgm(const std::string& path, const Image& img, bool binary = true);

} // namespace rectmorph
