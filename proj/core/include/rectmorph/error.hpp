#pragma once

#include <stdexcept>
#include <string>

namespace rectmorph {

/// Failure categories surfaced by the library. Each carries its own
/// human-readable message; the CLI keys its diagnostics off these.
enum class Errc {
    ZeroExtent,        // structuring element / window extent < 1
    EvenExtent,        // structuring element / window extent is even
    UnsupportedTile,   // tile side outside {4, 8, 16}
    BadMagic,          // not a P5/P2 PGM stream
    BadHeader,         // malformed PGM header or pixel token
    UnsupportedMaxval, // PGM maxval != 255
    TruncatedData,     // PGM pixel payload shorter than width*height
    BadConfig,         // dispatch config file rejected
    InsufficientReps,  // calibration repetition count < 3
    IoError,           // file could not be read or written
    BadArgument,       // other contract violation
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace rectmorph
