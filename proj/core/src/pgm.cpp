#include "rectmorph/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rectmorph {

namespace {

constexpr long kMaxExtent = 1 << 20;

bool is_pgm_space(int c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
           c == '\f';
}

// Consumes whitespace and '#'-to-end-of-line comments. False at EOF.
bool skip_separators(std::istream& in) {
    for (;;) {
        const int c = in.peek();
        if (c == std::char_traits<char>::eof()) return false;
        if (c == '#') {
            int d = in.get();
            while (d != std::char_traits<char>::eof() && d != '\n')
                d = in.get();
            continue;
        }
        if (is_pgm_space(c)) {
            in.get();
            continue;
        }
        return true;
    }
}

long read_number(std::istream& in, const char* what, Errc eof_errc) {
    if (!skip_separators(in))
        throw Error(eof_errc, std::string("unexpected end of file reading ") + what);
    if (!std::isdigit(static_cast<unsigned char>(in.peek())))
        throw Error(Errc::BadHeader, std::string("expected a number for ") + what);
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(in.peek()))) {
        value = value * 10 + (in.get() - '0');
        if (value > 100 * kMaxExtent)
            throw Error(Errc::BadHeader, std::string(what) + " out of range");
    }
    return value;
}

} // namespace

Image read_pgm(std::istream& in) {
    const int m0 = in.get();
    const int m1 = in.get();
    if (m0 != 'P' || (m1 != '5' && m1 != '2'))
        throw Error(Errc::BadMagic, "not a P5/P2 PGM stream");
    const bool binary = m1 == '5';

    const long width = read_number(in, "width", Errc::BadHeader);
    const long height = read_number(in, "height", Errc::BadHeader);
    if (width < 1 || width > kMaxExtent || height < 1 || height > kMaxExtent)
        throw Error(Errc::BadHeader, "image dimensions out of range");
    const long maxval = read_number(in, "maxval", Errc::BadHeader);
    if (maxval != 255)
        throw Error(Errc::UnsupportedMaxval, "only maxval 255 is supported");

    Image img(static_cast<int>(width), static_cast<int>(height));
    if (binary) {
        const int sep = in.get();
        if (!is_pgm_space(sep))
            throw Error(Errc::BadHeader, "expected whitespace after maxval");
        for (long y = 0; y < height; ++y) {
            in.read(reinterpret_cast<char*>(img.row(int(y))), width);
            if (in.gcount() != width)
                throw Error(Errc::TruncatedData, "pixel data ends early");
        }
    } else {
        for (long y = 0; y < height; ++y)
            for (long x = 0; x < width; ++x) {
                const long v = read_number(in, "pixel", Errc::TruncatedData);
                if (v > 255)
                    throw Error(Errc::BadHeader, "pixel value exceeds maxval");
                img.at(int(x), int(y)) = std::uint8_t(v);
            }
    }
    return img;
}

void write_pgm(std::ostream& out, const Image& img, bool binary) {
    if (img.empty())
        throw Error(Errc::BadArgument, "cannot write an empty image");

    out << (binary ? "P5" : "P2") << '\n'
        << img.width() << ' ' << img.height() << "\n255\n";

    if (binary) {
        for (int y = 0; y < img.height(); ++y)
            out.write(reinterpret_cast<const char*>(img.row(y)), img.width());
        return;
    }

    // one image row per text line
    for (int y = 0; y < img.height(); ++y) {
        const std::uint8_t* row = img.row(y);
        for (int x = 0; x < img.width(); ++x) {
            if (x != 0) out << ' ';
            out << int(row[x]);
        }
        out << '\n';
    }
}

Image load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::IoError, "cannot open '" + path + "'");
    try {
        return read_pgm(in);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

void store_pgm(const std::string& path, const Image& img, bool binary) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
    write_pgm(out, img, binary);
    out.flush();
    if (!out)
        throw Error(Errc::IoError, "failed writing '" + path + "'");
}

} // namespace rectmorph
