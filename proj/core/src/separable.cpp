#include "rectmorph/separable.hpp"

#include <algorithm>
#include <vector>

#include "rectmorph/dispatch.hpp"
#include "rectmorph/reference.hpp"
#include "rectmorph/sliding_extrema.hpp"
#include "rectmorph/transpose.hpp"

namespace rectmorph {

namespace {

Image copy_of(const Image& src) {
    Image dst(src.width(), src.height());
    for (int y = 0; y < src.height(); ++y)
        std::copy_n(src.row(y), src.width(), dst.row(y));
    return dst;
}

template <class Op>
void accumulate_row(std::uint8_t* acc, const std::uint8_t* row, int n) {
    for (int i = 0; i < n; ++i)
        acc[i] = Op::apply(acc[i], row[i]);
}

template <class Op>
void merge_rows(std::uint8_t* out, const std::uint8_t* a,
                const std::uint8_t* b, int n) {
    for (int i = 0; i < n; ++i)
        out[i] = Op::apply(a[i], b[i]);
}

template <class Op>
void vertical_direct_impl(const Image& src, Image& dst, int window,
                          const std::uint8_t* const* vrows) {
    const int w = src.width();
    const int h = src.height();
    const int wing = window / 2;
    std::vector<std::uint8_t> acc(static_cast<std::size_t>(w));

    int y = 0;
    for (; y + 1 < h; y += 2) {
        // rows y-wing+1 .. y+wing sit in both windows; reduce them once
        std::copy_n(vrows[y - wing + 1], w, acc.data());
        for (int r = y - wing + 2; r <= y + wing; ++r)
            accumulate_row<Op>(acc.data(), vrows[r], w);
        merge_rows<Op>(dst.row(y), acc.data(), vrows[y - wing], w);
        merge_rows<Op>(dst.row(y + 1), acc.data(), vrows[y + wing + 1], w);
    }
    if (y < h) {
        std::copy_n(vrows[y - wing], w, acc.data());
        for (int r = y - wing + 1; r <= y + wing; ++r)
            accumulate_row<Op>(acc.data(), vrows[r], w);
        std::copy_n(acc.data(), w, dst.row(y));
    }
}

} // namespace

Image horizontal_pass(const Image& src, OpKind op, int window,
                      const BorderPolicy& border, PassAlgorithm algo) {
    detail::validate_window(window);
    algo = resolve(algo, window, Axis::Horizontal);
    if (src.empty() || window == 1) return copy_of(src);

    Image dst(src.width(), src.height());
    const std::size_t n = std::size_t(src.width());
    std::vector<std::uint8_t> padded(n + std::size_t(window) - 1);
    std::vector<std::uint8_t> fwd, bwd;

    for (int y = 0; y < src.height(); ++y) {
        detail::pad_row(src.row(y), n, window / 2, border, padded.data());
        if (algo == PassAlgorithm::Linear)
            detail::linear_windows(padded.data(), n, window, op, dst.row(y),
                                   nullptr);
        else
            detail::van_herk_windows(padded.data(), n, window, op, dst.row(y),
                                     fwd, bwd, nullptr);
    }
    return dst;
}

Image vertical_pass_direct(const Image& src, OpKind op, int window,
                           const BorderPolicy& border) {
    detail::validate_window(window);
    if (src.empty() || window == 1) return copy_of(src);

    const int h = src.height();
    const int wing = window / 2;

    std::vector<std::uint8_t> border_row;
    if (border.mode == BorderPolicy::Mode::Constant)
        border_row.assign(std::size_t(src.width()), border.value);

    // Pointer per virtual row index in [-wing, h+wing]; out-of-range
    // rows resolve to the clamped edge row or the constant row.
    std::vector<const std::uint8_t*> table(std::size_t(h) + 2 * wing + 1);
    for (int v = -wing; v <= h + wing; ++v) {
        if (v >= 0 && v < h)
            table[v + wing] = src.row(v);
        else if (border.mode == BorderPolicy::Mode::Constant)
            table[v + wing] = border_row.data();
        else
            table[v + wing] = src.row(std::clamp(v, 0, h - 1));
    }
    const std::uint8_t* const* vrows = table.data() + wing;

    Image dst(src.width(), src.height());
    if (op == OpKind::Erode)
        vertical_direct_impl<detail::MinOp>(src, dst, window, vrows);
    else
        vertical_direct_impl<detail::MaxOp>(src, dst, window, vrows);
    return dst;
}

Image vertical_pass_via_transpose(const Image& src, OpKind op, int window,
                                  const BorderPolicy& border,
                                  PassAlgorithm algo) {
    detail::validate_window(window);
    algo = resolve(algo, window, Axis::Vertical);
    if (src.empty() || window == 1) return copy_of(src);

    Image flipped = transpose_image(src);
    Image processed = horizontal_pass(flipped, op, window, border, algo);
    return transpose_image(processed);
}

Image morph_separable(const Image& src, OpKind op,
                      const StructuringElement& se,
                      const BorderPolicy& border, PassAlgorithm h_algo,
                      PassAlgorithm v_algo, VerticalStrategy v_strategy) {
    detail::validate_window(se.width);
    detail::validate_window(se.height);

    if (border.mode == BorderPolicy::Mode::Constant &&
        border.value != identity_value(op))
        return morph_reference(src, op, se, border);

    Image tall = v_strategy == VerticalStrategy::Direct
                     ? vertical_pass_direct(src, op, se.height, border)
                     : vertical_pass_via_transpose(src, op, se.height, border,
                                                   v_algo);
    return horizontal_pass(tall, op, se.width, border, h_algo);
}

Image morph_separable(const Image& src, OpKind op,
                      const StructuringElement& se,
                      const BorderPolicy& border, PassAlgorithm h_algo,
                      PassAlgorithm v_algo) {
    const PassAlgorithm resolved = resolve(v_algo, se.height, Axis::Vertical);
    const VerticalStrategy strategy = resolved == PassAlgorithm::Linear
                                          ? VerticalStrategy::Direct
                                          : VerticalStrategy::ViaTranspose;
    return morph_separable(src, op, se, border, h_algo, resolved, strategy);
}

} // namespace rectmorph
