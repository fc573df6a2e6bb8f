#include "rectmorph/sliding_extrema.hpp"

#include <algorithm>

namespace rectmorph {

namespace detail {

void validate_window(int window) {
    if (window < 1)
        throw Error(Errc::ZeroExtent, "window extent must be >= 1");
    if (window % 2 == 0)
        throw Error(Errc::EvenExtent, "window extent must be odd");
}

void pad_row(const std::uint8_t* in, std::size_t n, int wing,
             const BorderPolicy& border, std::uint8_t* padded) {
    const bool constant = border.mode == BorderPolicy::Mode::Constant;
    const std::uint8_t left = constant ? border.value : in[0];
    const std::uint8_t right = constant ? border.value : in[n - 1];
    std::fill_n(padded, wing, left);
    std::copy_n(in, n, padded + wing);
    std::fill_n(padded + wing + n, wing, right);
}

namespace {

template <class Op>
void linear_impl(const std::uint8_t* padded, std::size_t n, int window,
                 std::uint8_t* out) {
    std::copy_n(padded, n, out);
    for (int s = 1; s < window; ++s) {
        const std::uint8_t* shifted = padded + s;
        for (std::size_t i = 0; i < n; ++i)
            out[i] = Op::apply(out[i], shifted[i]);
    }
}

// Forward and backward running extrema of one block, accumulators in
// registers so the dependent chain is one min/max per element.
template <class Op>
void scan_block(const std::uint8_t* p, std::size_t m, std::uint8_t* f,
                std::uint8_t* b) {
    std::uint8_t acc = p[0];
    f[0] = acc;
    for (std::size_t j = 1; j < m; ++j) {
        acc = Op::apply(acc, p[j]);
        f[j] = acc;
    }
    acc = p[m - 1];
    b[m - 1] = acc;
    for (std::size_t j = m - 1; j > 0; --j) {
        acc = Op::apply(acc, p[j - 1]);
        b[j - 1] = acc;
    }
}

template <class Op>
std::uint64_t van_herk_impl(const std::uint8_t* padded, std::size_t n,
                            int window, std::uint8_t* out,
                            std::vector<std::uint8_t>& fwd,
                            std::vector<std::uint8_t>& bwd) {
    const std::size_t w = std::size_t(window);
    const std::size_t len = n + w - 1;
    fwd.resize(len);
    bwd.resize(len);

    const std::size_t blocks = (len + w - 1) / w;
    const std::size_t full = len / w;

    // Block scans are mutually independent but serial inside, so large
    // windows would otherwise run at chain latency. Driving four blocks
    // (eight chains with the backward scans) in lockstep keeps the
    // element cost flat in w. Work per element is unchanged.
    std::size_t blk = 0;
    for (; blk + 4 <= full; blk += 4) {
        const std::uint8_t* p0 = padded + (blk + 0) * w;
        const std::uint8_t* p1 = padded + (blk + 1) * w;
        const std::uint8_t* p2 = padded + (blk + 2) * w;
        const std::uint8_t* p3 = padded + (blk + 3) * w;
        std::uint8_t* f0 = fwd.data() + (blk + 0) * w;
        std::uint8_t* f1 = fwd.data() + (blk + 1) * w;
        std::uint8_t* f2 = fwd.data() + (blk + 2) * w;
        std::uint8_t* f3 = fwd.data() + (blk + 3) * w;
        std::uint8_t* b0 = bwd.data() + (blk + 0) * w;
        std::uint8_t* b1 = bwd.data() + (blk + 1) * w;
        std::uint8_t* b2 = bwd.data() + (blk + 2) * w;
        std::uint8_t* b3 = bwd.data() + (blk + 3) * w;

        std::uint8_t fa0 = p0[0], fa1 = p1[0], fa2 = p2[0], fa3 = p3[0];
        std::uint8_t ba0 = p0[w - 1], ba1 = p1[w - 1];
        std::uint8_t ba2 = p2[w - 1], ba3 = p3[w - 1];
        f0[0] = fa0;
        f1[0] = fa1;
        f2[0] = fa2;
        f3[0] = fa3;
        b0[w - 1] = ba0;
        b1[w - 1] = ba1;
        b2[w - 1] = ba2;
        b3[w - 1] = ba3;
        for (std::size_t j = 1; j < w; ++j) {
            const std::size_t k = w - 1 - j;
            fa0 = Op::apply(fa0, p0[j]);
            f0[j] = fa0;
            fa1 = Op::apply(fa1, p1[j]);
            f1[j] = fa1;
            fa2 = Op::apply(fa2, p2[j]);
            f2[j] = fa2;
            fa3 = Op::apply(fa3, p3[j]);
            f3[j] = fa3;
            ba0 = Op::apply(ba0, p0[k]);
            b0[k] = ba0;
            ba1 = Op::apply(ba1, p1[k]);
            b1[k] = ba1;
            ba2 = Op::apply(ba2, p2[k]);
            b2[k] = ba2;
            ba3 = Op::apply(ba3, p3[k]);
            b3[k] = ba3;
        }
    }
    for (; blk < blocks; ++blk) {
        const std::size_t s = blk * w;
        const std::size_t m = std::min(w, len - s);
        scan_block<Op>(padded + s, m, fwd.data() + s, bwd.data() + s);
    }

    for (std::size_t i = 0; i < n; ++i)
        out[i] = Op::apply(bwd[i], fwd[i + w - 1]);

    // each sweep pays len minus one start per block; the merge pays n
    return 2 * (len - blocks) + n;
}

} // namespace

void linear_windows(const std::uint8_t* padded, std::size_t n, int window,
                    OpKind op, std::uint8_t* out, OpCounter* counter) {
    if (op == OpKind::Erode)
        linear_impl<MinOp>(padded, n, window, out);
    else
        linear_impl<MaxOp>(padded, n, window, out);
    if (counter)
        counter->comparisons += std::uint64_t(window - 1) * n;
}

void van_herk_windows(const std::uint8_t* padded, std::size_t n, int window,
                      OpKind op, std::uint8_t* out,
                      std::vector<std::uint8_t>& fwd_scratch,
                      std::vector<std::uint8_t>& bwd_scratch,
                      OpCounter* counter) {
    const std::uint64_t cost =
        op == OpKind::Erode
            ? van_herk_impl<MinOp>(padded, n, window, out, fwd_scratch,
                                   bwd_scratch)
            : van_herk_impl<MaxOp>(padded, n, window, out, fwd_scratch,
                                   bwd_scratch);
    if (counter)
        counter->comparisons += cost;
}

} // namespace detail

namespace {

// Shared prologue of the two public entry points. Returns true when the
// output is already complete (empty signal or trivial window).
bool run_prologue(const std::uint8_t* in, std::size_t n, int window,
                  std::uint8_t* out, OpCounter* counter) {
    detail::validate_window(window);
    if (counter) counter->reset();
    if (n == 0) return true;
    if (window == 1) {
        std::copy_n(in, n, out);
        return true;
    }
    return false;
}

} // namespace

void linear_window_1d(const std::uint8_t* in, std::size_t n, int window,
                      OpKind op, const BorderPolicy& border, std::uint8_t* out,
                      OpCounter* counter) {
    if (run_prologue(in, n, window, out, counter)) return;
    std::vector<std::uint8_t> padded(n + std::size_t(window) - 1);
    detail::pad_row(in, n, window / 2, border, padded.data());
    detail::linear_windows(padded.data(), n, window, op, out, counter);
}

void van_herk_1d(const std::uint8_t* in, std::size_t n, int window,
                 OpKind op, const BorderPolicy& border, std::uint8_t* out,
                 OpCounter* counter) {
    if (run_prologue(in, n, window, out, counter)) return;
    std::vector<std::uint8_t> padded(n + std::size_t(window) - 1);
    detail::pad_row(in, n, window / 2, border, padded.data());
    std::vector<std::uint8_t> fwd, bwd;
    detail::van_herk_windows(padded.data(), n, window, op, out, fwd, bwd,
                             counter);
}

std::vector<std::uint8_t> linear_window_1d(const std::vector<std::uint8_t>& in,
                                           int window, OpKind op,
                                           const BorderPolicy& border,
                                           OpCounter* counter) {
    std::vector<std::uint8_t> out(in.size());
    linear_window_1d(in.data(), in.size(), window, op, border, out.data(),
                     counter);
    return out;
}

std::vector<std::uint8_t> van_herk_1d(const std::vector<std::uint8_t>& in,
                                      int window, OpKind op,
                                      const BorderPolicy& border,
                                      OpCounter* counter) {
    std::vector<std::uint8_t> out(in.size());
    van_herk_1d(in.data(), in.size(), window, op, border, out.data(), counter);
    return out;
}

} // namespace rectmorph
