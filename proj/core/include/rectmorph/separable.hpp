#pragma once

#include "rectmorph/image.hpp"

namespace rectmorph {

/// Which 1-D kernel a pass runs. Auto defers the choice to the
/// dispatch thresholds for the axis being processed.
enum class PassAlgorithm { Auto, Linear, VanHerk };

/// How the column pass is realized: directly on rows with two-row
/// result sharing, or by transposing, running a row pass, and
/// transposing back. Both produce byte-identical results.
enum class VerticalStrategy { Direct, ViaTranspose };

enum class Axis { Horizontal, Vertical };

/// Runs the 1-D window kernel over every row, reusing scratch buffers
/// across rows.
Image horizontal_pass(const Image& src, OpKind op, int window,
                      const BorderPolicy& border,
                      PassAlgorithm algo = PassAlgorithm::Auto);

/// Column pass without transposition. Rows are consumed through a
/// pointer table that resolves border rows up front, so the pixel
/// loops never branch on coordinates. Output rows are produced in
/// pairs: the rows common to both windows are reduced once, then each
/// output adds its one private row.
Image vertical_pass_direct(const Image& src, OpKind op, int window,
                           const BorderPolicy& border);

/// Column pass as transpose, row pass, transpose back. An Auto
/// algorithm is resolved against the vertical thresholds before the
/// row pass runs.
Image vertical_pass_via_transpose(const Image& src, OpKind op, int window,
                                  const BorderPolicy& border,
                                  PassAlgorithm algo = PassAlgorithm::Auto);

/// Full rectangular erosion or dilation as a vertical pass followed by
/// a horizontal pass. Constant borders whose value is not the identity
/// of the operation are routed to the brute-force path instead of
/// being decomposed. `v_algo` is the kernel of a ViaTranspose column
/// pass; the Direct strategy has a fixed kernel and ignores it.
Image morph_separable(const Image& src, OpKind op,
                      const StructuringElement& se,
                      const BorderPolicy& border, PassAlgorithm h_algo,
                      PassAlgorithm v_algo, VerticalStrategy v_strategy);

/// Same, with the column strategy derived from the resolved vertical
/// kernel: Direct when it resolves Linear, ViaTranspose otherwise.
Image morph_separable(const Image& src, OpKind op,
                      const StructuringElement& se,
                      const BorderPolicy& border,
                      PassAlgorithm h_algo = PassAlgorithm::Auto,
                      PassAlgorithm v_algo = PassAlgorithm::Auto);

} // namespace rectmorph
