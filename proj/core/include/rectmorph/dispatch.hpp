#pragma once

#include <string>
#include <vector>

#include "rectmorph/image.hpp"
#include "rectmorph/separable.hpp"

namespace rectmorph {

enum class ThresholdSource { Paper, Calibrated };

/// Per-axis crossover windows between the linear and the van Herk
/// kernel. The defaults are the published crossovers; calibrate()
/// replaces them with values measured on the host.
struct DispatchConfig {
    int threshold_h = 69;
    int threshold_v = 59;
    ThresholdSource source = ThresholdSource::Paper;
};

/// Explicit choices pass through unchanged; Auto becomes Linear when
/// the window does not exceed the axis threshold (inclusive) and
/// van Herk above it.
PassAlgorithm resolve(PassAlgorithm algo, int window, Axis axis,
                      const DispatchConfig& cfg = {});

/// Rectangle erosion/dilation with both passes resolved through the
/// config: the column pass runs direct when its window resolves to
/// the linear kernel and through the transpose otherwise.
Image erode(const Image& src, const StructuringElement& se,
            const BorderPolicy& border, const DispatchConfig& cfg = {});
Image dilate(const Image& src, const StructuringElement& se,
             const BorderPolicy& border, const DispatchConfig& cfg = {});

/// Compound operators built from the two primitives.
Image opening(const Image& src, const StructuringElement& se,
              const BorderPolicy& border, const DispatchConfig& cfg = {});
Image closing(const Image& src, const StructuringElement& se,
              const BorderPolicy& border, const DispatchConfig& cfg = {});
/// dilate(src) - erode(src), never negative since max >= min over the
/// same window.
Image gradient(const Image& src, const StructuringElement& se,
               const BorderPolicy& border, const DispatchConfig& cfg = {});

/// Canonical three-line text form:
///   threshold_h=<int>
///   threshold_v=<int>
///   source=paper|calibrated
std::string format_config(const DispatchConfig& cfg);

/// Strict inverse of format_config. Blank lines and lines starting
/// with '#' are ignored; unknown keys, duplicates, malformed values
/// and missing keys are all rejected.
DispatchConfig parse_config(const std::string& text);

DispatchConfig load_config(const std::string& path);
void save_config(const std::string& path, const DispatchConfig& cfg);

/// Measures both kernels per axis on a deterministic random image and
/// returns thresholds set to the largest swept window where the linear
/// side still wins (1 when it never does). Requires reps >= 3 and an
/// ascending list of odd windows. Single-threaded by contract: run it
/// without concurrent load or the medians mean nothing.
DispatchConfig calibrate(int width, int height,
                         const std::vector<int>& windows, int reps);

} // namespace rectmorph
