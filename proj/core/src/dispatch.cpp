#include "rectmorph/dispatch.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <string_view>

#include "rectmorph/sliding_extrema.hpp"
#include "rectmorph/timing.hpp"

namespace rectmorph {

PassAlgorithm resolve(PassAlgorithm algo, int window, Axis axis,
                      const DispatchConfig& cfg) {
    if (algo != PassAlgorithm::Auto) return algo;
    const int threshold =
        axis == Axis::Horizontal ? cfg.threshold_h : cfg.threshold_v;
    return window <= threshold ? PassAlgorithm::Linear : PassAlgorithm::VanHerk;
}

namespace {

Image run_morph(const Image& src, OpKind op, const StructuringElement& se,
                const BorderPolicy& border, const DispatchConfig& cfg) {
    const PassAlgorithm h =
        resolve(PassAlgorithm::Auto, se.width, Axis::Horizontal, cfg);
    const PassAlgorithm v =
        resolve(PassAlgorithm::Auto, se.height, Axis::Vertical, cfg);
    const VerticalStrategy strategy = v == PassAlgorithm::Linear
                                          ? VerticalStrategy::Direct
                                          : VerticalStrategy::ViaTranspose;
    return morph_separable(src, op, se, border, h, v, strategy);
}

} // namespace

Image erode(const Image& src, const StructuringElement& se,
            const BorderPolicy& border, const DispatchConfig& cfg) {
    return run_morph(src, OpKind::Erode, se, border, cfg);
}

Image dilate(const Image& src, const StructuringElement& se,
             const BorderPolicy& border, const DispatchConfig& cfg) {
    return run_morph(src, OpKind::Dilate, se, border, cfg);
}

Image opening(const Image& src, const StructuringElement& se,
              const BorderPolicy& border, const DispatchConfig& cfg) {
    return dilate(erode(src, se, border, cfg), se, border, cfg);
}

Image closing(const Image& src, const StructuringElement& se,
              const BorderPolicy& border, const DispatchConfig& cfg) {
    return erode(dilate(src, se, border, cfg), se, border, cfg);
}

Image gradient(const Image& src, const StructuringElement& se,
               const BorderPolicy& border, const DispatchConfig& cfg) {
    Image hi = dilate(src, se, border, cfg);
    Image lo = erode(src, se, border, cfg);
    Image out(src.width(), src.height());
    for (int y = 0; y < src.height(); ++y) {
        const std::uint8_t* a = hi.row(y);
        const std::uint8_t* b = lo.row(y);
        std::uint8_t* o = out.row(y);
        for (int x = 0; x < src.width(); ++x)
            o[x] = std::uint8_t(a[x] - b[x]);
    }
    return out;
}

std::string format_config(const DispatchConfig& cfg) {
    std::ostringstream out;
    out << "threshold_h=" << cfg.threshold_h << '\n'
        << "threshold_v=" << cfg.threshold_v << '\n'
        << "source="
        << (cfg.source == ThresholdSource::Paper ? "paper" : "calibrated")
        << '\n';
    return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() &&
           (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void config_fail(int line, const std::string& what) {
    throw Error(Errc::BadConfig,
                "config line " + std::to_string(line) + ": " + what);
}

int parse_threshold(std::string_view value, int line) {
    int parsed = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        config_fail(line, "expected an integer, got '" + std::string(value) + "'");
    if (parsed < 1 || parsed % 2 == 0)
        config_fail(line, "threshold must be a positive odd integer");
    return parsed;
}

} // namespace

DispatchConfig parse_config(const std::string& text) {
    DispatchConfig cfg;
    bool seen_h = false, seen_v = false, seen_source = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            config_fail(line_no, "expected key=value");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));

        if (key == "threshold_h") {
            if (seen_h) config_fail(line_no, "duplicate key 'threshold_h'");
            cfg.threshold_h = parse_threshold(value, line_no);
            seen_h = true;
        } else if (key == "threshold_v") {
            if (seen_v) config_fail(line_no, "duplicate key 'threshold_v'");
            cfg.threshold_v = parse_threshold(value, line_no);
            seen_v = true;
        } else if (key == "source") {
            if (seen_source) config_fail(line_no, "duplicate key 'source'");
            if (value == "paper")
                cfg.source = ThresholdSource::Paper;
            else if (value == "calibrated")
                cfg.source = ThresholdSource::Calibrated;
            else
                config_fail(line_no, "source must be 'paper' or 'calibrated'");
            seen_source = true;
        } else {
            config_fail(line_no, "unknown key '" + std::string(key) + "'");
        }
    }

    if (!seen_h || !seen_v || !seen_source)
        throw Error(Errc::BadConfig,
                    "config must set threshold_h, threshold_v and source");
    return cfg;
}

DispatchConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::IoError, "cannot open config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

void save_config(const std::string& path, const DispatchConfig& cfg) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
    out << format_config(cfg);
    if (!out)
        throw Error(Errc::IoError, "failed writing config '" + path + "'");
}

DispatchConfig calibrate(int width, int height,
                         const std::vector<int>& windows, int reps) {
    if (width < 1 || height < 1)
        throw Error(Errc::BadArgument, "calibration image extents must be >= 1");
    if (reps < 3)
        throw Error(Errc::InsufficientReps,
                    "calibration needs at least 3 repetitions");
    if (windows.empty())
        throw Error(Errc::BadArgument, "calibration needs at least one window");
    for (std::size_t i = 0; i < windows.size(); ++i) {
        detail::validate_window(windows[i]);
        if (i > 0 && windows[i] <= windows[i - 1])
            throw Error(Errc::BadArgument,
                        "calibration windows must be strictly ascending");
    }

    // Fixed seed: repeated calibrations time identical pixel data.
    Image img(width, height);
    std::mt19937 rng(0x7261746Du);
    std::uniform_int_distribution<int> dist(0, 255);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            img.at(x, y) = std::uint8_t(dist(rng));

    const BorderPolicy border = BorderPolicy::replicate();
    int best_h = 1, best_v = 1;

    for (int w : windows) {
        const auto h_linear = timing::median_ns(
            [&] {
                Image r = horizontal_pass(img, OpKind::Erode, w, border,
                                          PassAlgorithm::Linear);
                timing::do_not_optimize(r.row(0));
            },
            reps);
        const auto h_vanherk = timing::median_ns(
            [&] {
                Image r = horizontal_pass(img, OpKind::Erode, w, border,
                                          PassAlgorithm::VanHerk);
                timing::do_not_optimize(r.row(0));
            },
            reps);
        if (h_linear <= h_vanherk)
            best_h = std::max(best_h, w);

        const auto v_direct = timing::median_ns(
            [&] {
                Image r = vertical_pass_direct(img, OpKind::Erode, w, border);
                timing::do_not_optimize(r.row(0));
            },
            reps);
        const auto v_transposed = timing::median_ns(
            [&] {
                Image r = vertical_pass_via_transpose(img, OpKind::Erode, w,
                                                      border,
                                                      PassAlgorithm::VanHerk);
                timing::do_not_optimize(r.row(0));
            },
            reps);
        if (v_direct <= v_transposed)
            best_v = std::max(best_v, w);
    }

    DispatchConfig cfg;
    cfg.threshold_h = best_h;
    cfg.threshold_v = best_v;
    cfg.source = ThresholdSource::Calibrated;
    return cfg;
}

} // namespace rectmorph
