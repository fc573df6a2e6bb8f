// Command line front end: apply morphology to PGM files, sweep the
// linear/van-Herk crossover into a CSV, calibrate dispatch thresholds.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rectmorph/dispatch.hpp"
#include "rectmorph/pgm.hpp"
#include "rectmorph/separable.hpp"
#include "rectmorph/timing.hpp"
#include "rectmorph/transpose.hpp"

namespace rm = rectmorph;

namespace {

int parse_int_strict(std::string_view text, const char* what) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw rm::Error(rm::Errc::BadArgument,
                        std::string(what) + ": expected an integer, got '" +
                            std::string(text) + "'");
    return value;
}

rm::StructuringElement parse_se(const std::string& text) {
    const std::size_t x = text.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= text.size())
        throw rm::Error(rm::Errc::BadArgument,
                        "structuring element must be WxH, e.g. 7x5");
    const int w = parse_int_strict(std::string_view(text).substr(0, x),
                                   "structuring element width");
    const int h = parse_int_strict(std::string_view(text).substr(x + 1),
                                   "structuring element height");
    return rm::make_se(w, h);
}

rm::BorderPolicy parse_border(const std::string& text) {
    if (text == "replicate") return rm::BorderPolicy::replicate();
    constexpr std::string_view prefix = "constant:";
    if (text.rfind(prefix, 0) == 0) {
        const int v = parse_int_strict(
            std::string_view(text).substr(prefix.size()), "border value");
        if (v < 0 || v > 255)
            throw rm::Error(rm::Errc::BadArgument,
                            "border value must lie in 0..255");
        return rm::BorderPolicy::constant(std::uint8_t(v));
    }
    throw rm::Error(rm::Errc::BadArgument,
                    "border must be 'replicate' or 'constant:V'");
}

// MIN..MAX[:STEP], odd endpoints, even step >= 2 (default 2)
std::vector<int> parse_windows(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw rm::Error(rm::Errc::BadArgument,
                        "window range must be MIN..MAX[:STEP]");
    std::string_view rest = std::string_view(text).substr(dots + 2);
    int step = 2;
    const std::size_t colon = rest.find(':');
    if (colon != std::string_view::npos) {
        step = parse_int_strict(rest.substr(colon + 1), "window step");
        rest = rest.substr(0, colon);
    }
    const int lo = parse_int_strict(std::string_view(text).substr(0, dots),
                                    "window minimum");
    const int hi = parse_int_strict(rest, "window maximum");

    if (lo < 1 || lo % 2 == 0 || hi % 2 == 0)
        throw rm::Error(rm::Errc::BadArgument,
                        "window endpoints must be odd and >= 1");
    if (lo > hi)
        throw rm::Error(rm::Errc::BadArgument,
                        "window minimum exceeds maximum");
    if (step < 2 || step % 2 != 0)
        throw rm::Error(rm::Errc::BadArgument,
                        "window step must be even and >= 2");

    std::vector<int> windows;
    for (int w = lo; w <= hi; w += step)
        windows.push_back(w);
    return windows;
}

rm::Image random_image(int width, int height, std::uint32_t seed) {
    rm::Image img(width, height);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            img.at(x, y) = std::uint8_t(dist(rng));
    return img;
}

void run_apply(const std::string& op, const std::string& se_text,
               const std::string& border_text, const std::string& config_path,
               const std::string& in_path, const std::string& out_path) {
    const rm::StructuringElement se = parse_se(se_text);
    const rm::BorderPolicy border = parse_border(border_text);
    const rm::DispatchConfig cfg =
        config_path.empty() ? rm::DispatchConfig{} : rm::load_config(config_path);

    const rm::Image src = rm::load_pgm(in_path);
    rm::Image out;
    if (op == "erode")
        out = rm::erode(src, se, border, cfg);
    else if (op == "dilate")
        out = rm::dilate(src, se, border, cfg);
    else if (op == "open")
        out = rm::opening(src, se, border, cfg);
    else if (op == "close")
        out = rm::closing(src, se, border, cfg);
    else
        out = rm::gradient(src, se, border, cfg);
    rm::store_pgm(out_path, out);
}

template <class F>
void emit_row(std::ostream& csv, const char* axis, const char* algorithm,
              int window, int image_w, int image_h, int reps, F&& fn) {
    const std::uint64_t median = rm::timing::median_ns(fn, reps);
    csv << axis << ',' << algorithm << ',' << window << ',' << image_w << ','
        << image_h << ',' << reps << ',' << median << '\n';
}

template <class T>
void scalar_square_transpose(T* data, std::size_t stride, int n) {
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c)
            std::swap(data[std::size_t(r) * stride + c],
                      data[std::size_t(c) * stride + r]);
}

rm::Image scalar_image_transpose(const rm::Image& src) {
    rm::Image dst(src.height(), src.width());
    for (int y = 0; y < src.height(); ++y)
        for (int x = 0; x < src.width(); ++x)
            dst.at(y, x) = src.at(x, y);
    return dst;
}

void run_bench(int width, int height, const std::string& windows_text,
               int reps, bool with_transpose, std::uint32_t seed,
               const std::string& out_path) {
    const std::vector<int> windows = parse_windows(windows_text);
    const rm::Image img = random_image(width, height, seed);
    const rm::BorderPolicy border = rm::BorderPolicy::replicate();

    std::ofstream csv(out_path, std::ios::binary);
    if (!csv)
        throw rm::Error(rm::Errc::IoError,
                        "cannot open '" + out_path + "' for writing");
    csv << "axis,algorithm,window,image_w,image_h,reps,median_ns\n";

    for (const int w : windows) {
        emit_row(csv, "horizontal", "linear", w, width, height, reps, [&] {
            rm::Image r = rm::horizontal_pass(img, rm::OpKind::Erode, w, border,
                                              rm::PassAlgorithm::Linear);
            rm::timing::do_not_optimize(r.row(0));
        });
        emit_row(csv, "horizontal", "vanherk", w, width, height, reps, [&] {
            rm::Image r = rm::horizontal_pass(img, rm::OpKind::Erode, w, border,
                                              rm::PassAlgorithm::VanHerk);
            rm::timing::do_not_optimize(r.row(0));
        });
        emit_row(csv, "vertical", "linear", w, width, height, reps, [&] {
            rm::Image r = rm::vertical_pass_direct(img, rm::OpKind::Erode, w,
                                                   border);
            rm::timing::do_not_optimize(r.row(0));
        });
        emit_row(csv, "vertical", "vanherk", w, width, height, reps, [&] {
            rm::Image r = rm::vertical_pass_via_transpose(
                img, rm::OpKind::Erode, w, border, rm::PassAlgorithm::VanHerk);
            rm::timing::do_not_optimize(r.row(0));
        });
    }

    if (with_transpose) {
        std::mt19937 rng(seed ^ 0x9e3779b9u);
        // 8x8 tile of 16-bit elements
        std::vector<std::uint16_t> tile16(64);
        for (auto& v : tile16) v = std::uint16_t(rng());
        emit_row(csv, "transpose", "tiled", 8, 8, 8, reps, [&] {
            rm::transpose_tile(tile16.data(), 8, 8);
            rm::timing::do_not_optimize(tile16.data());
        });
        emit_row(csv, "transpose", "scalar", 8, 8, 8, reps, [&] {
            scalar_square_transpose(tile16.data(), 8, 8);
            rm::timing::do_not_optimize(tile16.data());
        });
        // 16x16 tile of 8-bit elements
        std::vector<std::uint8_t> tile8(256);
        for (auto& v : tile8) v = std::uint8_t(rng());
        emit_row(csv, "transpose", "tiled", 16, 16, 16, reps, [&] {
            rm::transpose_tile(tile8.data(), 16, 16);
            rm::timing::do_not_optimize(tile8.data());
        });
        emit_row(csv, "transpose", "scalar", 16, 16, 16, reps, [&] {
            scalar_square_transpose(tile8.data(), 16, 16);
            rm::timing::do_not_optimize(tile8.data());
        });
        // whole image; window column carries 0, dimensions say the rest
        emit_row(csv, "transpose", "tiled", 0, width, height, reps, [&] {
            rm::Image t = rm::transpose_image(img);
            rm::timing::do_not_optimize(t.row(0));
        });
        emit_row(csv, "transpose", "scalar", 0, width, height, reps, [&] {
            rm::Image t = scalar_image_transpose(img);
            rm::timing::do_not_optimize(t.row(0));
        });
    }

    csv.flush();
    if (!csv)
        throw rm::Error(rm::Errc::IoError, "failed writing '" + out_path + "'");
}

void run_calibrate(int width, int height, const std::string& windows_text,
                   int reps, const std::string& out_path) {
    const std::vector<int> windows = parse_windows(windows_text);
    const rm::DispatchConfig cfg = rm::calibrate(width, height, windows, reps);
    rm::save_config(out_path, cfg);
    std::cout << rm::format_config(cfg);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grayscale morphology with rectangular structuring elements"};
    app.require_subcommand(1);

    std::string op, se_text, border_text = "replicate", config_path;
    std::string in_path, out_path;
    CLI::App* apply = app.add_subcommand("apply", "Filter a PGM image");
    apply->add_option("--op", op, "Operation")
        ->required()
        ->check(CLI::IsMember({"erode", "dilate", "open", "close", "gradient"}));
    apply->add_option("--se", se_text, "Structuring element, WxH (odd)")
        ->required();
    apply->add_option("--border", border_text,
                      "Border handling: replicate | constant:V");
    apply->add_option("--config", config_path, "Dispatch threshold file");
    apply->add_option("input", in_path, "Input PGM")->required();
    apply->add_option("output", out_path, "Output PGM (written as P5)")
        ->required();

    int width = 800, height = 600, reps = 21;
    std::string windows_text, csv_path;
    bool with_transpose = false;
    std::uint32_t seed = 1;
    CLI::App* bench =
        app.add_subcommand("bench", "Time both kernels over a window sweep");
    bench->add_option("--width", width, "Image width")->check(CLI::Range(1, 1 << 20));
    bench->add_option("--height", height, "Image height")->check(CLI::Range(1, 1 << 20));
    bench->add_option("--windows", windows_text, "Window sweep, MIN..MAX[:STEP]")
        ->required();
    bench->add_option("--reps", reps, "Repetitions per measurement (median)")
        ->check(CLI::Range(1, 10000));
    bench->add_flag("--transpose", with_transpose,
                    "Also time tiled vs scalar transpose");
    bench->add_option("--seed", seed, "Seed for the random test image");
    bench->add_option("--out", csv_path, "CSV output path")->required();

    int cal_width = 800, cal_height = 600, cal_reps = 21;
    std::string cal_windows, cal_out;
    CLI::App* calibrate =
        app.add_subcommand("calibrate", "Measure crossover thresholds");
    calibrate->add_option("--width", cal_width, "Image width")
        ->check(CLI::Range(1, 1 << 20));
    calibrate->add_option("--height", cal_height, "Image height")
        ->check(CLI::Range(1, 1 << 20));
    calibrate
        ->add_option("--windows", cal_windows, "Window sweep, MIN..MAX[:STEP]")
        ->required();
    calibrate->add_option("--reps", cal_reps, "Repetitions per measurement")
        ->check(CLI::Range(1, 10000));
    calibrate->add_option("--out", cal_out, "Config file to write")->required();

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(apply))
            run_apply(op, se_text, border_text, config_path, in_path, out_path);
        else if (app.got_subcommand(bench))
            run_bench(width, height, windows_text, reps, with_transpose, seed,
                      csv_path);
        else
            run_calibrate(cal_width, cal_height, cal_windows, cal_reps, cal_out);
        return 0;
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "rectmorph: " << e.what() << '\n';
        return 1;
    } catch (const rm::Error& e) {
        std::cerr << "rectmorph: " << e.what() << '\n';
        return 1;
    }
}
