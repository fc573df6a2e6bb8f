// End-to-end tests that drive the installed command line binary through
// a shell. The binary path arrives as --cli=..., fixtures as --data=...
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "rectmorph/dispatch.hpp"
#include "rectmorph/pgm.hpp"
#include "testutil.hpp"

namespace {

std::string g_cli;
std::string g_data;

std::string cli() { return testutil::shell_quote(g_cli); }

struct BenchRow {
    std::string axis;
    std::string algorithm;
    long window = 0;
    long image_w = 0;
    long image_h = 0;
    long reps = 0;
    unsigned long long median_ns = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
        if (i == text.size() || text[i] == sep) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    return parts;
}

std::vector<BenchRow> parse_bench_csv(const std::string& text) {
    REQUIRE(text.find('\r') == std::string::npos);
    REQUIRE(!text.empty());
    REQUIRE(text.back() == '\n');

    std::vector<std::string> lines = split(text.substr(0, text.size() - 1), '\n');
    REQUIRE(!lines.empty());
    REQUIRE(lines.front() ==
            "axis,algorithm,window,image_w,image_h,reps,median_ns");

    std::vector<BenchRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string> f = split(lines[i], ',');
        REQUIRE(f.size() == 7);
        BenchRow row;
        row.axis = f[0];
        row.algorithm = f[1];
        row.window = std::stol(f[2]);
        row.image_w = std::stol(f[3]);
        row.image_h = std::stol(f[4]);
        row.reps = std::stol(f[5]);
        row.median_ns = std::stoull(f[6]);
        rows.push_back(row);
    }
    return rows;
}

void check_one_line_failure(const std::string& args) {
    const testutil::CommandResult r = testutil::run_command(cli() + " " + args);
    CAPTURE(args);
    CAPTURE(r.output);
    CHECK(r.exit_code == 1);
    CHECK(r.output.rfind("rectmorph:", 0) == 0);
    CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 1);
}

} // namespace

TEST_CASE("help requests succeed") {
    CHECK(testutil::run_command(cli() + " --help").exit_code == 0);
    CHECK(testutil::run_command(cli() + " apply --help").exit_code == 0);
    CHECK(testutil::run_command(cli() + " bench --help").exit_code == 0);
}

TEST_CASE("a subcommand is required") {
    const testutil::CommandResult r = testutil::run_command(cli());
    CHECK(r.exit_code == 1);
    CHECK(r.output.rfind("rectmorph:", 0) == 0);
}

TEST_CASE("apply with the identity element copies the image") {
    testutil::TempDir tmp;
    const rectmorph::Image src = testutil::random_image(19, 11, 41);
    rectmorph::store_pgm(tmp.file("in.pgm"), src);

    const testutil::CommandResult r = testutil::run_command(
        cli() + " apply --op erode --se 1x1 " +
        testutil::shell_quote(tmp.file("in.pgm")) + " " +
        testutil::shell_quote(tmp.file("out.pgm")));
    CAPTURE(r.output);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.empty());
    CHECK(rectmorph::equal_pixels(rectmorph::load_pgm(tmp.file("out.pgm")), src));
}

TEST_CASE("apply reproduces the golden erosion byte for byte") {
    testutil::TempDir tmp;
    const std::string out = tmp.file("eroded.pgm");
    const testutil::CommandResult r = testutil::run_command(
        cli() + " apply --op erode --se 3x3 --border replicate " +
        testutil::shell_quote(g_data + "/fixture_3x3.pgm") + " " +
        testutil::shell_quote(out));
    CAPTURE(r.output);
    REQUIRE(r.exit_code == 0);
    CHECK(testutil::read_file(out) ==
          testutil::read_file(g_data + "/fixture_3x3_eroded.pgm"));
}

TEST_CASE("gradient of a flat image is black") {
    testutil::TempDir tmp;
    rectmorph::store_pgm(
        tmp.file("flat.pgm"),
        rectmorph::Image::from_pixels(9, 7, std::vector<std::uint8_t>(63, 42)));

    const testutil::CommandResult r = testutil::run_command(
        cli() + " apply --op gradient --se 5x3 " +
        testutil::shell_quote(tmp.file("flat.pgm")) + " " +
        testutil::shell_quote(tmp.file("g.pgm")));
    REQUIRE(r.exit_code == 0);
    const rectmorph::Image g = rectmorph::load_pgm(tmp.file("g.pgm"));
    for (int y = 0; y < g.height(); ++y)
        for (int x = 0; x < g.width(); ++x)
            CHECK(g.at(x, y) == 0);
}

TEST_CASE("open and close bracket the source image") {
    testutil::TempDir tmp;
    const rectmorph::Image src = testutil::random_image(33, 27, 42);
    rectmorph::store_pgm(tmp.file("in.pgm"), src);

    for (const char* op : {"open", "close"}) {
        const testutil::CommandResult r = testutil::run_command(
            cli() + " apply --op " + op + " --se 5x5 " +
            testutil::shell_quote(tmp.file("in.pgm")) + " " +
            testutil::shell_quote(tmp.file(std::string(op) + ".pgm")));
        CAPTURE(r.output);
        REQUIRE(r.exit_code == 0);
    }
    const rectmorph::Image opened = rectmorph::load_pgm(tmp.file("open.pgm"));
    const rectmorph::Image closed = rectmorph::load_pgm(tmp.file("close.pgm"));
    CHECK(testutil::pointwise_le(opened, src));
    CHECK(testutil::pointwise_le(src, closed));
}

TEST_CASE("results do not depend on the dispatch config") {
    testutil::TempDir tmp;
    rectmorph::store_pgm(tmp.file("in.pgm"), testutil::random_image(64, 52, 43));
    testutil::write_file(tmp.file("linear.cfg"),
                         "threshold_h=127\nthreshold_v=127\nsource=calibrated\n");
    testutil::write_file(tmp.file("vanherk.cfg"),
                         "threshold_h=1\nthreshold_v=1\nsource=calibrated\n");

    const std::string base = cli() + " apply --op dilate --se 9x7 " +
                             testutil::shell_quote(tmp.file("in.pgm")) + " ";
    REQUIRE(testutil::run_command(
                base + testutil::shell_quote(tmp.file("a.pgm"))).exit_code == 0);
    REQUIRE(testutil::run_command(
                base + testutil::shell_quote(tmp.file("b.pgm")) + " --config " +
                testutil::shell_quote(tmp.file("linear.cfg"))).exit_code == 0);
    REQUIRE(testutil::run_command(
                base + testutil::shell_quote(tmp.file("c.pgm")) + " --config " +
                testutil::shell_quote(tmp.file("vanherk.cfg"))).exit_code == 0);

    const std::string a = testutil::read_file(tmp.file("a.pgm"));
    CHECK(a == testutil::read_file(tmp.file("b.pgm")));
    CHECK(a == testutil::read_file(tmp.file("c.pgm")));
}

TEST_CASE("bad invocations fail with a one-line diagnostic") {
    testutil::TempDir tmp;
    rectmorph::store_pgm(tmp.file("in.pgm"), testutil::random_image(8, 8, 44));
    const std::string in = testutil::shell_quote(tmp.file("in.pgm"));
    const std::string out = testutil::shell_quote(tmp.file("out.pgm"));
    const std::string csv = testutil::shell_quote(tmp.file("b.csv"));

    check_one_line_failure("apply --op erode --se 3x3 " +
                           testutil::shell_quote(tmp.file("absent.pgm")) + " " +
                           out);
    check_one_line_failure("apply --op erode --se 4x3 " + in + " " + out);
    check_one_line_failure("apply --op erode --se 3 " + in + " " + out);
    check_one_line_failure("apply --op erode --se 3x3 --border mirror " + in +
                           " " + out);
    check_one_line_failure("apply --op erode --se 3x3 --border constant:300 " +
                           in + " " + out);
    check_one_line_failure("apply --op shrink --se 3x3 " + in + " " + out);
    check_one_line_failure("apply --op erode --se 3x3 --config " +
                           testutil::shell_quote(tmp.file("no.cfg")) + " " +
                           in + " " + out);
    check_one_line_failure("bench --windows 4..10 --out " + csv);
    check_one_line_failure("bench --windows 9..3 --out " + csv);
    check_one_line_failure("bench --windows 3..9:3 --out " + csv);
    check_one_line_failure("bench --windows 3..9 --width 0 --out " + csv);
    check_one_line_failure("calibrate --windows 3..5 --reps 2 --out " +
                           testutil::shell_quote(tmp.file("c.cfg")));
}

TEST_CASE("a malformed input image is reported, not crashed on") {
    testutil::TempDir tmp;
    testutil::write_file(tmp.file("bad.pgm"), "P5\n4 4\n255\nxy");
    check_one_line_failure("apply --op erode --se 3x3 " +
                           testutil::shell_quote(tmp.file("bad.pgm")) + " " +
                           testutil::shell_quote(tmp.file("out.pgm")));
}

TEST_CASE("bench emits the documented CSV") {
    testutil::TempDir tmp;
    const std::string csv_path = tmp.file("sweep.csv");
    const testutil::CommandResult r = testutil::run_command(
        cli() + " bench --width 32 --height 24 --windows 3..7 --reps 3 --out " +
        testutil::shell_quote(csv_path));
    CAPTURE(r.output);
    REQUIRE(r.exit_code == 0);

    const std::vector<BenchRow> rows =
        parse_bench_csv(testutil::read_file(csv_path));
    REQUIRE(rows.size() == 12); // 3 windows x 2 axes x 2 algorithms

    std::size_t i = 0;
    for (long w : {3, 5, 7}) {
        CHECK(rows[i + 0].axis == "horizontal");
        CHECK(rows[i + 0].algorithm == "linear");
        CHECK(rows[i + 1].axis == "horizontal");
        CHECK(rows[i + 1].algorithm == "vanherk");
        CHECK(rows[i + 2].axis == "vertical");
        CHECK(rows[i + 2].algorithm == "linear");
        CHECK(rows[i + 3].axis == "vertical");
        CHECK(rows[i + 3].algorithm == "vanherk");
        for (std::size_t k = i; k < i + 4; ++k) {
            CHECK(rows[k].window == w);
            CHECK(rows[k].image_w == 32);
            CHECK(rows[k].image_h == 24);
            CHECK(rows[k].reps == 3);
            CHECK(rows[k].median_ns > 0);
        }
        i += 4;
    }
}

TEST_CASE("bench --transpose appends the transpose rows") {
    testutil::TempDir tmp;
    const std::string csv_path = tmp.file("sweep.csv");
    const testutil::CommandResult r = testutil::run_command(
        cli() +
        " bench --width 48 --height 40 --windows 3..3 --reps 3 --transpose"
        " --out " +
        testutil::shell_quote(csv_path));
    CAPTURE(r.output);
    REQUIRE(r.exit_code == 0);

    const std::vector<BenchRow> rows =
        parse_bench_csv(testutil::read_file(csv_path));
    REQUIRE(rows.size() == 10); // 4 sweep rows + 6 transpose rows
    for (std::size_t k = 4; k < 10; ++k) {
        CHECK(rows[k].axis == "transpose");
        CHECK(rows[k].median_ns > 0);
        CHECK((rows[k].algorithm == "tiled" || rows[k].algorithm == "scalar"));
    }
    // 8x8 16-bit tile, 16x16 8-bit tile, then the whole image (window 0)
    CHECK(rows[4].window == 8);
    CHECK(rows[5].window == 8);
    CHECK(rows[6].window == 16);
    CHECK(rows[7].window == 16);
    CHECK(rows[8].window == 0);
    CHECK(rows[8].image_w == 48);
    CHECK(rows[8].image_h == 40);
    CHECK(rows[9].window == 0);
}

TEST_CASE("calibrate writes a loadable config and echoes it") {
    testutil::TempDir tmp;
    const std::string cfg_path = tmp.file("thresholds.cfg");
    const testutil::CommandResult r = testutil::run_command(
        cli() + " calibrate --width 64 --height 48 --windows 3..5 --reps 3"
                " --out " +
        testutil::shell_quote(cfg_path));
    CAPTURE(r.output);
    REQUIRE(r.exit_code == 0);

    const rectmorph::DispatchConfig cfg = rectmorph::load_config(cfg_path);
    CHECK(cfg.source == rectmorph::ThresholdSource::Calibrated);
    for (int t : {cfg.threshold_h, cfg.threshold_v})
        CHECK((t == 1 || t == 3 || t == 5));

    // stdout carries the same text that went to disk
    CHECK(r.output == testutil::read_file(cfg_path));
}

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string_view arg = argv[i];
        if (arg.rfind("--cli=", 0) == 0) g_cli = std::string(arg.substr(6));
        if (arg.rfind("--data=", 0) == 0) g_data = std::string(arg.substr(7));
    }
    if (g_cli.empty() || g_data.empty()) {
        std::fprintf(stderr,
                     "usage: test_cli --cli=<binary> --data=<fixture dir>"
                     " [doctest options]\n");
        return 2;
    }
    doctest::Context context;
    context.applyCommandLine(argc, argv);
    return context.run();
}
