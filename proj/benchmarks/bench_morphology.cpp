// Microbenchmarks for the kernels the dispatcher chooses between.
// Run the sweep tool (`rectmorph bench`) for crossover measurements;
// these exist for quick per-kernel regression checks.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "rectmorph/separable.hpp"
#include "rectmorph/sliding_extrema.hpp"
#include "rectmorph/dispatch.hpp"
#include "rectmorph/transpose.hpp"

namespace rm = rectmorph;

namespace {

rm::Image random_image(int width, int height, std::uint32_t seed) {
    rm::Image img(width, height);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            img.at(x, y) = std::uint8_t(dist(rng));
    return img;
}

std::vector<std::uint8_t> random_bytes(std::size_t n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    std::vector<std::uint8_t> v(n);
    for (auto& b : v) b = std::uint8_t(dist(rng));
    return v;
}

void bm_linear_1d(benchmark::State& state) {
    const int window = int(state.range(0));
    const auto in = random_bytes(1 << 16, 42);
    std::vector<std::uint8_t> out(in.size());
    for (auto _ : state) {
        rm::linear_window_1d(in.data(), in.size(), window, rm::OpKind::Erode,
                             rm::BorderPolicy::replicate(), out.data());
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(in.size()));
}
BENCHMARK(bm_linear_1d)->Arg(3)->Arg(15)->Arg(63)->Arg(127);

void bm_van_herk_1d(benchmark::State& state) {
    const int window = int(state.range(0));
    const auto in = random_bytes(1 << 16, 42);
    std::vector<std::uint8_t> out(in.size());
    for (auto _ : state) {
        rm::van_herk_1d(in.data(), in.size(), window, rm::OpKind::Erode,
                        rm::BorderPolicy::replicate(), out.data());
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(in.size()));
}
BENCHMARK(bm_van_herk_1d)->Arg(3)->Arg(15)->Arg(63)->Arg(127);

void bm_vertical_direct(benchmark::State& state) {
    const int window = int(state.range(0));
    const rm::Image img = random_image(800, 600, 7);
    for (auto _ : state) {
        rm::Image r = rm::vertical_pass_direct(img, rm::OpKind::Erode, window,
                                               rm::BorderPolicy::replicate());
        benchmark::DoNotOptimize(r.row(0));
    }
}
BENCHMARK(bm_vertical_direct)->Arg(3)->Arg(15)->Arg(63);

void bm_vertical_via_transpose(benchmark::State& state) {
    const int window = int(state.range(0));
    const rm::Image img = random_image(800, 600, 7);
    for (auto _ : state) {
        rm::Image r = rm::vertical_pass_via_transpose(
            img, rm::OpKind::Erode, window, rm::BorderPolicy::replicate(),
            rm::PassAlgorithm::VanHerk);
        benchmark::DoNotOptimize(r.row(0));
    }
}
BENCHMARK(bm_vertical_via_transpose)->Arg(3)->Arg(15)->Arg(63);

void bm_tile_transpose_16x16_u8(benchmark::State& state) {
    auto tile = random_bytes(256, 3);
    for (auto _ : state) {
        rm::transpose_tile(tile.data(), 16, 16);
        benchmark::DoNotOptimize(tile.data());
    }
}
BENCHMARK(bm_tile_transpose_16x16_u8);

void bm_tile_scalar_16x16_u8(benchmark::State& state) {
    auto tile = random_bytes(256, 3);
    for (auto _ : state) {
        for (int r = 0; r < 16; ++r)
            for (int c = r + 1; c < 16; ++c)
                std::swap(tile[std::size_t(r) * 16 + c],
                          tile[std::size_t(c) * 16 + r]);
        benchmark::DoNotOptimize(tile.data());
    }
}
BENCHMARK(bm_tile_scalar_16x16_u8);

void bm_image_transpose(benchmark::State& state) {
    const rm::Image img = random_image(800, 600, 11);
    for (auto _ : state) {
        rm::Image t = rm::transpose_image(img);
        benchmark::DoNotOptimize(t.row(0));
    }
}
BENCHMARK(bm_image_transpose);

void bm_erode_auto(benchmark::State& state) {
    const int window = int(state.range(0));
    const rm::Image img = random_image(800, 600, 13);
    const rm::StructuringElement se = rm::make_se(window, window);
    for (auto _ : state) {
        rm::Image r = rm::erode(img, se, rm::BorderPolicy::replicate());
        benchmark::DoNotOptimize(r.row(0));
    }
}
BENCHMARK(bm_erode_auto)->Arg(3)->Arg(31)->Arg(127);

} // namespace

BENCHMARK_MAIN();
