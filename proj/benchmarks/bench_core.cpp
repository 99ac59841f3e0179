// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "maxspace/convexity.hpp"
#include "maxspace/sampling.hpp"
#include "maxspace/spacing.hpp"

using namespace maxspace;

namespace {

std::vector<Point2> disk_points(int n, std::uint64_t seed) {
    Rng rng(seed);
    return sample_region(ConvexRegion::disk({0, 0}, 1.0), n, rng).points;
}

void BM_ConvexHull(benchmark::State& state) {
    auto pts = disk_points(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convex_hull(pts));
    }
}
BENCHMARK(BM_ConvexHull)->Arg(100)->Arg(1000)->Arg(10000);

void BM_Delaunay(benchmark::State& state) {
    auto pts = disk_points(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(delaunay(pts));
    }
}
BENCHMARK(BM_Delaunay)->Arg(100)->Arg(500)->Arg(2000);

void BM_LargestEmptyBall(benchmark::State& state) {
    auto pts = disk_points(static_cast<int>(state.range(0)), 3);
    ConvexRegion region = ConvexRegion::polygon(convex_hull(pts));
    for (auto _ : state) {
        benchmark::DoNotOptimize(largest_empty_ball(pts, region));
    }
}
BENCHMARK(BM_LargestEmptyBall)->Arg(100)->Arg(500)->Arg(2000);

void BM_SemiParametricTest(benchmark::State& state) {
    Rng rng(4);
    Sample s = sample_square_minus_triangle(3.14159265358979 / 4.0,
                                            static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(test_semi_parametric(s, 0.05));
    }
}
BENCHMARK(BM_SemiParametricTest)->Arg(200)->Arg(500);

void BM_NonparametricTest(benchmark::State& state) {
    Rng rng(5);
    Sample s = sample_s_shape(1.5, NoiseSpec::uniform(), static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            test_nonparametric(s, 0.05, KernelSpec::gaussian(), BandwidthSpec::scaled()));
    }
}
BENCHMARK(BM_NonparametricTest)->Arg(250)->Arg(500);

void BM_VoronoiMaxDensity(benchmark::State& state) {
    Rng rng(6);
    Sample s = sample_region(ConvexRegion::disk({0, 0}, 1.0),
                             static_cast<int>(state.range(0)), rng);
    double h = default_bandwidth(s, BandwidthSpec::scaled());
    for (auto _ : state) {
        benchmark::DoNotOptimize(voronoi_max_estimator(s, h, KernelSpec::gaussian()));
    }
}
BENCHMARK(BM_VoronoiMaxDensity)->Arg(250)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
