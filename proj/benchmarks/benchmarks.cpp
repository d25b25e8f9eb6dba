// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths: sequence generation, input transforms,
// the two-sample KS statistic, full PAWN analyses, inner total-order
// analyses, and density/overlap computation.

#include <benchmark/benchmark.h>

#include <vector>

#include "gsa/gsa.hpp"

namespace {

gsa::Matrix sample_matrix(std::size_t dim, std::size_t rows) {
    return gsa::sobol_sequence(dim, rows);
}

void BM_SobolSequence(benchmark::State& state) {
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    const std::size_t rows = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsa::sobol_sequence(dim, rows));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(rows));
}
BENCHMARK(BM_SobolSequence)->Args({8, 4096})->Args({64, 4096})->Args({8, 65536});

void BM_TransformIshigami(benchmark::State& state) {
    const gsa::FunctionSpec& fn = gsa::FunctionSpec::by_name("ishigami");
    const gsa::Matrix unit = sample_matrix(fn.k, 8192);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsa::transform(unit, fn.input_specs()));
    }
}
BENCHMARK(BM_TransformIshigami);

void BM_TransformLiuChiSquare(benchmark::State& state) {
    const gsa::FunctionSpec& fn = gsa::FunctionSpec::by_name("liu");
    const gsa::Matrix unit = sample_matrix(fn.k, 8192);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsa::transform(unit, fn.input_specs()));
    }
}
BENCHMARK(BM_TransformLiuChiSquare);

void BM_KsTwoSample(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    const gsa::Matrix u = sample_matrix(2, 2 * m);
    std::vector<double> a(m), b(m);
    for (std::size_t i = 0; i < m; ++i) {
        a[i] = u(i, 0);
        b[i] = u(m + i, 1);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsa::ks_two_sample(a, b));
    }
}
BENCHMARK(BM_KsTwoSample)->Arg(256)->Arg(4096);

void BM_PawnIndices(benchmark::State& state) {
    const gsa::FunctionSpec& fn = gsa::FunctionSpec::by_name("ishigami");
    const std::size_t N = static_cast<std::size_t>(state.range(0));
    const gsa::Matrix inputs = gsa::transform(sample_matrix(fn.k, N),
                                              fn.input_specs());
    const std::vector<double> y = gsa::eval_rows(fn, inputs);
    gsa::PawnConfig config;
    config.n = 10;
    config.theta = gsa::SummaryStatistic::Mean;
    config.seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsa::pawn_indices(inputs, y, config));
    }
}
BENCHMARK(BM_PawnIndices)->Arg(1000)->Arg(4000);

void BM_InnerTotalOrder(benchmark::State& state) {
    const gsa::FunctionSpec& fn = gsa::FunctionSpec::by_name("ishigami");
    gsa::DesignPoint point;
    point.N = state.range(0);
    point.theta = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsa::run_inner_total_order(point, fn, 1, 0));
    }
}
BENCHMARK(BM_InnerTotalOrder)->Arg(1000)->Arg(4000);

void BM_Kde(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    const gsa::Matrix u = sample_matrix(1, m);
    std::vector<double> sample(m);
    for (std::size_t i = 0; i < m; ++i) sample[i] = u(i, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsa::kde(sample));
    }
}
BENCHMARK(BM_Kde)->Arg(2048);

void BM_CoefficientOfOverlapping(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    const gsa::Matrix u = sample_matrix(2, m);
    std::vector<double> a(m), b(m);
    for (std::size_t i = 0; i < m; ++i) {
        a[i] = u(i, 0);
        b[i] = 0.25 + 0.5 * u(i, 1);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsa::coefficient_of_overlapping(a, b));
    }
}
BENCHMARK(BM_CoefficientOfOverlapping)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
