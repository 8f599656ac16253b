// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors

#include <benchmark/benchmark.h>

#include "irslab/diagnostics.hpp"
#include "irslab/monte_carlo.hpp"
#include "irslab/outage.hpp"
#include "irslab/philox.hpp"
#include "irslab/specfun.hpp"

namespace {

const irslab::QuadratureSpec kQuad{1e-10, 1e-8, 200};

void BM_bessel_k0(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(irslab::bessel_k0(x));
        x = x < 20.0 ? x + 0.1 : 0.1;
    }
}
BENCHMARK(BM_bessel_k0);

void BM_upper_incomplete_gamma(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(irslab::upper_incomplete_gamma(6.5, x));
        x = x < 30.0 ? x + 0.37 : 0.1;
    }
}
BENCHMARK(BM_upper_incomplete_gamma);

void BM_philox_block(benchmark::State& state) {
    irslab::Philox4x64::Counter ctr{0, 0, 0, 0};
    const irslab::Philox4x64::Key key{42, 0};
    for (auto _ : state) {
        ++ctr[0];
        benchmark::DoNotOptimize(irslab::Philox4x64::block(ctr, key));
    }
    state.SetItemsProcessed(state.iterations() * 4);
}
BENCHMARK(BM_philox_block);

void BM_sample_H(benchmark::State& state) {
    const int n = int(state.range(0));
    std::uint64_t s = 0;
    for (auto _ : state) {
        irslab::SampleUniforms u(7, 0, s++);
        benchmark::DoNotOptimize(irslab::sample_H(n, 1.0, u));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_sample_H)->Arg(2)->Arg(8)->Arg(16);

void BM_sample_G2(benchmark::State& state) {
    const int n = int(state.range(0));
    std::uint64_t s = 0;
    for (auto _ : state) {
        irslab::SampleUniforms u(7, 1, s++);
        benchmark::DoNotOptimize(irslab::sample_G2(n, 1.0, u));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_sample_G2)->Arg(2)->Arg(8)->Arg(16);

void BM_cdf_H_closed(benchmark::State& state) {
    const int n = int(state.range(0));
    double t = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(irslab::cdf_H(t, n, 1.0, kQuad, irslab::CdfHMode::prop1_closed));
        t = t < 3.0 * n ? t + 0.13 : 0.5;
    }
}
BENCHMARK(BM_cdf_H_closed)->Arg(2)->Arg(8)->Arg(16);

void BM_cdf_G2(benchmark::State& state) {
    const int n = int(state.range(0));
    double t = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(irslab::cdf_G2(t, n, 1.0, kQuad));
        t = t < 20.0 * n ? t * 1.4 : 0.5;
    }
}
BENCHMARK(BM_cdf_G2)->Arg(2)->Arg(8);

void BM_mutual_information(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(irslab::mutual_information_xy(kQuad));
}
BENCHMARK(BM_mutual_information);

}  // namespace

BENCHMARK_MAIN();
