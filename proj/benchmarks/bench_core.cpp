#include <benchmark/benchmark.h>

#include "sct/cumulants.hpp"
#include "sct/ncpart.hpp"
#include "sct/nsym.hpp"
#include "sct/series.hpp"
#include "sct/symfun.hpp"
#include "sct/tree.hpp"

namespace {

// the enumeration itself is memoized, so scan the listing with a predicate
void BM_enumerate_trees(benchmark::State& state) {
    int w = int(state.range(0));
    for (auto _ : state) {
        long long primes = 0;
        for (const auto& t : sct::enumerate_trees(sct::TreeKind::all, w))
            primes += sct::is_prime(t);
        benchmark::DoNotOptimize(primes);
    }
}

void BM_compose_inverse_pair(benchmark::State& state) {
    int cap = int(state.range(0));
    sct::TreeSeries fc = sct::corolla_series(cap);
    sct::TreeSeries gc = sct::signed_tree_series(cap);
    for (auto _ : state) {
        auto u = sct::compose(fc, gc);
        benchmark::DoNotOptimize(u);
    }
}

void BM_kappa_series(benchmark::State& state) {
    int cap = int(state.range(0));
    for (auto _ : state) {
        auto k = sct::kappa_series(cap);
        benchmark::DoNotOptimize(k);
    }
}

void BM_vdash_inverse(benchmark::State& state) {
    int cap = int(state.range(0));
    sct::TreeSeries gc = sct::signed_tree_series(cap);
    for (auto _ : state) {
        auto k = sct::vdash_inverse(gc);
        benchmark::DoNotOptimize(k);
    }
}

void BM_moebius_lattice(benchmark::State& state) {
    int n = int(state.range(0));
    for (auto _ : state) {
        long long acc = 0;
        for (const auto& p : sct::enumerate_nc(n)) acc += sct::moebius_bottom(p);
        benchmark::DoNotOptimize(acc);
    }
}

void BM_cumulant_K(benchmark::State& state) {
    int cap = int(state.range(0));
    for (auto _ : state) {
        auto k = sct::cumulant_K(cap, sct::KMethod::solve);
        benchmark::DoNotOptimize(k);
    }
}

void BM_speicher_kappa(benchmark::State& state) {
    int n = int(state.range(0));
    for (auto _ : state) {
        auto k = sct::speicher_kappa(n);
        benchmark::DoNotOptimize(k);
    }
}

void BM_tree_cumulant_scalar(benchmark::State& state) {
    int n = int(state.range(0));
    for (auto _ : state) {
        auto k = sct::kappa_eval_scalar(n);
        benchmark::DoNotOptimize(k);
    }
}

void BM_classical_cumulants(benchmark::State& state) {
    int n = int(state.range(0));
    for (auto _ : state) {
        auto k = sct::classical_cumulants(n);
        benchmark::DoNotOptimize(k);
    }
}

BENCHMARK(BM_enumerate_trees)->Arg(6)->Arg(8);
BENCHMARK(BM_compose_inverse_pair)->Arg(6)->Arg(8);
BENCHMARK(BM_kappa_series)->Arg(6)->Arg(9);
BENCHMARK(BM_vdash_inverse)->Arg(5)->Arg(7);
BENCHMARK(BM_moebius_lattice)->Arg(5)->Arg(7);
BENCHMARK(BM_cumulant_K)->Arg(6)->Arg(8);
BENCHMARK(BM_speicher_kappa)->Arg(5)->Arg(6);
BENCHMARK(BM_tree_cumulant_scalar)->Arg(5)->Arg(6);
BENCHMARK(BM_classical_cumulants)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
