#include <benchmark/benchmark.h>

#include "cyclo/cp_sets.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/limit_points.hpp"
#include "cyclo/parse.hpp"
#include "cyclo/quadforms.hpp"
#include "cyclo/thue.hpp"
#include "cyclo/trace_height.hpp"

using namespace cyclo;

namespace {

CycInt dense_element(std::int64_t n) {
    std::vector<std::int64_t> a(n);
    for (std::int64_t k = 0; k < n; ++k) a[k] = (k * 37 % 11) - 5;
    return CycInt::from_coeffs(n, a);
}

void BM_CasselsHeight(benchmark::State& state) {
    CycInt x = dense_element(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cassels_height(x).value);
}
BENCHMARK(BM_CasselsHeight)->Arg(13)->Arg(101)->Arg(210);

void BM_CanonicalForm(benchmark::State& state) {
    CycInt x = dense_element(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(x));
}
BENCHMARK(BM_CanonicalForm)->Arg(105)->Arg(256);

void BM_MeanTrace(benchmark::State& state) {
    CycInt x = dense_element(420);
    for (auto _ : state) benchmark::DoNotOptimize(mean_trace(x));
}
BENCHMARK(BM_MeanTrace);

void BM_CpWitness(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cp_witness(17, 4, state.range(0)));
}
BENCHMARK(BM_CpWitness)->Arg(5)->Arg(50)->Arg(500);

void BM_UniversalPoly1(benchmark::State& state) {
    std::int64_t m = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(universal_poly1(m % 10000));
        m += 577;
    }
}
BENCHMARK(BM_UniversalPoly1);

void BM_UniversalPoly2(benchmark::State& state) {
    std::int64_t m = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(universal_poly2(m % 10000));
        m += 577;
    }
}
BENCHMARK(BM_UniversalPoly2);

void BM_FourSquares(benchmark::State& state) {
    std::int64_t r = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(four_squares(r % 1000000));
        r = r * 48271 % 2147483647;
    }
}
BENCHMARK(BM_FourSquares);

void BM_TwoTermStep(benchmark::State& state) {
    CycInt g1 = parse_cyclotomic("1 + w3");
    CycInt g2 = parse_cyclotomic("1 + w7");
    for (auto _ : state)
        benchmark::DoNotOptimize(two_term_sequence(g1, g2, Side::below, state.range(0)));
}
BENCHMARK(BM_TwoTermStep)->Arg(5)->Arg(20);

void BM_SyntheticLabels(benchmark::State& state) {
    SyntheticThue syn(2, 2, 4);
    for (auto _ : state) {
        for (const auto& [v, l] : syn.points()) benchmark::DoNotOptimize(label(v, syn));
    }
}
BENCHMARK(BM_SyntheticLabels);

} // namespace

BENCHMARK_MAIN();
