#include <benchmark/benchmark.h>

#include "qf/classify.hpp"
#include "qf/verify.hpp"

using namespace qf;

namespace {

void BM_classify_small_prime(benchmark::State& state) {
    QuarticField k = make_quartic_field(Int(22), Int(66));
    for (auto _ : state) benchmark::DoNotOptimize(classify(k, Int(3)));
}
BENCHMARK(BM_classify_small_prime);

void BM_classify_wild_2(benchmark::State& state) {
    QuarticField k = make_quartic_field(Int(48), Int(188));
    for (auto _ : state) benchmark::DoNotOptimize(classify(k, Int(2)));
}
BENCHMARK(BM_classify_wild_2);

void BM_classify_deep_polygon(benchmark::State& state) {
    // v_3(disc) = 9: the slowest table path (iterated root lifting at 3)
    QuarticField k = make_quartic_field(Int(-3649), Int(3));
    for (auto _ : state) benchmark::DoNotOptimize(classify(k, Int(3)));
}
BENCHMARK(BM_classify_deep_polygon);

void BM_dedekind_large_prime(benchmark::State& state) {
    QuarticField k = make_quartic_field(Int(-839), Int(-46));
    Int p("999999937");
    for (auto _ : state) benchmark::DoNotOptimize(dedekind_factorization(k, p));
}
BENCHMARK(BM_dedekind_large_prime);

void BM_full_verification(benchmark::State& state) {
    QuarticField k = make_quartic_field(Int(22), Int(66));
    PrimeFactorization r = classify(k, Int(3));
    for (auto _ : state) benchmark::DoNotOptimize(check_factorization(r));
}
BENCHMARK(BM_full_verification);

void BM_all_ramified_sweep(benchmark::State& state) {
    QuarticField k = make_quartic_field(Int(144), Int(36));
    for (auto _ : state) benchmark::DoNotOptimize(factor_all_ramified(k));
}
BENCHMARK(BM_all_ramified_sweep);

}  // namespace

BENCHMARK_MAIN();
