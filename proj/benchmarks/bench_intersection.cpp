#include <benchmark/benchmark.h>

#include "xcartan/arith.hpp"
#include "xcartan/intersection.hpp"
#include "xcartan/quaternion.hpp"
#include "xcartan/table.hpp"

using namespace xcartan;

namespace {

Discriminant D(std::int64_t v) { return decompose_discriminant(v); }

void BM_SSet(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(s_set(30705, 121));
}
BENCHMARK(BM_SSet);

void BM_PrimeLevelIntersection(benchmark::State& state) {
    const Discriminant d1 = D(-115), d2 = D(-267);
    for (auto _ : state) benchmark::DoNotOptimize(prime_level_intersection(d1, d2, 11, 1));
}
BENCHMARK(BM_PrimeLevelIntersection);

void BM_PairingTScan(benchmark::State& state) {
    const Discriminant d1 = D(-67), d2 = D(-163);
    const Level lv(1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(intersection_pairing(d1, d2, lv));
}
BENCHMARK(BM_PairingTScan);

void BM_PairingViaOrders(benchmark::State& state) {
    const Discriminant d1 = D(-67), d2 = D(-163);
    const Level lv(1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(intersection_pairing_via_orders(d1, d2, lv));
}
BENCHMARK(BM_PairingViaOrders);

void BM_Factorize62Bit(benchmark::State& state) {
    const std::int64_t n = (std::int64_t{1} << 61) + 1;
    for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize62Bit);

void BM_FullTableCheck(benchmark::State& state) {
    table::CheckOptions opts;
    opts.threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(table::check_table(table::embedded_table(), opts));
}
BENCHMARK(BM_FullTableCheck)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
