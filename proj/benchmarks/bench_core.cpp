#include <benchmark/benchmark.h>

#include "charrel/char_table.hpp"
#include "charrel/defect_zero.hpp"
#include "charrel/groebner.hpp"
#include "charrel/tpoly.hpp"
#include "charrel/zero_cover.hpp"

using namespace charrel;

static void BM_TableBuild(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CharTable t = CharTable::build(n, Config{});
        benchmark::DoNotOptimize(t.value(0, 0));
    }
}
BENCHMARK(BM_TableBuild)->Arg(10)->Arg(13)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_TPolyNorm4(benchmark::State& state) {
    for (auto _ : state) {
        TableStore store{Config{}};
        ConnectionEngine engine{store};
        TPolyBuilder builder{engine};
        for (const Partition& lambda : classes_with_norm_at_most(4))
            benchmark::DoNotOptimize(builder.t_poly(lambda).expr.term_count());
    }
}
BENCHMARK(BM_TPolyNorm4)->Unit(benchmark::kMillisecond);

static void BM_GroebnerCaseA(benchmark::State& state) {
    TableStore store{Config{}};
    ConnectionEngine engine{store};
    TPolyBuilder builder{engine};
    ZeroSetIdeal ideal = ZeroSetIdeal::make(
        4, {Partition({2, 2}), Partition({4}), Partition({2, 2, 2})}, builder);
    const LexOrder order;
    for (auto _ : state) {
        auto basis = buchberger(ideal.generators, order);
        benchmark::DoNotOptimize(basis.size());
    }
}
BENCHMARK(BM_GroebnerCaseA)->Unit(benchmark::kMillisecond);

static void BM_CoverSearch(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    TableStore store{Config{}};
    const CharTable& t = store.table(n);
    for (auto _ : state) {
        CoverResult res = min_cover(t, {}, 3);
        benchmark::DoNotOptimize(res.status);
    }
}
BENCHMARK(BM_CoverSearch)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_StaircaseSupp15(benchmark::State& state) {
    for (auto _ : state) {
        TableStore store{Config{}};
        ConnectionEngine engine{store};
        DefectZeroEngine defect{engine};
        benchmark::DoNotOptimize(defect.staircase_p(Partition({7, 5, 3})).degree());
    }
}
BENCHMARK(BM_StaircaseSupp15)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
