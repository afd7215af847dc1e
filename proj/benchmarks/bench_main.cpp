#include <benchmark/benchmark.h>

#include "bethe/comb.hpp"
#include "bethe/params.hpp"
#include "bethe/perm_x.hpp"
#include "bethe/yangian.hpp"

namespace {

bethe::XiShape shape_arg(const benchmark::State& st) {
    return {static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), static_cast<int>(st.range(2))};
}

void BM_VermaAct(benchmark::State& st) {
    bethe::Sampler s(1);
    const auto hw = s.highest_weight();
    const bethe::ModuleVector w(bethe::PbwMonomial::of(1, 1, 1, 1, 1, 1), bethe::Rational(1));
    for (auto _ : st) {
        bethe::VermaModule mod(hw);  // fresh cache each round
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b) benchmark::DoNotOptimize(mod.act(a, b, w));
    }
}
BENCHMARK(BM_VermaAct);

void BM_DirectEngine(benchmark::State& st) {
    const auto shape = shape_arg(st);
    const auto pt = bethe::Sampler(2).point(shape);
    for (auto _ : st) {
        bethe::EvalModule mod(pt.context());
        benchmark::DoNotOptimize(bethe::weight_function_direct(shape, pt.t, mod));
    }
}
BENCHMARK(BM_DirectEngine)->Args({1, 1, 1})->Args({2, 1, 1})->Args({1, 2, 1})->Args({2, 2, 2});

void BM_Main2Engine(benchmark::State& st) {
    const auto shape = shape_arg(st);
    const auto pt = bethe::Sampler(3).point(shape);
    for (auto _ : st) benchmark::DoNotOptimize(bethe::weight_function_main2(shape, pt.t, pt.context()));
}
BENCHMARK(BM_Main2Engine)->Args({1, 1, 1})->Args({2, 1, 1})->Args({1, 2, 1})->Args({2, 2, 2});

void BM_MainEngine(benchmark::State& st) {
    const auto shape = shape_arg(st);
    const auto pt = bethe::Sampler(4).point(shape);
    for (auto _ : st) benchmark::DoNotOptimize(bethe::weight_function_main(shape, pt.t, pt.context()));
}
BENCHMARK(BM_MainEngine)->Args({1, 2, 1})->Args({2, 2, 2});

void BM_XRow(benchmark::State& st) {
    const int k = static_cast<int>(st.range(0));
    const auto z = bethe::Sampler(5).generic(static_cast<std::size_t>(k));
    const auto s0 = bethe::Permutation::longest(k);
    for (auto _ : st) benchmark::DoNotOptimize(bethe::x_row(s0, z));
}
BENCHMARK(BM_XRow)->DenseRange(2, 5);

}  // namespace
BENCHMARK_MAIN();
