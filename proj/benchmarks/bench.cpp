#include <benchmark/benchmark.h>

#include <zetalin/at_one.hpp>
#include <zetalin/jobspec.hpp>
#include <zetalin/numeric.hpp>

using namespace zetalin;

namespace {

Brick make_brick(int N, int j, int m) {
    Brick b;
    for (int i = 0; i < N; ++i) {
        b.s.push_back(2);
        b.j.push_back(j);
        b.m.push_back(i == 0 ? 0 : m);
        b.args.push_back(ZMon::var(N, i));
    }
    return b;
}

void BM_decompose_brick(benchmark::State& state) {
    Brick b = make_brick(static_cast<int>(state.range(0)), 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(decompose_brick(b));
}
BENCHMARK(BM_decompose_brick)->Arg(1)->Arg(2)->Arg(3);

void BM_q_poly(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    std::vector<int> s(N, 2);
    std::vector<ZMon> args;
    for (int i = 0; i < N; ++i) args.push_back(ZMon::var(N, i));
    for (auto _ : state) benchmark::DoNotOptimize(q_poly(s, 1, 6, args));
}
BENCHMARK(BM_q_poly)->Arg(2)->Arg(3);

void BM_decompose_rational(benchmark::State& state) {
    MPoly P = parse_polynomial("5*k2^2 - k1^2 - 4*k1*k2 - 3*k1 + 7*k2", 2);
    MultSeries s = normalize_shifts(MultSeries::make(2, P, {4, 3}, {2, 3}, {0, 1}));
    for (auto _ : state) benchmark::DoNotOptimize(decompose_rational(s));
}
BENCHMARK(BM_decompose_rational);

void BM_decompose_at_one(benchmark::State& state) {
    MPoly P = parse_polynomial("5*k2^2 - k1^2 - 4*k1*k2 - 3*k1 + 7*k2", 2);
    MultSeries s = MultSeries::make(2, P, {4, 3}, {2, 3}, {0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(decompose_at_one(s));
}
BENCHMARK(BM_decompose_at_one);

void BM_mzv_numeric(benchmark::State& state) {
    Composition c = {2, 1, 1};
    for (auto _ : state) benchmark::DoNotOptimize(mzv_numeric(c, 128));
}
BENCHMARK(BM_mzv_numeric);

void BM_regularize_divergent_word(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(regularize_sh("1101011"));
    }
}
BENCHMARK(BM_regularize_divergent_word);

} // namespace

BENCHMARK_MAIN();
