#include "eitrace/coweight.hpp"
#include "eitrace/harness.hpp"
#include "eitrace/hocolim.hpp"

#include <benchmark/benchmark.h>

using namespace eitrace;

namespace {

CategoryPtr bench_category(std::int64_t which)
{
    switch (which) {
    case 0: return make_category(pushout_category());
    case 1: return make_category(symmetric_group(3));
    case 2: return make_category(product(pushout_category(), cyclic_group(2)));
    default: return make_category(translation_groupoid(6, {1, 2, 0, 3}));
    }
}

void BM_Resolution(benchmark::State& state)
{
    const CategoryPtr op = make_category(opposite(*bench_category(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(projective_resolution(op).length());
}
BENCHMARK(BM_Resolution)->DenseRange(0, 3);

void BM_TheoremCoefficients(benchmark::State& state)
{
    const CategoryPtr c = bench_category(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(theorem_coefficients(*c).lambda.size());
}
BENCHMARK(BM_TheoremCoefficients)->DenseRange(0, 3);

void BM_Moebius(benchmark::State& state)
{
    std::vector<std::vector<bool>> leq(state.range(0), std::vector<bool>(state.range(0)));
    for (std::size_t i = 0; i < leq.size(); ++i)
        for (std::size_t j = i; j < leq.size(); ++j)
            leq[i][j] = true;
    const FinCategory chain = poset_category(leq);
    for (auto _ : state)
        benchmark::DoNotOptimize(coweighting_mobius(chain).lambda.size());
}
BENCHMARK(BM_Moebius)->Arg(4)->Arg(8)->Arg(12);

void BM_VerifyTheorem(benchmark::State& state)
{
    const CategoryPtr c = bench_category(state.range(0));
    const TwistedEndo f = generate_diagram(c, 42, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_theorem(f).verdict());
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(0, 3);

void BM_FuzzCase(benchmark::State& state)
{
    FuzzOptions options;
    options.cases = 1;
    options.threads = 1;
    for (auto _ : state) {
        options.seed = static_cast<std::uint64_t>(state.iterations());
        benchmark::DoNotOptimize(fuzz(options).front().verdict);
    }
}
BENCHMARK(BM_FuzzCase);

} // namespace

BENCHMARK_MAIN();
