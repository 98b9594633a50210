#include <benchmark/benchmark.h>

#include "focku/focku.hpp"

using namespace focku;

namespace {

FockContext context(benchmark::State& state)
{
    FockContext ctx;
    ctx.trunc = static_cast<int>(state.range(0));
    return ctx;
}

FockVector sample(const FockContext& ctx)
{
    Rng rng(7);
    return random_vector(ctx, rng, ctx.trunc, 0.9);
}

} // namespace

static void BM_Annihilate(benchmark::State& state)
{
    const auto f = sample(context(state));
    for (auto _ : state)
        benchmark::DoNotOptimize(annihilate(f));
}
BENCHMARK(BM_Annihilate)->RangeMultiplier(4)->Range(16, 1024);

static void BM_SelfAdjointB(benchmark::State& state)
{
    const auto f = sample(context(state));
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_selfadjoint(f, SelfAdjoint::B));
}
BENCHMARK(BM_SelfAdjointB)->RangeMultiplier(4)->Range(16, 1024);

static void BM_UncertaintyReport(benchmark::State& state)
{
    const auto f = sample(context(state));
    for (auto _ : state)
        benchmark::DoNotOptimize(uncertainty_report(f));
}
BENCHMARK(BM_UncertaintyReport)->RangeMultiplier(4)->Range(16, 1024);

static void BM_GaussianAdaptive(benchmark::State& state)
{
    FockContext ctx;
    const GaussianParams p{1.0, 0.01 * static_cast<double>(state.range(0)), 0.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(gaussian_coeffs_adaptive(p, ctx));
}
BENCHMARK(BM_GaussianAdaptive)->Arg(10)->Arg(25)->Arg(40)->Arg(45);

static void BM_FockPairMatrices(benchmark::State& state)
{
    const auto ctx = context(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(fock_pair(ctx));
}
BENCHMARK(BM_FockPairMatrices)->RangeMultiplier(4)->Range(16, 256);

static void BM_CommutatorExtended(benchmark::State& state)
{
    const auto dim = static_cast<Eigen::Index>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(interior_commutator_error(dim));
}
BENCHMARK(BM_CommutatorExtended)->RangeMultiplier(4)->Range(16, 256);
BENCHMARK_MAIN();
