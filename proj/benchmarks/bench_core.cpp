#include <benchmark/benchmark.h>

#include <vector>

#include "ccx/ctransform.hpp"
#include "ccx/monotone.hpp"
#include "ccx/selfdual.hpp"
#include "ccx/space.hpp"
#include "ccx/transport.hpp"
#include "fixtures.hpp"

namespace {

ccx::ValueTable random_values(ccxt::Rng& rng, const ccx::FiniteSpace& sp) {
    std::vector<double> v(static_cast<std::size_t>(sp.size()));
    for (double& e : v) e = rng.uniform(-1.0, 1.0);
    return ccx::make_value_table(sp, v);
}

void BM_CConjugate(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ccxt::Rng rng(1);
    ccx::Coupling c = ccxt::random_coupling(rng, n, n);
    ccx::ValueTable f = random_values(rng, c.x);
    for (auto _ : state) benchmark::DoNotOptimize(ccx::c_conjugate(f, c));
    state.SetComplexityN(n);
}

void BM_Fitzpatrick(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ccxt::Rng rng(2);
    ccx::Coupling c = ccxt::random_coupling(rng, n, n);
    ccx::Relation M = ccxt::random_maximal_relation(rng, c);
    for (auto _ : state) benchmark::DoNotOptimize(ccx::fitzpatrick(M, c));
    state.SetComplexityN(n);
}

void BM_SynthesizeSelfdual(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ccx::Coupling c = ccx::make_neg_half_sqdist_coupling(ccx::FiniteSpace::circle(n));
    ccx::FitzpatrickFunction fp =
        ccx::fitzpatrick(ccx::graph_of_map(ccxt::rotation_map(n, 1)), c);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            ccx::synthesize_selfdual(fp.F, fp.Fc, ccx::SymmetrizedCoupling{c}));
    state.SetComplexityN(n);
}

void BM_SolveMkSym(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ccx::Coupling c = ccx::make_neg_half_sqdist_coupling(ccx::FiniteSpace::circle(n));
    std::vector<int> T = ccxt::rotation_map(n, 1);
    ccx::DiscreteMeasure mu = ccx::uniform_measure(c.x);
    for (auto _ : state) benchmark::DoNotOptimize(ccx::solve_mk_sym(c, T, mu));
    state.SetComplexityN(n);
}

void BM_CyclicMonotonicity(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    ccxt::Rng rng(3);
    ccx::Coupling c = ccxt::random_coupling(rng, 12, 12);
    // 14 members stays inside the enumeration cap of every order up to 5.
    ccx::Relation M = ccxt::random_relation(rng, c, 14, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(ccx::is_c_cyclically_monotone(M, c, order));
}

}  // namespace

BENCHMARK(BM_CConjugate)->RangeMultiplier(4)->Range(16, 256)->Complexity();
BENCHMARK(BM_Fitzpatrick)->RangeMultiplier(2)->Range(8, 32)->Complexity();
BENCHMARK(BM_SynthesizeSelfdual)->RangeMultiplier(2)->Range(8, 32)->Complexity();
BENCHMARK(BM_SolveMkSym)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK(BM_CyclicMonotonicity)->DenseRange(2, 5, 1);

BENCHMARK_MAIN();
