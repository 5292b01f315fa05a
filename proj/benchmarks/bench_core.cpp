#include <benchmark/benchmark.h>

#include "qhesim/attacks.hpp"
#include "qhesim/distance.hpp"
#include "qhesim/linalg.hpp"
#include "qhesim/ot_protocol.hpp"
#include "qhesim/qhe_scheme.hpp"
#include "qhesim/random_states.hpp"
#include "qhesim/sot_channels.hpp"

using namespace qhesim;

static void BM_EigHermitian(benchmark::State& state) {
    Rng rng(1);
    const ComplexMatrix m = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        auto eig = eig_hermitian(m);
        benchmark::DoNotOptimize(eig.values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EigHermitian)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void BM_Fidelity(benchmark::State& state) {
    Rng rng(2);
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    const DensityState a(random_density_matrix(dim, rng), RegisterShape{dim});
    const DensityState b(random_density_matrix(dim, rng), RegisterShape{dim});
    for (auto _ : state) benchmark::DoNotOptimize(fidelity(a, b));
}
BENCHMARK(BM_Fidelity)->Arg(4)->Arg(16);

static void BM_PrettyGoodMeasurement(benchmark::State& state) {
    Rng rng(3);
    std::vector<DensityState> ensemble;
    for (int k = 0; k < 4; ++k)
        ensemble.push_back(DensityState(random_density_matrix(16, rng), RegisterShape{16}));
    for (auto _ : state) benchmark::DoNotOptimize(pgm_uniform(ensemble).success);
}
BENCHMARK(BM_PrettyGoodMeasurement);

static void BM_CliffordAverageIdentity(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            choi_distance(sot_channel_compact(0, 1), sot_clifford_average(0, 1)));
}
BENCHMARK(BM_CliffordAverageIdentity);

static void BM_ProtocolOneHonestRun(benchmark::State& state) {
    const auto inst = pointer_instance();
    for (auto _ : state) {
        auto run = run_protocol1_honest(inst, 0, 1);
        benchmark::DoNotOptimize(run.outcome_probs.size());
    }
}
BENCHMARK(BM_ProtocolOneHonestRun);

static void BM_SuperpositionAttack(benchmark::State& state) {
    const auto inst = pointer_instance();
    for (auto _ : state)
        benchmark::DoNotOptimize(bob_superposition_attack(inst, 0, 1).success);
}
BENCHMARK(BM_SuperpositionAttack);

static void BM_SchemeMetricsTrivial(benchmark::State& state) {
    const auto scheme = scheme_trivial();
    for (auto _ : state) benchmark::DoNotOptimize(scheme_metrics(scheme).eps);
}
BENCHMARK(BM_SchemeMetricsTrivial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
