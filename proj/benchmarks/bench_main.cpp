#include <benchmark/benchmark.h>

#include <cmath>

#include "kzq/analytic.hpp"
#include "kzq/hamiltonian.hpp"
#include "kzq/pcf.hpp"
#include "kzq/propagator.hpp"
#include "kzq/ricemele.hpp"
#include "kzq/tomography.hpp"

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kJ = kTwoPi * 31.75e3;

void BM_PcfModerate(benchmark::State& state) {
    const kzq::cxd nu{0.3, -1.7};
    const kzq::cxd z{1.2, 1.2};
    for (auto _ : state) benchmark::DoNotOptimize(kzq::pcf_d(nu, z));
}
BENCHMARK(BM_PcfModerate);

void BM_PcfLargeOrder(benchmark::State& state) {
    const kzq::cxd nu{0.0, -20.0};
    const kzq::cxd z{2.1213203436, 2.1213203436};
    for (auto _ : state) benchmark::DoNotOptimize(kzq::pcf_d(nu, z));
}
BENCHMARK(BM_PcfLargeOrder);

void BM_CrossingClosedForm(benchmark::State& state) {
    const double xc = state.range(0) / 100.0;
    const double dm = 2.0 * kJ * xc;
    const double T = kzq::lz_period_for_tau(kJ, dm, 1.0);
    const kzq::QubitState init = kzq::eigenbasis(kzq::TwoLevel{kJ}, -dm).upper;
    for (auto _ : state)
        benchmark::DoNotOptimize(kzq::symmetric_final_state(kJ, dm, T, init));
}
BENCHMARK(BM_CrossingClosedForm)->Arg(40)->Arg(122)->Arg(700);

void BM_CrossingOde(benchmark::State& state) {
    const double xc = state.range(0) / 100.0;
    const double dm = 2.0 * kJ * xc;
    const double T = kzq::lz_period_for_tau(kJ, dm, 1.0);
    const kzq::TwoLevel h{kJ};
    const kzq::QubitState init = kzq::eigenbasis(h, -dm).upper;
    const kzq::DetuningRamp ramp = kzq::symmetric_ramp(dm, T);
    for (auto _ : state)
        benchmark::DoNotOptimize(kzq::evolve(h, ramp, init));
}
BENCHMARK(BM_CrossingOde)->Arg(40)->Arg(122)->Arg(700);

void BM_RampModeAnalytic(benchmark::State& state) {
    const double dm = kTwoPi * 5.25e3;
    const double T = 32.0 / dm;
    const double p = 1.3 * std::sqrt(dm / T);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            kzq::momentum_resolved_defect(p, dm, T, kzq::Engine::analytic));
}
BENCHMARK(BM_RampModeAnalytic);

void BM_RampTotalDensity(benchmark::State& state) {
    const double dm = kTwoPi * 5.25e3;
    const double T = 32.0 / dm;
    const kzq::MomentumGrid grid =
        kzq::uniform_grid(kzq::cutoff_momentum(dm / T, dm),
                          static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            kzq::total_defect_density(dm, T, grid, kzq::Engine::analytic));
}
BENCHMARK(BM_RampTotalDensity)->Arg(129)->Arg(257);

void BM_TomographyChain(benchmark::State& state) {
    const kzq::QubitState psi{kzq::cxd{0.6, 0.1}, kzq::cxd{0.1, 0.787}};
    const kzq::QubitState target{kzq::cxd{1.0, 0.0}, kzq::cxd{0.0, 0.0}};
    const kzq::ShotConfig cfg{static_cast<std::uint64_t>(state.range(0)), 7};
    for (auto _ : state)
        benchmark::DoNotOptimize(kzq::tomographic_defect(psi, target, cfg));
}
BENCHMARK(BM_TomographyChain)->Arg(100)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
