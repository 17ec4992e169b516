#include <benchmark/benchmark.h>

#include "shockfront/envelope.hpp"
#include "shockfront/polar.hpp"
#include "shockfront/reflection.hpp"

using namespace shockfront;

static void BM_DownstreamState(benchmark::State& state) {
    const GasModel gas(5.0 / 3.0);
    const FlowState up{1.0, Vec2{0.0, -2.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(downstream_state(gas, up, Vec2{0, 0}, Vec2{0, -1}));
    }
}
BENCHMARK(BM_DownstreamState);

static void BM_PolarCurve(benchmark::State& state) {
    const GasModel gas(5.0 / 3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(polar_curve(gas, 1.0, Vec2{2.0, 0.0},
                                             static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_PolarCurve)->Arg(64)->Arg(256);

static void BM_SolveTurning(benchmark::State& state) {
    const GasModel gas(5.0 / 3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_turning(gas, 1.0, Vec2{2.0, 0.0}, 0.25,
                                               TurnSide::Right));
    }
}
BENCHMARK(BM_SolveTurning);

static void BM_EnvelopeRhsExplicit(benchmark::State& state) {
    const GasModel gas(5.0 / 3.0);
    double r = 1.0 + 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(envelope_rhs(gas, r, 1.0, EnvelopeRhsMode::Explicit));
        r = (r < 10.0) ? r * 1.01 : 1.0 + 1e-6;
    }
}
BENCHMARK(BM_EnvelopeRhsExplicit);

static void BM_EnvelopeRhsNumeric(benchmark::State& state) {
    const GasModel gas(5.0 / 3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(envelope_rhs(gas, 1.5, 1.0, EnvelopeRhsMode::Numeric));
    }
}
BENCHMARK(BM_EnvelopeRhsNumeric);

static void BM_IntegrateEnvelope(benchmark::State& state) {
    const GasModel gas(5.0 / 3.0);
    const double ths = theta_sonic(gas, 1.0, 0.0);
    const RRConfiguration cfg = build_local_rr(gas, 1.0, 0.0, ths);
    EnvelopeOptions opts;
    opts.stops.wallA = cfg.wallA;
    opts.stops.wallB = cfg.wallB;
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_envelope(gas, cfg.xi_C0, cfg.v_I, 1.0, opts));
    }
}
BENCHMARK(BM_IntegrateEnvelope);

static void BM_ThetaSonic(benchmark::State& state) {
    const GasModel gas(5.0 / 3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta_sonic(gas, 1.0, 0.0));
    }
}
BENCHMARK(BM_ThetaSonic);

static void BM_ClassifyFeasibility(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_feasibility(5.0 / 3.0, 1.0));
    }
}
BENCHMARK(BM_ClassifyFeasibility);

BENCHMARK_MAIN();
