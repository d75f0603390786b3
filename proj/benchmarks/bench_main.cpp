// Microbenchmarks for the hot paths: quadrature, state evaluation, the
// information-theoretic reports, and the finite-difference eigensolver.

#include <benchmark/benchmark.h>

#include <cmath>

#include "pdmwell/fdsolver.hpp"
#include "pdmwell/infotheory.hpp"
#include "pdmwell/quadrature.hpp"
#include "pdmwell/states.hpp"

using namespace pdmwell;

namespace {

void BM_IntegrateSech2(benchmark::State& state) {
    for (auto _ : state) {
        const auto r = integrate([](double x) { return 1.0 / std::pow(std::cosh(x), 2); });
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_IntegrateSech2);

void BM_IntegrateSplitNodes(benchmark::State& state) {
    ModelParams p;
    const BoundState s = build_state({2, 0}, p);
    const std::vector<double> nodes = position_nodes(s);
    for (auto _ : state) {
        const auto r = integrate_split(
            [&s](double x) { return -rho_ln_rho(s.density(x)); }, nodes);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_IntegrateSplitNodes);

void BM_StateEval(benchmark::State& state) {
    ModelParams p;
    const BoundState s = build_state({3, 1}, p);
    double x = -6.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.psi(x));
        x += 1e-4;
        if (x > 6.0) x = -6.0;
    }
}
BENCHMARK(BM_StateEval);

void BM_MomentumEval(benchmark::State& state) {
    ModelParams p;
    const BoundState s = build_state({3, 1}, p);
    const MomentumEvaluator phi = momentum_state(s);
    double q = -8.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi.eval(q));
        q += 1e-4;
        if (q > 8.0) q = -8.0;
    }
}
BENCHMARK(BM_MomentumEval);

void BM_FourierPoint(benchmark::State& state) {
    ModelParams p;
    const BoundState s = build_state({1, 1}, p);
    for (auto _ : state) {
        const auto v = fourier_point([&s](double x) { return s.psi(x); }, 1.5);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_FourierPoint);

void BM_EntropyReport(benchmark::State& state) {
    ModelParams p;
    p.a = 2.0;
    const BoundState s = build_state({2, 1}, p);
    for (auto _ : state) {
        const EntropyReport r = entropy_report(s);
        benchmark::DoNotOptimize(r.sum);
    }
}
BENCHMARK(BM_EntropyReport);

void BM_FisherReport(benchmark::State& state) {
    ModelParams p;
    const BoundState s = build_state({2, 2}, p);
    for (auto _ : state) {
        const FisherReport r = fisher_report(s);
        benchmark::DoNotOptimize(r.product);
    }
}
BENCHMARK(BM_FisherReport);

void BM_FDSolve(benchmark::State& state) {
    ModelParams p;
    FDSpec spec;
    spec.N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const SpectrumResult sr = solve(p, spec);
        benchmark::DoNotOptimize(sr.eigenvalues[0]);
    }
}
BENCHMARK(BM_FDSolve)->Arg(1001)->Arg(2001)->Arg(4001);

}  // namespace

BENCHMARK_MAIN();
