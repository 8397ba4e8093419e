#include "suq2/calculus/forms.hpp"
#include "suq2/calculus/geometry.hpp"
#include "suq2/calculus/growth.hpp"
#include "suq2/cqalg/haar.hpp"
#include "suq2/cqalg/hopf.hpp"
#include "suq2/fourier/fourier.hpp"
#include "suq2/fourier/inequality.hpp"
#include "suq2/spectral/dirac.hpp"
#include "suq2/verify/suites.hpp"

#include <benchmark/benchmark.h>

using namespace suq2;
using cqalg::AlgebraElement;
using cqalg::Spin;

static void BM_ElementProduct(benchmark::State& state) {
    verify::RandomSampler s(1);
    auto x = s.element(static_cast<int>(state.range(0)), 6), y = s.element(static_cast<int>(state.range(0)), 6);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_ElementProduct)->Arg(2)->Arg(4)->Arg(6);

static void BM_Coproduct(benchmark::State& state) {
    verify::RandomSampler s(2);
    auto x = s.element(static_cast<int>(state.range(0)), 6);
    for (auto _ : state) benchmark::DoNotOptimize(cqalg::coproduct(x));
}
BENCHMARK(BM_Coproduct)->Arg(2)->Arg(4);

static void BM_Haar(benchmark::State& state) {
    verify::RandomSampler s(3);
    auto x = s.element(static_cast<int>(state.range(0)), 8);
    auto f = x * cqalg::star(x);
    for (auto _ : state) benchmark::DoNotOptimize(cqalg::haar(f));
}
BENCHMARK(BM_Haar)->Arg(2)->Arg(4);

static void BM_FourierTransform(benchmark::State& state) {
    verify::RandomSampler s(4);
    auto f = s.element(static_cast<int>(state.range(0)), 6);
    for (auto _ : state) benchmark::DoNotOptimize(fourier::fourier_transform(f));
}
BENCHMARK(BM_FourierTransform)->Arg(2)->Arg(3)->Arg(4);

static void BM_OrthogonalitySuite(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify::orthogonality_suite(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_OrthogonalitySuite)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_SymbolsWeight(benchmark::State& state) {
    Spin l(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(calculus::partial_symbols_weight(calculus::CalculusKind::FourD, l));
        benchmark::DoNotOptimize(calculus::commutation_symbols_weight(calculus::CalculusKind::FourD, l));
    }
}
BENCHMARK(BM_SymbolsWeight)->Arg(2)->Arg(6)->Arg(12);

static void BM_ExteriorD(benchmark::State& state) {
    verify::RandomSampler s(5);
    auto f = s.element(static_cast<int>(state.range(0)), 6);
    for (auto _ : state) benchmark::DoNotOptimize(calculus::exterior_d(calculus::CalculusKind::FourD, f));
}
BENCHMARK(BM_ExteriorD)->Arg(2)->Arg(4);

static void BM_GrowthReport(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(calculus::growth_report(0.5, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GrowthReport)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_DiracEigen(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(calculus::dirac_eigen_report(Spin(static_cast<int>(state.range(0))), 0.5));
}
BENCHMARK(BM_DiracEigen)->Arg(1)->Arg(3);

static void BM_CommutatorNorm(benchmark::State& state) {
    auto spec = spectral::DiracSpec::q_deformed();
    int tw = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(spectral::commutator_norm_sq_expansion(Spin(tw), Spin(tw), 0, tw, tw, 0, spec));
}
BENCHMARK(BM_CommutatorNorm)->Arg(1)->Arg(2)->Arg(3);

static void BM_ClassicalLpNorm(benchmark::State& state) {
    verify::RandomSampler s(6);
    auto f = s.element(3);
    fourier::ClassicalSampler sampler({static_cast<int>(state.range(0)), static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(sampler.lp_norm(sampler.values(f), 1.5));
}
BENCHMARK(BM_ClassicalLpNorm)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_PaleyConstant(benchmark::State& state) {
    std::map<int, double> phi;
    for (int tw = 0; tw <= state.range(0); ++tw) phi[tw] = 1.0 / (tw + 1);
    qarith::QPoint q(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(fourier::paley_constant(phi, q));
}
BENCHMARK(BM_PaleyConstant)->Arg(8)->Arg(64);
BENCHMARK_MAIN();
