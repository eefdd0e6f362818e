#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "fokas/problem_bbm.hpp"
#include "fokas/problem_heat_nonlocal.hpp"
#include "fokas/problem_stokes.hpp"
#include "fokas/reference_solvers.hpp"
#include "fokas/transform.hpp"

using namespace fokas;

namespace {

constexpr double kPi = std::numbers::pi;

const std::shared_ptr<const TransformPair>& heat() {
  static const auto pair = [] {
    const auto K = SensorKernel::bump();
    return heat_pair(K, select_rho(K));
  }();
  return pair;
}

}  // namespace

// Gauss-Kronrod adaptive integration of an oscillatory entire function on a segment.
static void BM_IntegrateSegment(benchmark::State& state) {
  const double k = static_cast<double>(state.range(0));
  auto f = [k](Complex z) { return std::exp(Complex(0.0, k) * z) * std::exp(-z * z); };
  const auto seg = ContourSegment::segment(Complex(-3.0, 0.0), Complex(3.0, 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_segment(f, seg, {}));
}
BENCHMARK(BM_IntegrateSegment)->Arg(1)->Arg(10)->Arg(100);

static void BM_StokesForwardDPlus(benchmark::State& state) {
  const auto pair = stokes_pair({StokesBoundary::Neumann});
  const auto phi = InitialDatum::exponential(1.0, 2, 1.0);
  const Complex l = std::polar(static_cast<double>(state.range(0)), kPi / 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(forward(*pair, phi, Region::BoundaryDPlus, l));
}
BENCHMARK(BM_StokesForwardDPlus)->Arg(1)->Arg(10)->Arg(40);

// Nested zeta^+ / Delta quadrature on dD_rho^+; cost grows with |lambda|.
static void BM_HeatForwardDRhoPlus(benchmark::State& state) {
  const auto& pair = heat();
  const auto phi = heat_cosine_datum(SensorKernel::bump());
  const Complex l = std::polar(static_cast<double>(state.range(0)), 3.0 * kPi / 8.0);
  for (auto _ : state) benchmark::DoNotOptimize(forward(*pair, phi, Region::BoundaryDRhoPlus, l));
}
BENCHMARK(BM_HeatForwardDRhoPlus)->Arg(4)->Arg(40)->Arg(200)->Unit(benchmark::kMicrosecond);

static void BM_BbmForwardCircle(benchmark::State& state) {
  const auto pair = bbm_pair();
  const auto phi = InitialDatum::exponential(1.0, 1, 1.0);
  const Complex l = Complex(0.0, 1.0) + std::polar(0.5, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(forward(*pair, phi, Region::CircleC, l));
}
BENCHMARK(BM_BbmForwardCircle);

static void BM_DeltaZeroCount(benchmark::State& state) {
  const auto K = SensorKernel::bump();
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_zero_count(K, Complex(-20.0, -20.0), Complex(20.0, 20.0)));
  }
}
BENCHMARK(BM_DeltaZeroCount)->Unit(benchmark::kMillisecond);

static void BM_SelectRho(benchmark::State& state) {
  const auto K = SensorKernel::bump();
  for (auto _ : state) benchmark::DoNotOptimize(select_rho(K));
}
BENCHMARK(BM_SelectRho)->Unit(benchmark::kMillisecond)->Iterations(3);

// Coefficient build (forward transforms at every inverse-contour node).
static void BM_BbmCoefficientBuild(benchmark::State& state) {
  const auto pair = bbm_pair();
  const auto Q = InitialDatum::exponential(1.0, 1, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_spectral_coefficient(pair, Q, {}, {{0.5, 1.0, 2.0}, {0.1, 0.5}}));
  }
}
BENCHMARK(BM_BbmCoefficientBuild)->Unit(benchmark::kMillisecond);

// Evaluation of q(x, t) from a tabulated coefficient.
static void BM_StokesCoefficientEvaluate(benchmark::State& state) {
  const auto pair = stokes_pair({StokesBoundary::Neumann});
  const auto Q = InitialDatum::exponential(1.0, 2, 1.0);
  static const auto coefficient = build_spectral_coefficient(pair, Q, {}, {{1.0, 2.0}, {0.1}});
  for (auto _ : state) benchmark::DoNotOptimize(coefficient.evaluate(1.5, 0.1));
}
BENCHMARK(BM_StokesCoefficientEvaluate)->Unit(benchmark::kMicrosecond);

static void BM_SineSolution(benchmark::State& state) {
  const auto Q = InitialDatum::gaussian(1.0, 1, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(heat_dirichlet_sine_solution(Q, 1.0, 0.25));
}
BENCHMARK(BM_SineSolution)->Unit(benchmark::kMicrosecond);

static void BM_FdStokes(benchmark::State& state) {
  const auto Q = InitialDatum::exponential(1.0, 2, 1.0);
  const double dx = 30.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fd_stokes_halfline(Q, {}, dx, 0.2 / 400, 0.2, 30.0, {.record_every = 400}));
  }
}
BENCHMARK(BM_FdStokes)->Arg(1500)->Arg(3000)->Unit(benchmark::kMillisecond);

static void BM_FdHeatNonlocal(benchmark::State& state) {
  const auto K = SensorKernel::bump();
  const auto Q = heat_cosine_datum(K);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fd_heat_nonlocal(K, Q, 1.0 / 200, 0.2 / 400, 0.2, {.record_every = 400}));
  }
}
BENCHMARK(BM_FdHeatNonlocal)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
