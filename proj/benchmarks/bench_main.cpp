#include <benchmark/benchmark.h>

#include <array>

#include "galileo/expr.hpp"
#include "galileo/surface.hpp"
#include "galileo/translation.hpp"
#include "galileo/verify.hpp"

using namespace galileo;

namespace {

const Surface& wavy() {
  static const Surface s = Surface::parse("u + 0.1*sin(v)", "v*exp(u/3)", "cos(u*v) + log(1 + u^2)");
  return s;
}

}  // namespace

static void BM_ParseExpression(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(Expr::parse("sin(u*v)^2 + exp(-u/2)*sqrt(1 + v^2) - atan(u - v)", {"u", "v"}));
  }
}
BENCHMARK(BM_ParseExpression);

static void BM_EvalJet2(benchmark::State& state) {
  const Expr e = Expr::parse("sin(u*v)^2 + exp(-u/2)*sqrt(1 + v^2) - atan(u - v)", {"u", "v"});
  const Jet2 u = Jet2::seed_u(0.3), v = Jet2::seed_v(-0.7);
  for (auto _ : state) benchmark::DoNotOptimize(eval_jet2(e, u, v));
}
BENCHMARK(BM_EvalJet2);

static void BM_CurvaturesJets(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(curvatures(wavy(), 0.3, -0.4));
}
BENCHMARK(BM_CurvaturesJets);

static void BM_CurvaturesFiniteDifferences(benchmark::State& state) {
  const FdSteps steps{};
  for (auto _ : state) benchmark::DoNotOptimize(curvatures_fd(wavy(), 0.3, -0.4, steps));
}
BENCHMARK(BM_CurvaturesFiniteDifferences);

static void BM_SampleGrid(benchmark::State& state) {
  const SurfaceFamily f = make_cmc_cylinder({0.5, CmcVariant::B_i, Expr::parse("u^3", {"u"}), 0, {}},
                                            Domain{{-1.8, 1.8}, {-1.8, 1.8}});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample(f, n, n));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_SampleGrid)->Arg(21)->Arg(101);

static void BM_CmcOdeSolve(benchmark::State& state) {
  Type4CmcOdeParams p{};
  p.steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_cmc_ode(p));
}
BENCHMARK(BM_CmcOdeSolve)->Arg(1000)->Arg(4000);

BENCHMARK_MAIN();
