// Microbenchmarks of the hot operations; module dimensions (m, n) are the
// benchmark arguments.

#include <benchmark/benchmark.h>

#include "matriple/suites.hpp"

using namespace matriple;

namespace {

const ToleranceConfig tol;

Matrix instance(Eigen::Index rows, Eigen::Index cols, std::uint64_t salt) {
  Rng rng = Rng::derive(7, "bench", static_cast<std::uint64_t>(rows),
                        static_cast<std::uint64_t>(cols), salt);
  return rng.gaussian_matrix(rows, cols);
}

void BM_TripleProduct(benchmark::State& state) {
  const Eigen::Index m = state.range(0);
  const Eigen::Index n = state.range(1);
  Matrix x = instance(m, n, 0);
  Matrix y = instance(m, n, 1);
  Matrix z = instance(m, n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(triple_product(x, y, z));
  }
}

void BM_BoxAssembly(benchmark::State& state) {
  const Eigen::Index m = state.range(0);
  const Eigen::Index n = state.range(1);
  Matrix x = instance(m, n, 0);
  Matrix y = instance(m, n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(box(x, y));
  }
}

void BM_JordanResidual(benchmark::State& state) {
  const Eigen::Index m = state.range(0);
  const Eigen::Index n = state.range(1);
  Matrix a = instance(m, n, 0);
  Matrix b = instance(m, n, 1);
  Matrix c = instance(m, n, 2);
  Matrix d = instance(m, n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jordan_residual(a, b, c, d));
  }
}

void BM_SqrtPsd(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  Matrix g = instance(n, n, 0);
  Matrix p = g.adjoint() * g;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sqrt_psd(p, tol));
  }
}

void BM_BergmannSqrt(benchmark::State& state) {
  const Eigen::Index m = state.range(0);
  const Eigen::Index n = state.range(1);
  Rng rng = Rng::derive(7, "bench.ball", m, n, 0);
  BallPoint c = generate_ball_point(ModuleSpace{m, n}, rng, tol);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bergmann_sqrt(c.element(), tol));
  }
}

void BM_Transvect(benchmark::State& state) {
  const Eigen::Index m = state.range(0);
  const Eigen::Index n = state.range(1);
  Rng rng = Rng::derive(7, "bench.ball", m, n, 1);
  BallPoint c = generate_ball_point(ModuleSpace{m, n}, rng, tol);
  BallPoint x = generate_ball_point(ModuleSpace{m, n}, rng, tol);
  Transvection g = Transvection::make(c, tol);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transvect(g, x, tol));
  }
}

void BM_AxiomsSuite(benchmark::State& state) {
  SuiteConfig cfg;
  cfg.dims = {{2, 2}};
  cfg.trials = 10;
  cfg.suites = {Suite::Axioms};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_suites(cfg));
  }
}

}  // namespace

BENCHMARK(BM_TripleProduct)->Args({2, 2})->Args({4, 4});
BENCHMARK(BM_BoxAssembly)->Args({2, 2})->Args({4, 4});
BENCHMARK(BM_JordanResidual)->Args({2, 2})->Args({4, 4});
BENCHMARK(BM_SqrtPsd)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(BM_BergmannSqrt)->Args({2, 2})->Args({4, 4});
BENCHMARK(BM_Transvect)->Args({2, 2})->Args({4, 4});
BENCHMARK(BM_AxiomsSuite);

BENCHMARK_MAIN();
