#include <benchmark/benchmark.h>

#include "jordan/catalog/assoc_group.hpp"
#include "jordan/core/instances.hpp"
#include "jordan/geometry/tensors.hpp"
#include "jordan/lie/validators.hpp"
#include "jordan/scalar/random.hpp"
#include "jordan/spaces/m_alpha_space.hpp"
#include "jordan/spaces/u_a_space.hpp"

using namespace jordan;
using Q = Rational;
using F = PrimeFieldElement;

static void BM_QuasiInverseRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = rectangular_pair<Q>(n, n);
  Rng rng(1);
  const auto x = random_matrix<Q>(p.plus, rng);
  const auto a = random_matrix<Q>(p.minus, rng);
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(quasi_inverse(p, x, a));
    } catch (const NotQuasiInvertible&) {
    }
  }
}
BENCHMARK(BM_QuasiInverseRational)->Arg(1)->Arg(2)->Arg(3);

static void BM_UaProductGF7(benchmark::State& state) {
  PrimeFieldElement::ModulusScope scope(7);
  const auto p = rectangular_pair<F>(2, 2);
  Rng rng(2);
  const auto u = u_a_space(p, Matrix<F>::identity(2));
  std::vector<Matrix<F>> pts;
  while (pts.size() < 16) {
    auto x = random_matrix<F>(p.plus, rng);
    if (ua_member(u, x)) pts.push_back(std::move(x));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ua_mu(u, pts[i % 16], pts[(i + 5) % 16]));
    ++i;
  }
}
BENCHMARK(BM_UaProductGF7);

static void BM_MAlphaProductRational(benchmark::State& state) {
  const auto t = rectangular_jts<Q>(2, 2);
  const auto m = m_alpha_space(t, certify(t, LinearOperator<Q>::identity(t.shape)));
  Rng rng(3);
  std::vector<Matrix<Q>> pts;
  while (pts.size() < 8) {
    auto x = random_matrix<Q>(t.shape, rng);
    if (m_alpha_member(m, x)) pts.push_back(std::move(x));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(m_alpha_mu(m, pts[i % 8], pts[(i + 3) % 8]));
    } catch (const Error&) {
    }
    ++i;
  }
}
BENCHMARK(BM_MAlphaProductRational);

static void BM_JtsValidationGF5(benchmark::State& state) {
  PrimeFieldElement::ModulusScope scope(5);
  const auto t = rectangular_jts<F>(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(validate_jts(t).all_pass());
}
BENCHMARK(BM_JtsValidationGF5)->Unit(benchmark::kMillisecond);

static void BM_GroupSweepGF5(benchmark::State& state) {
  PrimeFieldElement::ModulusScope scope(5);
  const auto g = deformed_group(matrix_algebra<F>(2), block_idempotent<F>(2, 1));
  std::vector<Matrix<F>> members;
  for (const auto& x : enumerate_elements({2, 2}))
    if (group_member(g, x)) members.push_back(x);
  for (auto _ : state) benchmark::DoNotOptimize(group_axiom_sweep(g, members));
}
BENCHMARK(BM_GroupSweepGF5)->Unit(benchmark::kMillisecond);

static void BM_DensityLine(benchmark::State& state) {
  using Fl = FloatScalar;
  const auto t = scalar_jts<Fl>();
  const auto m = m_alpha_space(t, certify(t, LinearOperator<Fl>::identity({1, 1})));
  double x = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(density(m, Matrix<Fl>(1, 1, {Fl(x)})));
    x = x > 1.0 ? -1.0 : x + 0.01;
  }
}
BENCHMARK(BM_DensityLine);

BENCHMARK_MAIN();
