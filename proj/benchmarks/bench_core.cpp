#include <random>

#include <benchmark/benchmark.h>

#include "faithcert/lie/certificates.hpp"
#include "faithcert/sklyanin/tower.hpp"

using namespace faithcert;

namespace {

Matrix random_matrix(Field field, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  Matrix m(field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar::from_int(field, dist(rng));
  return m;
}

void BM_RrefRational(benchmark::State& state) {
  const Matrix m = random_matrix(Field::rationals(), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(10)->Arg(20)->Arg(40);

void BM_RrefPrime(benchmark::State& state) {
  const Matrix m = random_matrix(Field::prime(1000003), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefPrime)->Arg(10)->Arg(20)->Arg(40);

void BM_UeaMultiplySl2(benchmark::State& state) {
  const auto g = std::make_shared<const lie::LieAlgebra>(lie::LieAlgebra::builtin("sl2"));
  const auto e = lie::UeaElement::generator(g, 1), f = lie::UeaElement::generator(g, 2);
  const auto a = e.pow(static_cast<unsigned>(state.range(0)));
  const auto b = f.pow(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(b * a);
}
BENCHMARK(BM_UeaMultiplySl2)->Arg(2)->Arg(4)->Arg(6);

void BM_EnvSuiteNonabelian2(benchmark::State& state) {
  const auto g = std::make_shared<const lie::LieAlgebra>(lie::LieAlgebra::builtin("nonabelian2"));
  const auto x = lie::UeaElement::generator(g, 0);
  const auto d = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lie::env_suite(g, x, d, d + 1));
}
BENCHMARK(BM_EnvSuiteNonabelian2)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

const sklyanin::SklyaninContext& default_context() {
  const Field Q = Field::rationals();
  static const sklyanin::SklyaninContext ctx(ecurve::HesseCurve(Scalar::from_int(Q, 2)),
                                             ecurve::ProjPoint::make(Q, 1, 2, 3));
  return ctx;
}

void BM_QuotientBuild(benchmark::State& state) {
  const auto& ctx = default_context();
  for (auto _ : state)
    benchmark::DoNotOptimize(sklyanin::GradedQuotient(ctx.r2(), static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_QuotientBuild)->Arg(4)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_SklyaninSuite(benchmark::State& state) {
  const auto& ctx = default_context();
  for (auto _ : state)
    benchmark::DoNotOptimize(sklyanin::sklyanin_suite(ctx, ctx.multiple(1), ctx.multiple(2), ctx.multiple(-1)));
}
BENCHMARK(BM_SklyaninSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
