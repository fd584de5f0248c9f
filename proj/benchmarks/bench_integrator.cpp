#include <benchmark/benchmark.h>

#include "periods/integrator.hpp"
#include "periods/numcheck.hpp"

using namespace periods;
using ngon::Chord;

namespace {

dihedral::DihedralMonomial mono(int n, std::map<Chord, int> alpha = {}) {
  return dihedral::make_monomial(dihedral::DihedralNGon(n), alpha);
}

void BM_CellPeriod(benchmark::State& state) {
  const auto m = mono(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(integrator::integrate_cell(m, {false}));
}
BENCHMARK(BM_CellPeriod)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_CellPeriodWithExponents(benchmark::State& state) {
  const auto m = mono(6, {{Chord(1, 4), 2}, {Chord(2, 5), 1}, {Chord(3, 6), static_cast<int>(state.range(0))}});
  for (auto _ : state) benchmark::DoNotOptimize(integrator::integrate_cell(m, {false}));
}
BENCHMARK(BM_CellPeriodWithExponents)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Kontsevich(benchmark::State& state) {
  std::vector<int> eps(static_cast<std::size_t>(state.range(0)), 0);
  eps[0] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(integrator::integrate_kontsevich(eps, {false}));
}
BENCHMARK(BM_Kontsevich)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Beta(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrator::integrate_beta(a, a));
}
BENCHMARK(BM_Beta)->Arg(2)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_TanhSinh(benchmark::State& state) {
  const auto c = dihedral::monomial_to_cubical(mono(static_cast<int>(state.range(0))));
  numcheck::Options opt;
  opt.target_digits = 8;
  for (auto _ : state) benchmark::DoNotOptimize(numcheck::numeric_integrate(c, opt));
}
BENCHMARK(BM_TanhSinh)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
