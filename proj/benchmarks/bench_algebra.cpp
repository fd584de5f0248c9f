#include <benchmark/benchmark.h>

#include "periods/braid.hpp"
#include "periods/integrator.hpp"
#include "periods/mzv.hpp"
#include "periods/polylog.hpp"

using namespace periods;

namespace {

void BM_ShuffleProduct(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  words::Word a, b;
  for (std::size_t i = 0; i < len; ++i) {
    a.push_back(static_cast<words::Letter>(i % 2));
    b.push_back(static_cast<words::Letter>((i + 1) % 3));
  }
  for (auto _ : state) benchmark::DoNotOptimize(words::shuffle(a, b));
}
BENCHMARK(BM_ShuffleProduct)->DenseRange(2, 6, 2);

void BM_Reduce(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  mzv::MzvCombination c;
  for (const auto& word : mzv::admissible_words(w)) c.add(word, 1);
  for (auto _ : state) benchmark::DoNotOptimize(mzv::reduce(c, w));
}
BENCHMARK(BM_Reduce)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ZetaSeries(benchmark::State& state) {
  const auto digits = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mzv::zeta_single_euler_maclaurin(3, digits));
}
BENCHMARK(BM_ZetaSeries)->Arg(30)->Arg(100);

void BM_LogProductDerivative(benchmark::State& state) {
  dihedral::DihedralNGon g(6);
  polylog::PolylogExpr e = integrator::log_u(g, ngon::Chord(1, 4));
  polylog::PolylogExpr f = polylog::multiply(e, integrator::log_u(g, ngon::Chord(2, 5)));
  for (auto _ : state) {
    polylog::PolylogExpr p = polylog::multiply(e, f);
    benchmark::DoNotOptimize(polylog::diff(p, 3));
  }
}
BENCHMARK(BM_LogProductDerivative)->Unit(benchmark::kMicrosecond);

void BM_RelationSpans(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(braid::relation_span_equivalence(n));
}
BENCHMARK(BM_RelationSpans)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

}  // namespace
