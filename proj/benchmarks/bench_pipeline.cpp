#include <benchmark/benchmark.h>

#include "spohn/contfrac.hpp"
#include "spohn/elliptic.hpp"
#include "spohn/spohn_geometry.hpp"

namespace {

using namespace spohn;

const PayoffTables kGeneric = PayoffTables::parse_bimatrix("1,6 2,1; 0,4 3,0");
const PayoffTables kPD = PayoffTables::parse_bimatrix("2,2 0,3; 3,0 1,1");

void BM_BuildCubic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_cubic(kGeneric));
}
BENCHMARK(BM_BuildCubic);

void BM_JInvariant(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(j_invariant(spohn_plane_cubic(kGeneric)));
}
BENCHMARK(BM_JInvariant);

void BM_QuadricPairJ(benchmark::State& state) {
  const auto V = [](const char* s) { return MultiPoly::parse(s, space_vars()); };
  const QuadricPair qp(V("x^2+y^2-z^2-t^2"), V("xz-zy+yt-zt"), ProjPoint{1, 1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(j_invariant(cubic_from_quadrics(qp)));
}
BENCHMARK(BM_QuadricPairJ);

void BM_Weierstrass(benchmark::State& state) {
  const auto c = spohn_plane_cubic(kGeneric);
  for (auto _ : state) benchmark::DoNotOptimize(weierstrass_from_cubic(c, {1, 0, 0}));
}
BENCHMARK(BM_Weierstrass);

void BM_DecomposeReducible(benchmark::State& state) {
  const auto f = build_cubic(kPD).f;
  for (auto _ : state) benchmark::DoNotOptimize(decompose_cubic(f));
}
BENCHMARK(BM_DecomposeReducible);

void BM_DecomposeIrreducible(benchmark::State& state) {
  const auto f = build_cubic(kGeneric).f;
  for (auto _ : state) benchmark::DoNotOptimize(decompose_cubic(f));
}
BENCHMARK(BM_DecomposeIrreducible);

void BM_ContinuedFraction(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(contfrac_approx("1.2020569031595942853997381615114499907649862923405", 20));
  }
}
BENCHMARK(BM_ContinuedFraction);

}  // namespace

BENCHMARK_MAIN();
