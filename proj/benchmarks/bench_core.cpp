#include <benchmark/benchmark.h>

#include "fuzzy/catalog.hpp"
#include "fuzzy/interpolator.hpp"
#include "fuzzy/regularize.hpp"
#include "fuzzy/transforms.hpp"

using namespace fuzzy;

namespace {

FourierFunction test_function(Interval iv) {
  FourierFunction::Table t;
  t.emplace(0, ComplexProfile(ProfileFunction::polynomial({0.5, -1.0, 2.0})));
  t.emplace(1, ComplexProfile(spline_h()));
  t.emplace(-1, ComplexProfile(spline_h()));
  t.emplace(3, ComplexProfile(ProfileFunction::affine(0.3, 0.1), 0.7));
  return {iv, t};
}

void BM_RegularizeScalar(benchmark::State& st) {
  const Interval iv{-1.0, 1.0};
  const auto f = test_function(iv);
  const auto g = make_grid(static_cast<int>(st.range(0)), iv);
  for (auto _ : st) benchmark::DoNotOptimize(regularize_scalar(f, g));
}
BENCHMARK(BM_RegularizeScalar)->Arg(60)->Arg(240)->Arg(960);

void BM_Commutator(benchmark::State& st) {
  const auto s = build_circle_to_eight({}, static_cast<int>(st.range(0)));
  for (auto _ : st) {
    auto c = commutator(s.coordinate(0).data(), s.coordinate(1).data());
    benchmark::DoNotOptimize(within_border_norm(c, 5));
  }
}
BENCHMARK(BM_Commutator)->Arg(60)->Arg(240);

void BM_StringVertex(benchmark::State& st) {
  VertexParams p;
  p.blocks = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_string_vertex(p));
}
BENCHMARK(BM_StringVertex)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_Diagonalize(benchmark::State& st) {
  const auto s = build_fuzzy_cylinder(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(diagonalize(s.coordinate(0).data()));
}
BENCHMARK(BM_Diagonalize)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
