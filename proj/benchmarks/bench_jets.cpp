#include <benchmark/benchmark.h>

#include "walkerpc/apct_structure.hpp"
#include "walkerpc/f_tensor.hpp"
#include "walkerpc/scalar_field.hpp"
#include "walkerpc/walker_metric.hpp"

namespace {

using namespace walkerpc;

void BM_ScalarFieldJet(benchmark::State& state) {
  const ScalarField e = parse_expr("x^2/y^2 + exp(z/2)*sqrt(x + 3)");
  const Point3 p{0.3, 1.2, -0.4};
  for (auto _ : state) benchmark::DoNotOptimize(e.jet(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ScalarFieldJet)->DenseRange(0, 3);

void BM_WalkerCurvature(benchmark::State& state) {
  const Jet3 f = parse_expr("x^2*y + y*z^3").jet({0.3, 0.7, -0.2}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(walker_curvature(f));
}
BENCHMARK(BM_WalkerCurvature);

void BM_StructureTensor(benchmark::State& state) {
  Domain d;
  d.box[Axis::Y] = {0.5, 2.0};
  const ApctStructure s = ApctStructure::build(WalkerManifold(parse_expr("x^2/y^2"), 1, d),
                                               {parse_expr("x/y"), parse_expr("1"), parse_expr("0")});
  const Point3 p{0.2, 1.1, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(f_tensor_at(s, p));
}
BENCHMARK(BM_StructureTensor);

}  // namespace
