#include <benchmark/benchmark.h>

#include "vdw/kernel.hpp"
#include "vdw/pressure.hpp"

namespace {

using namespace vdw;

const MaterialModel kGlass = MaterialModel::lorentz(0.0, {{2.0, 2e16, 0.0}});
const MaterialModel kVacuum = MaterialModel::vacuum();

void BM_fresnel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(fresnel(Polarization::h, 1e15, 1e7, kVacuum, kGlass));
}
BENCHMARK(BM_fresnel);

void BM_generalized_reflection(benchmark::State& state) {
  ReflectionSide side{kVacuum,
                      {{kGlass, 1e-8}, {MaterialModel::constant(5.0), 3e-9}, {kGlass, 2e-8}},
                      MaterialModel::constant(2.0)};
  for (auto _ : state)
    benchmark::DoNotOptimize(generalized_reflection(Polarization::h, 1e15, 1e7, side));
}
BENCHMARK(BM_generalized_reflection);

void BM_kernel_Kn(benchmark::State& state) {
  ProbeGeometry geom;
  geom.left_side = {kVacuum, {}, kGlass};
  geom.right_side = {kVacuum, {}, kGlass};
  geom.z_v = 1e-8;
  QuadratureSpec quad;
  for (auto _ : state) benchmark::DoNotOptimize(kernel_Kn(geom, 1, 300.0, quad));
}
BENCHMARK(BM_kernel_Kn);

void BM_pressure_lr(benchmark::State& state) {
  MatsubaraSpec mats;
  QuadratureSpec quad;
  const double z = static_cast<double>(state.range(0)) * 1e-9;
  for (auto _ : state)
    benchmark::DoNotOptimize(pressure_lr(kGlass, kVacuum, kGlass, z, mats, quad).value);
}
BENCHMARK(BM_pressure_lr)->Arg(1)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
