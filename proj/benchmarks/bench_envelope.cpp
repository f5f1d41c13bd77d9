#include <benchmark/benchmark.h>

#include "envelope/dos.hpp"
#include "envelope/et_core.hpp"
#include "envelope/oracle.hpp"
#include "envelope/specfun.hpp"
#include "envelope/systems.hpp"

using namespace envelope;
namespace sys = envelope::systems;

static void BM_LambertW0(benchmark::State& state) {
  double z = -0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::lambert_w0(z));
    z = z > 50.0 ? -0.3 : z + 0.37;
  }
}
BENCHMARK(BM_LambertW0);

static void BM_QuarticRoot(benchmark::State& state) {
  double y = 1e-4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::quartic_root_g(specfun::QuarticSign::plus, y));
    y = y > 1e4 ? 1e-4 : y * 1.7;
  }
}
BENCHMARK(BM_QuarticRoot);

static void BM_SolveRadius(benchmark::State& state) {
  const auto spec = sys::baryon(sys::table1_params(), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_radius(spec, 3.0));
  }
}
BENCHMARK(BM_SolveRadius);

static void BM_ImprovedEnergy(benchmark::State& state) {
  const auto spec = sys::confined({1.0, 0.5, 1.0}, static_cast<int>(state.range(0)));
  const auto qn = QuantumNumbers::from_sums(1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(improved_energy(spec, qn));
  }
}
BENCHMARK(BM_ImprovedEnergy)->Arg(2)->Arg(8)->Arg(32);

static void BM_Table1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sys::table1(PhiChoice::dos()));
  }
}
BENCHMARK(BM_Table1)->Unit(benchmark::kMillisecond);

static void BM_RadialOracle(benchmark::State& state) {
  const auto v = interactions::power(1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::radial_eigenvalue(0.5, v, 0, 0));
  }
}
BENCHMARK(BM_RadialOracle)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
