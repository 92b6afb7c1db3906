// Serial reference vs OpenMP for the hot loops. Run with
//   ./bench_kernels --benchmark_counters_tabular=true
// On a single core the two columns should match.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <vector>

#include "dunkl/heat.hpp"
#include "dunkl/kato.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/transform.hpp"

using namespace dunkl;

namespace {

std::vector<double> line(int n, double R) {
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = -R + 2 * R * (i + 0.5) / n;
  return x;
}

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_axis_heat_table(benchmark::State& s) {
  const auto x = line(static_cast<int>(s.range(0)), 8.0);
  for (auto _ : s) benchmark::DoNotOptimize(axis_heat_table(0.5, 0.3, x, x, exec_of(s)));
  s.SetItemsProcessed(s.iterations() * s.range(0) * s.range(0));
}

void BM_axis_transform_matrix(benchmark::State& s) {
  const auto g = build_grid(RootSystem::z2_product({1.5}), 10.0, static_cast<int>(s.range(0)));
  for (auto _ : s)
    benchmark::DoNotOptimize(axis_transform_matrix(1.5, g->axis_nodes[0], g->axis_mu[0], 11.3, exec_of(s)));
  s.SetItemsProcessed(s.iterations() * s.range(0) * s.range(0));
}

void BM_apply_dense(benchmark::State& s) {
  const auto n = s.range(0);
  const Eigen::MatrixXd m = Eigen::MatrixXd::Random(n, n);
  const Eigen::VectorXd v = Eigen::VectorXd::Random(n);
  for (auto _ : s) benchmark::DoNotOptimize(apply_dense(m, v, exec_of(s)));
  s.SetItemsProcessed(s.iterations() * n * n);
}

void BM_heat_kernel_matrix(benchmark::State& s) {
  const auto g = build_grid(RootSystem::z2_product({0.5, 1.0}), 8.0, static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(heat_kernel_matrix(*g, 0.5, exec_of(s)));
}

// the probe sweep has no serial twin; one thread stands in for it
void BM_kato_probe_sweep(benchmark::State& s) {
  const auto rs = RootSystem::z2_product({0.5});
  const auto v = make_potential("inverse_power", {{"beta", 0.5}}, 1);
  const auto probes = probe_points(v, 1, {4.0, static_cast<int>(s.range(0))});
  const int before = omp_get_max_threads();
  omp_set_num_threads(s.range(1) ? before : 1);
  for (auto _ : s) benchmark::DoNotOptimize(kato_modulus(rs, v, 0.1, KatoForm::Orbit, probes));
  omp_set_num_threads(before);
  s.counters["threads"] = s.range(1) ? before : 1;
}

}  // namespace

BENCHMARK(BM_axis_heat_table)->ArgsProduct({{128, 512}, {0, 1}})->ArgNames({"n", "parallel"});
BENCHMARK(BM_axis_transform_matrix)->ArgsProduct({{128, 256}, {0, 1}})->ArgNames({"n", "parallel"});
BENCHMARK(BM_apply_dense)->ArgsProduct({{256, 1024}, {0, 1}})->ArgNames({"n", "parallel"});
BENCHMARK(BM_heat_kernel_matrix)->ArgsProduct({{16, 32}, {0, 1}})->ArgNames({"n", "parallel"});
BENCHMARK(BM_kato_probe_sweep)->ArgsProduct({{17, 65}, {0, 1}})->ArgNames({"probes", "parallel"})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
