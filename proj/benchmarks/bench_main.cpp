#include <benchmark/benchmark.h>

#include "spreadcx/floquet.hpp"
#include "spreadcx/spread.hpp"
#include "spreadcx/workstats.hpp"

using namespace spreadcx;

static void BM_GroundStateComplexity(benchmark::State& state) {
  const MomentumGrid grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ground_state_complexity(ThreeSpinParams{0.3, 1.0}, grid));
}
BENCHMARK(BM_GroundStateComplexity)->Arg(200)->Arg(1000)->Arg(5000);

static void BM_QuenchCurve(benchmark::State& state) {
  const auto times = uniform_times(50.0, static_cast<std::size_t>(state.range(0)));
  const auto schedule = QuenchSchedule{ThreeSpinParams{1.0, 1.2},
                                       {{ThreeSpinParams{0.6, 1.6}, 10.0},
                                        {ThreeSpinParams{1.0, 1.2}, 10.0},
                                        {ThreeSpinParams{0.6, 1.6}, 30.0}}};
  for (auto _ : state) benchmark::DoNotOptimize(quench_complexity(schedule, times));
}
BENCHMARK(BM_QuenchCurve)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_SingleQuenchClosedForm(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(single_quench_complexity(XYParams{1.2, 0.4}, XYParams{-1.0, 0.2}, 25.0));
}
BENCHMARK(BM_SingleQuenchClosedForm);

static void BM_EpsilonCycle(benchmark::State& state) {
  const DriveSpec d{ThreeSpinParams{1.1, 0.2}, 0.1, 1000.0, 40};
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_cycle(d, 1.3, steps));
}
BENCHMARK(BM_EpsilonCycle)->Arg(64)->Arg(256)->Arg(1024);

static void BM_FloquetComplexity(benchmark::State& state) {
  const DriveSpec d{ThreeSpinParams{1.1, 0.2}, 0.1, 1000.0, 40};
  for (auto _ : state) benchmark::DoNotOptimize(floquet_complexity(d));
}
BENCHMARK(BM_FloquetComplexity)->Unit(benchmark::kMillisecond);

static void BM_FloquetVsN(benchmark::State& state) {
  const DriveSpec d{XYParams{1.0, 0.2}, 0.1, 1000.0, 0};
  std::vector<int> ns(101);
  for (int i = 0; i <= 100; ++i) ns[i] = i;
  for (auto _ : state) benchmark::DoNotOptimize(floquet_complexity_vs_n(d, ns));
}
BENCHMARK(BM_FloquetVsN)->Unit(benchmark::kMillisecond);

static void BM_WorkStats(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(work_stats(SSHParams{1.2, 0.5}, SSHParams{0.6, 0.8}));
}
BENCHMARK(BM_WorkStats);

static void BM_SSHMeanClosedForm(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(ssh_work_mean_closed_form(SSHParams{1.2, 0.5}, SSHParams{0.6, 0.8}));
}
BENCHMARK(BM_SSHMeanClosedForm);

static void BM_LanczosOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = std::cos(0.7 * i);
    if (i + 1 < n) h(i, i + 1) = h(i + 1, i) = 1.0;
  }
  const Eigen::VectorXcd start = Eigen::VectorXcd::Ones(n).normalized();
  for (auto _ : state) benchmark::DoNotOptimize(lanczos_oracle(h, start, n));
}
BENCHMARK(BM_LanczosOracle)->Arg(16)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
