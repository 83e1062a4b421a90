#include <benchmark/benchmark.h>

#include <cstdint>

#include "collatz3k/dynamics.hpp"
#include "collatz3k/formulas.hpp"
#include "collatz3k/natural.hpp"
#include "collatz3k/params.hpp"
#include "collatz3k/verifier.hpp"

using namespace collatz3k;

namespace {

void BM_Step(benchmark::State& state) {
  const Params params(static_cast<unsigned>(state.range(0)));
  Natural n = 837799;
  for (auto _ : state) {
    n = step(n, params);
    benchmark::DoNotOptimize(n.get_mpz_t());
    if (n == params.target()) n = 837799;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Step)->Arg(0)->Arg(4);

void BM_StreamTrajectory(benchmark::State& state) {
  // 837799 has the longest orbit below 10^6 under 3n+1.
  const Params params(0);
  const Natural n(static_cast<unsigned long>(state.range(0)));
  std::uint64_t steps = 0;
  for (auto _ : state) {
    const auto summary = stream_trajectory(n, params, 100000);
    benchmark::DoNotOptimize(summary.stopping_time);
    steps += summary.steps_used;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(steps));
}
BENCHMARK(BM_StreamTrajectory)->Arg(27)->Arg(837799);

void BM_StreamTrajectoryHuge(benchmark::State& state) {
  const Params params(0);
  const Natural n = pow2(static_cast<std::uint64_t>(state.range(0))) - 1;
  std::uint64_t steps = 0;
  for (auto _ : state) {
    const auto summary = stream_trajectory(n, params, 10000000);
    benchmark::DoNotOptimize(summary.stopping_time);
    steps += summary.steps_used;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(steps));
}
BENCHMARK(BM_StreamTrajectoryHuge)->Arg(256)->Arg(1000);

void BM_EpsilonSum(benchmark::State& state) {
  const auto traj = trajectory(Natural(837799), Params(0), 100000);
  const auto profile = parity_profile(traj, traj.stopping_time);
  for (auto _ : state) {
    auto s = epsilon_sum(profile);
    benchmark::DoNotOptimize(s.numerator().get_mpz_t());
  }
}
BENCHMARK(BM_EpsilonSum);

void BM_EvalTermFormula(benchmark::State& state) {
  const Natural n(837799);
  const Params params(0);
  const auto traj = trajectory(n, params, 100000);
  const auto profile = parity_profile(traj, traj.stopping_time);
  for (auto _ : state) {
    auto v = eval_term_formula(n, params, profile);
    benchmark::DoNotOptimize(v.get_mpz_t());
  }
}
BENCHMARK(BM_EvalTermFormula);

void BM_TotalStoppingTimeFormula(benchmark::State& state) {
  const Natural n(837799);
  const Params params(0);
  const auto traj = trajectory(n, params, 100000);
  const auto profile = parity_profile(traj, traj.stopping_time);
  for (auto _ : state) {
    auto t = total_stopping_time_formula(n, params, profile);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TotalStoppingTimeFormula);

void BM_DetectCycle(benchmark::State& state) {
  const Params params(0);
  for (auto _ : state) {
    auto rep = detect_cycle(Natural(27), params, 1000);
    benchmark::DoNotOptimize(rep.length);
  }
}
BENCHMARK(BM_DetectCycle);

void BM_VerifyChunk(benchmark::State& state) {
  const Params params(static_cast<unsigned>(state.range(0)));
  const std::uint64_t size = 4096;
  std::uint64_t verified = 0;
  Natural first = 1;
  for (auto _ : state) {
    const auto res = verify_chunk(params, first, first + (size - 1), 20000);
    benchmark::DoNotOptimize(res.verified);
    verified += res.verified;
    first += size;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(verified));
}
BENCHMARK(BM_VerifyChunk)->Arg(0)->Arg(2);

void BM_RunSweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.k = 2;
  cfg.start = 1;
  cfg.end = 1 << 17;
  cfg.chunk_size = 16384;
  cfg.parallelism = static_cast<unsigned>(state.range(0));
  std::uint64_t verified = 0;
  for (auto _ : state) {
    const auto rep = run_sweep(cfg);
    benchmark::DoNotOptimize(rep.verified);
    verified += rep.verified;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(verified));
}
// Real time, not main-thread CPU time: the work happens on worker threads.
BENCHMARK(BM_RunSweep)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
