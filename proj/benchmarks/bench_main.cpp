#include <benchmark/benchmark.h>

#include "binestim/adversary.hpp"
#include "binestim/algorithms.hpp"
#include "binestim/delayed_best_fit.hpp"
#include "binestim/generators.hpp"
#include "binestim/oracle.hpp"
#include "binestim/planned_harmonic.hpp"

using namespace binestim;

static void BM_OptExact(benchmark::State& state) {
  const Instance inst = gen_random(static_cast<std::size_t>(state.range(0)), Rational(1, 10), 17, Profile::Mixed);
  for (auto _ : state) benchmark::DoNotOptimize(opt_exact(inst.actual).bins);
}
BENCHMARK(BM_OptExact)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

static void BM_OptPairing(benchmark::State& state) {
  const Instance inst = gen_two_per_bin(static_cast<std::size_t>(state.range(0)), Rational(1, 10), 17);
  for (auto _ : state) benchmark::DoNotOptimize(opt_pairing(inst.actual).bins);
}
BENCHMARK(BM_OptPairing)->Arg(300)->Arg(3000);

static void BM_DelayedBestFit(benchmark::State& state) {
  const Instance inst = gen_two_per_bin(300, Rational(1, 10), 5);
  for (auto _ : state) {
    DelayedBestFit dbf;
    benchmark::DoNotOptimize(run_game(dbf, inst).bins_used());
  }
}
BENCHMARK(BM_DelayedBestFit);

static void BM_PlannedHarmonic(benchmark::State& state) {
  const Instance inst = gen_random(static_cast<std::size_t>(state.range(0)), Rational(1, 35), 5, Profile::Mixed);
  for (auto _ : state) {
    PlannedHarmonic ph;
    benchmark::DoNotOptimize(run_game(ph, inst).bins_used());
  }
}
BENCHMARK(BM_PlannedHarmonic)->Arg(200)->Arg(1000);

static void BM_FourThirdsDuel(benchmark::State& state) {
  for (auto _ : state) {
    auto alg = make_algorithm("bestfit");
    FourThirdsAdversary adv(static_cast<std::size_t>(state.range(0)), Rational(1, 100));
    benchmark::DoNotOptimize(run_adaptive_game(*alg, adv).bins_used());
  }
}
BENCHMARK(BM_FourThirdsDuel)->Arg(30)->Arg(150);

static void BM_RationalSum(benchmark::State& state) {
  std::vector<Rational> xs;
  for (std::int64_t i = 1; i <= 1000; ++i) xs.emplace_back(i, 1000 + i);
  for (auto _ : state) benchmark::DoNotOptimize(sum(xs));
}
BENCHMARK(BM_RationalSum);
BENCHMARK_MAIN();
