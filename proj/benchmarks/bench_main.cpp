#include <benchmark/benchmark.h>

#include "misere/closed_forms.hpp"
#include "misere/compare.hpp"
#include "misere/outcome.hpp"
#include "misere/parallel.hpp"
#include "misere/quotient.hpp"
#include "misere/universe.hpp"

using namespace misere;

// Memos are process-wide, so only the first iteration solves from scratch;
// larger arguments reach games not seen before.
static void BM_OutcomeIntegerSums(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    for (std::size_t i = 0; i <= k; ++i) {
      benchmark::DoNotOptimize(misere_outcome(sum(n_copies(games::one(), i), n_copies(games::one_bar(), k - i))));
    }
  }
}
BENCHMARK(BM_OutcomeIntegerSums)->Arg(8)->Arg(32)->Arg(128);

static void BM_EnumerateClA(benchmark::State& state) {
  const auto bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const auto es = closure_enumerate(UniverseSpec::cl_a(), bound);
    for (const auto& e : *es) benchmark::DoNotOptimize(misere_outcome(e.game));
  }
}
BENCHMARK(BM_EnumerateClA)->Arg(4)->Arg(8)->Arg(12);

static void BM_ClosedFormVersusSolver(benchmark::State& state) {
  const bool formula = state.range(0) != 0;
  for (auto _ : state) {
    for (std::uint32_t k1 = 0; k1 <= 3; ++k1)
      for (std::uint32_t k2 = 0; k2 <= 3; ++k2)
        for (std::uint32_t k3 = 0; k3 <= 3; ++k3)
          for (std::uint32_t k4 = 0; k4 <= 3; ++k4) {
            const AVector v{{k1, k2, k3, k4}};
            benchmark::DoNotOptimize(formula ? aclosure_outcome(v) : misere_outcome(avector_game(v)));
          }
  }
}
BENCHMARK(BM_ClosedFormVersusSolver)->Arg(0)->Arg(1);

static void BM_EquivModClA(benchmark::State& state) {
  const auto bound = static_cast<std::size_t>(state.range(0));
  const Game g = sum(games::a(), games::a_bar());
  for (auto _ : state) {
    benchmark::DoNotOptimize(equiv_mod(g, games::zero(), UniverseSpec::cl_a(), bound));
  }
}
BENCHMARK(BM_EquivModClA)->Arg(4)->Arg(6)->Arg(8);

static void BM_QuotientEstimate(benchmark::State& state) {
  const auto bound = static_cast<std::size_t>(state.range(0));
  set_worker_count(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quotient_estimate(UniverseSpec::cl_2sharp0(), bound, bound).size());
  }
  set_worker_count(1);
}
BENCHMARK(BM_QuotientEstimate)->Args({6, 1})->Args({8, 1})->Args({8, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
