#include <benchmark/benchmark.h>

#include <random>

#include "braidwire/boundary.hpp"
#include "braidwire/families.hpp"
#include "braidwire/homology.hpp"
#include "braidwire/moves.hpp"
#include "support/random_words.hpp"

using namespace braidwire;

static void BM_NormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int len = static_cast<int>(state.range(1));
  std::mt19937_64 rng(42);
  std::vector<BraidWord> words;
  for (int i = 0; i < 16; ++i) words.push_back(braidwire::testing::random_word(rng, n, len));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(words[i++ % words.size()]));
  state.SetItemsProcessed(state.iterations() * len);
}
BENCHMARK(BM_NormalForm)->ArgsProduct({{4, 8, 16, 32}, {16, 64, 256}});

static void BM_ScottBoundaryInvariants(benchmark::State& state) {
  const auto d = scott_diagram(static_cast<int>(state.range(0))).arrangement.diagram;
  for (auto _ : state) benchmark::DoNotOptimize(boundary_invariants(d));
}
BENCHMARK(BM_ScottBoundaryInvariants)->DenseRange(-1, 9, 2);

static void BM_ScriptReplay(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto d = scott_diagram(k).arrangement.diagram;
  const auto script = qhd_script(k);
  for (auto _ : state) benchmark::DoNotOptimize(run_script(d, script));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(script.size()));
}
BENCHMARK(BM_ScriptReplay)->DenseRange(-1, 9, 2)->Unit(benchmark::kMillisecond);

static void BM_VerifyTrace(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto t = run_script(scott_diagram(k).arrangement.diagram, qhd_script(k));
  for (auto _ : state) benchmark::DoNotOptimize(verify_trace(t));
}
BENCHMARK(BM_VerifyTrace)->Arg(-1)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_SmithRandom(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(-20, 20);
  IntMatrix m(rows, std::vector<mpz_class>(rows + 4));
  for (auto& r : m)
    for (auto& x : r) x = e(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithRandom)->RangeMultiplier(2)->Range(4, 16);

static void BM_QhdHomology(benchmark::State& state) {
  const auto a = qhd_diagram(static_cast<int>(state.range(0))).arrangement;
  for (auto _ : state) benchmark::DoNotOptimize(homology(a));
}
BENCHMARK(BM_QhdHomology)->DenseRange(-1, 9, 2);
BENCHMARK_MAIN();
