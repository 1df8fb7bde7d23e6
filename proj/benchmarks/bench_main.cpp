#include <benchmark/benchmark.h>

#include "rubin/generators.hpp"
#include "rubin/perm.hpp"
#include "rubin/poset.hpp"
#include "rubin/reconstruct.hpp"
#include "rubin/sampling.hpp"
#include "rubin/witnesses.hpp"

using namespace rubin;

static void BM_AlgDisjoint(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SymmetricGroup g(n);
  const Perm t = Perm::parse("(1 2)", n);
  for (auto _ : state) benchmark::DoNotOptimize(is_alg_disjoint(t, t, g).verdict);
}
BENCHMARK(BM_AlgDisjoint)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_ComposeInverse(benchmark::State& state) {
  Rng rng(1);
  std::vector<PrefixMap> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(random_element(rng, static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& a = xs[i % xs.size()];
    const auto& b = xs[(i + 1) % xs.size()];
    benchmark::DoNotOptimize(compose(a, inverse(b)));
    ++i;
  }
}
BENCHMARK(BM_ComposeInverse)->Arg(3)->Arg(6)->Arg(12);

static void BM_Rsupp(benchmark::State& state) {
  Rng rng(2);
  const auto f = random_element(rng, 8);
  for (auto _ : state) benchmark::DoNotOptimize(rsupp(f));
}
BENCHMARK(BM_Rsupp);

static void BM_WordBall(benchmark::State& state) {
  const auto gens = GeneratorSet::v_standard();
  for (auto _ : state) benchmark::DoNotOptimize(word_ball(gens, static_cast<unsigned>(state.range(0))).size());
}
BENCHMARK(BM_WordBall)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_FourWitnesses(benchmark::State& state) {
  const auto f = child_swap(BinaryWord("0"));
  const auto g = child_swap(BinaryWord("1"));
  const auto h = first_digit_flip();
  for (auto _ : state) benchmark::DoNotOptimize(construct_f1_f2(f, g, h).result);
}
BENCHMARK(BM_FourWitnesses);

static void BM_OrbitCoverage(benchmark::State& state) {
  const auto gens = GeneratorSet::v_standard();
  const auto p = CanonicalPoint::parse("01(1)");
  const auto u = ClopenSet::parse("{0,11}");
  for (auto _ : state) benchmark::DoNotOptimize(orbit_coverage(p, u, gens, 8, 3).covered);
}
BENCHMARK(BM_OrbitCoverage)->Unit(benchmark::kMillisecond);

static void BM_Reconstruct(benchmark::State& state) {
  const auto gens = GeneratorSet::v_standard();
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(static_cast<std::size_t>(state.range(0)), gens).classes.size());
}
BENCHMARK(BM_Reconstruct)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
