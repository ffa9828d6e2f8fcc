#include <benchmark/benchmark.h>

#include <random>

#include "afftl/algebra.hpp"
#include "afftl/cells.hpp"
#include "afftl/enumerate.hpp"
#include "afftl/straighten.hpp"

using namespace afftl;

namespace {

Word random_fc_word(std::mt19937_64& rng, const GroupConfig& cfg, int len) {
  std::uniform_int_distribution<int> letter(1, cfg.n());
  Word w;
  for (int tries = 0; static_cast<int>(w.size()) < len && tries < 50 * len; ++tries) {
    w.push_back(letter(rng));
    if (!is_fully_commutative(cfg, w)) w.pop_back();
  }
  return w;
}

std::vector<AffineDiagram> sample_diagrams(int n, int len, int count) {
  GroupConfig cfg(n);
  std::mt19937_64 rng(1);
  std::vector<AffineDiagram> out;
  for (int k = 0; k < count; ++k) out.push_back(stack(cfg, random_fc_word(rng, cfg, len)).diagram);
  return out;
}

void BM_multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto ds = sample_diagrams(n, 2 * n, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(ds[i % ds.size()], ds[(i + 7) % ds.size()]));
    ++i;
  }
}
BENCHMARK(BM_multiply)->Arg(4)->Arg(6)->Arg(10)->Arg(16);

void BM_straighten(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto ds = sample_diagrams(n, 2 * n, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(straighten(ds[i++ % ds.size()]));
}
BENCHMARK(BM_straighten)->Arg(4)->Arg(6)->Arg(10);

void BM_rewrite_evaluate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GroupConfig cfg(n);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> letter(1, n);
  std::vector<Word> words(64);
  for (Word& w : words) {
    for (int k = 0; k < 12; ++k) w.push_back(letter(rng));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_evaluate(cfg, words[i++ % words.size()]));
}
BENCHMARK(BM_rewrite_evaluate)->Arg(4)->Arg(6);

void BM_labels(benchmark::State& state) {
  GroupConfig cfg(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(3);
  std::vector<Word> words;
  for (int k = 0; k < 64; ++k) words.push_back(random_fc_word(rng, cfg, 10));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(labels(cfg, words[i++ % words.size()]));
}
BENCHMARK(BM_labels)->Arg(4)->Arg(6);

void BM_enumerate(benchmark::State& state) {
  GroupConfig cfg(static_cast<int>(state.range(0)));
  EnumerationOptions opts;
  opts.workers = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(cfg, static_cast<int>(state.range(1)), opts));
}
BENCHMARK(BM_enumerate)->Args({5, 10, 1})->Args({6, 12, 1})->Args({6, 12, 4})->Unit(benchmark::kMillisecond);

void BM_oracle_counts(benchmark::State& state) {
  GroupConfig cfg(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_length_counts(cfg, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_oracle_counts)->Args({5, 10})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
