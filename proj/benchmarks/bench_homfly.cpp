#include <benchmark/benchmark.h>

#include "kch/homfly.hpp"

namespace {

// Alternating 3-braid of the given length.
kch::BraidWord word(int length) {
  std::vector<int> letters;
  for (int i = 0; i < length; ++i) letters.push_back(i % 2 == 0 ? 1 : -2);
  return kch::BraidWord(3, letters);
}

void BM_HomflyTrace(benchmark::State& state) {
  kch::BraidWord b = word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kch::homflypt(b));
}

void BM_HomflySkein(benchmark::State& state) {
  kch::BraidWord b = word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kch::skein_framed(b));
}

}  // namespace

BENCHMARK(BM_HomflyTrace)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_HomflySkein)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);
