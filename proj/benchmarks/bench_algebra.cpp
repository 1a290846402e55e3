#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "pathalg/classify.hpp"

using namespace pathalg;
using namespace pathalg::testing;

namespace {

const Ring kQ = Ring::rationals();

void BM_Convolve(benchmark::State& state) {
  GraphPtr g = share(rose(2));
  Rng rng(kSeed);
  const auto terms = static_cast<std::size_t>(state.range(0));
  std::vector<std::pair<SteinbergElement, SteinbergElement>> pairs;
  for (int i = 0; i < 32; ++i) {
    pairs.emplace_back(random_steinberg(g, kQ, rng, terms, 3),
                       random_steinberg(g, kQ, rng, terms, 3));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [f, h] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(f * h);
  }
}
BENCHMARK(BM_Convolve)->Arg(2)->Arg(4)->Arg(8);

void BM_Normalize(benchmark::State& state) {
  GraphPtr g = share(rose(2));
  Rng rng(kSeed + 1);
  const auto terms = static_cast<std::size_t>(state.range(0));
  std::vector<SteinbergElement> fs;
  for (int i = 0; i < 32; ++i) {
    fs.push_back(random_steinberg(g, kQ, rng, terms, 3));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(fs[i++ % fs.size()]));
  }
}
BENCHMARK(BM_Normalize)->Arg(4)->Arg(8)->Arg(16);

void BM_LeavittNormalForm(benchmark::State& state) {
  GraphPtr g = share(toeplitz());
  Rng rng(kSeed + 2);
  const auto len = static_cast<std::size_t>(state.range(0));
  std::vector<LeavittElement> xs;
  for (int i = 0; i < 32; ++i) {
    xs.push_back(random_leavitt(g, kQ, rng, 6, len));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(xs[i++ % xs.size()]));
  }
}
BENCHMARK(BM_LeavittNormalForm)->Arg(2)->Arg(4)->Arg(6);

void BM_ZeroTest(benchmark::State& state) {
  GraphPtr g = share(rose(2));
  Rng rng(kSeed + 3);
  std::vector<LeavittElement> xs;
  for (int i = 0; i < 32; ++i) {
    LeavittElement x = random_leavitt(g, kQ, rng, 4, 3);
    xs.push_back(x - normal_form(x));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_zero(xs[i++ % xs.size()]));
  }
}
BENCHMARK(BM_ZeroTest);

void BM_ExplicitIso(benchmark::State& state) {
  GraphPtr g = share(line(static_cast<std::size_t>(state.range(0))));
  MatrixModel model(g, kQ);
  Rng rng(kSeed + 4);
  std::vector<LeavittElement> xs;
  for (int i = 0; i < 32; ++i) {
    xs.push_back(random_leavitt(g, kQ, rng, 4, 3));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model(xs[i++ % xs.size()]));
  }
}
BENCHMARK(BM_ExplicitIso)->Arg(3)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
