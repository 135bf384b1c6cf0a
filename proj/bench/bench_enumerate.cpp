#include <benchmark/benchmark.h>

#include "borelab/verify.hpp"

using namespace borelab;

namespace {

const GradedContext& context(int which) {
  static const auto make = [](const std::string& label, NodeSet pi1) {
    AffineDiagram d = load_diagram(label);
    return GradedContext(std::make_shared<RootSystem>(d), make_involution(d, pi1));
  };
  static const GradedContext contexts[] = {make("E8~1", NodeSet{1}), make("E7~1", NodeSet{1}), make("B7~1", NodeSet{4}),
                                          make("D8~1", NodeSet{0, 8})};
  return contexts[which];
}

const char* const kNames[] = {"E8~1/pi1=1", "E7~1/pi1=1", "B7~1/pi1=4", "D8~1/pi1=0,8"};

void BM_EnumerateSerial(benchmark::State& state) {
  const auto& ctx = context(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_serial(ctx));
  state.SetLabel(kNames[state.range(0)]);
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto& ctx = context(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(ctx, static_cast<int>(state.range(1))));
  state.SetLabel(kNames[state.range(0)]);
}

void BM_VerifyAll(benchmark::State& state) {
  const auto& ctx = context(static_cast<int>(state.range(0)));
  MinusculePoset p = enumerate(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(ctx, p, {.max_length = 6, .jobs = static_cast<int>(state.range(1))}));
  state.SetLabel(kNames[state.range(0)]);
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->ArgsProduct({{0, 1, 2, 3}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyAll)->ArgsProduct({{0, 2}, {1, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
