#include "cfn/continuant.hpp"
#include "cfn/expansions.hpp"
#include "cfn/forward.hpp"
#include "cfn/normality.hpp"
#include "cfn/rewrite.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cfn;

namespace {

DigitString random_rcf(std::size_t len, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::vector<std::uint64_t> a(len);
  for (auto& v : a) v = 1 + g() % 6;
  return DigitString::rcf(a);
}

void BM_EvalFiniteCf(benchmark::State& st) {
  auto s = random_rcf(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(eval_finite_cf(s));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_EvalFiniteCf)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_RcfDigits(benchmark::State& st) {
  auto x = sample_point(7, static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(rcf_digits(x, std::numeric_limits<std::size_t>::max()));
}
BENCHMARK(BM_RcfDigits)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMicrosecond);

void BM_RcfToOcf(benchmark::State& st) {
  auto in = DigitStream::finite(random_rcf(static_cast<std::size_t>(st.range(0)), 2));
  for (auto _ : st) benchmark::DoNotOptimize(rcf_to_ocf(in));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_RcfToOcf)->RangeMultiplier(8)->Range(64, 32768)->Unit(benchmark::kMicrosecond);

void BM_RcfToEcf(benchmark::State& st) {
  auto in = DigitStream::finite(random_rcf(static_cast<std::size_t>(st.range(0)), 3));
  for (auto _ : st) benchmark::DoNotOptimize(rcf_to_ecf(in));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_RcfToEcf)->RangeMultiplier(8)->Range(64, 32768)->Unit(benchmark::kMicrosecond);

void BM_RcfToOcfSlow(benchmark::State& st) {
  auto s = random_rcf(static_cast<std::size_t>(st.range(0)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(rcf_to_ocf_slow(s));
}
BENCHMARK(BM_RcfToOcfSlow)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_OcfToRcf(benchmark::State& st) {
  auto fwd = rcf_to_ocf(DigitStream::finite(random_rcf(static_cast<std::size_t>(st.range(0)), 5)));
  auto in = DigitStream::finite(fwd.output);
  for (auto _ : st) benchmark::DoNotOptimize(ocf_to_rcf(in));
}
BENCHMARK(BM_OcfToRcf)->RangeMultiplier(8)->Range(64, 32768)->Unit(benchmark::kMicrosecond);

void BM_Counterexample(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(schweiger_counterexample(static_cast<std::size_t>(st.range(0))));
}
BENCHMARK(BM_Counterexample)->RangeMultiplier(10)->Range(100, 100000)->Unit(benchmark::kMicrosecond);

void BM_DeterminedDigits(benchmark::State& st) {
  auto s = random_rcf(static_cast<std::size_t>(st.range(0)), 6);
  for (auto _ : st) benchmark::DoNotOptimize(determined_ocf_digits(s, PriorEvent::None));
}
BENCHMARK(BM_DeterminedDigits)->DenseRange(2, 10, 4);

void BM_TriggerEnumerate(benchmark::State& st) {
  auto target = DigitString::ocf({{3, 1}});
  for (auto _ : st) benchmark::DoNotOptimize(trigger_enumerate(target, static_cast<std::size_t>(st.range(0)), 6));
}
BENCHMARK(BM_TriggerEnumerate)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_TriggerBijection(benchmark::State& st) {
  auto rcf = sample_rcf_stream(1, 12288);
  auto target = DigitString::ocf({{3, 1}});
  for (auto _ : st) {
    benchmark::DoNotOptimize(trigger_bijection_check(rcf, target, static_cast<std::size_t>(st.range(0)), 16));
  }
}
BENCHMARK(BM_TriggerBijection)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
