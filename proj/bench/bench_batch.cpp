#include <benchmark/benchmark.h>

#include "orthoschmidt/orthoschmidt.hpp"

using namespace orthoschmidt;

namespace {

Execution exec_of(const benchmark::State& st) {
  return st.range(1) != 0 ? Execution::Parallel : Execution::Serial;
}

void BM_Decompose(benchmark::State& st) {
  const auto states = random_states(7, static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(decompose_all(states, exec_of(st)));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_Oracle(benchmark::State& st) {
  const auto states = random_states(7, static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(oracle_all(states, exec_of(st)));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_SampleMmee(benchmark::State& st) {
  SampleSpec spec;
  spec.type = SetType::MMEE;
  spec.seed = 11;
  spec.count = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(sample_all(spec, exec_of(st)));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_VerifyPpee(benchmark::State& st) {
  SampleSpec spec;
  spec.type = SetType::PPEE;
  spec.seed = 13;
  spec.count = static_cast<std::size_t>(st.range(0));
  const auto sets = sample_all(spec);
  for (auto _ : st) benchmark::DoNotOptimize(verify_all(sets, exec_of(st)));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

}  // namespace

BENCHMARK(BM_Decompose)->ArgsProduct({{1 << 10, 1 << 16}, {0, 1}});
BENCHMARK(BM_Oracle)->ArgsProduct({{1 << 10, 1 << 16}, {0, 1}});
BENCHMARK(BM_SampleMmee)->ArgsProduct({{1 << 10, 1 << 14}, {0, 1}});
BENCHMARK(BM_VerifyPpee)->ArgsProduct({{1 << 10, 1 << 14}, {0, 1}});

BENCHMARK_MAIN();
