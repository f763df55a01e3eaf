#include <benchmark/benchmark.h>

#include "bench_workloads.hpp"
#include "lazystreams/lazystreams.hpp"

namespace {

using lazystreams::bench::Impl;
using lazystreams::bench::Op;

template <Op op, Impl impl>
void BM_Workload(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lazystreams::bench::checksum(op, impl, n));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

BENCHMARK(BM_Workload<Op::NatSum, Impl::Generator>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_Workload<Op::NatSum, Impl::LazyList>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_Workload<Op::MapChain, Impl::Generator>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_Workload<Op::MapChain, Impl::LazyList>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_Workload<Op::ProdPrefix, Impl::Generator>)->Arg(1 << 16);
BENCHMARK(BM_Workload<Op::ProdPrefix, Impl::LazyList>)->Arg(1 << 16);

void BM_ConvPrefix(benchmark::State& state) {
  using namespace lazystreams;
  for (auto _ : state) {
    Generator g = conv(naturals(), naturals());
    benchmark::DoNotOptimize(take_values(static_cast<std::size_t>(state.range(0)), g));
  }
}
BENCHMARK(BM_ConvPrefix)->Arg(1 << 12);

void BM_CantorPrefix(benchmark::State& state) {
  using namespace lazystreams;
  for (auto _ : state) {
    Generator g = prod_cantor(naturals(), naturals());
    benchmark::DoNotOptimize(take_values(static_cast<std::size_t>(state.range(0)), g));
  }
}
BENCHMARK(BM_CantorPrefix)->Arg(1 << 12);

void BM_EvalExpression(benchmark::State& state) {
  using namespace lazystreams;
  const Env env = default_env();
  for (auto _ : state) benchmark::DoNotOptimize(eval_text("{nat*nat}+[a,b]*(1:100)", env, 4096));
}
BENCHMARK(BM_EvalExpression);

}  // namespace

BENCHMARK_MAIN();
