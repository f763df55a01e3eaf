#include "bench_workloads.hpp"

#include <chrono>

#include "alloc_probe.hpp"
#include "lazystreams/combinators.hpp"
#include "lazystreams/lazy_list.hpp"
#include "lazystreams/sources.hpp"

namespace lazystreams::bench {

namespace {

std::uint64_t digest(const Value& v) {
  if (v.is_pair()) return digest(v.left()) * 1000003u + digest(v.right());
  return static_cast<std::uint64_t>(v.as_int());
}

// Wrapping fold; Int overflow would make fn::plus fail.
std::optional<Value> fold_step(const Value& acc, const Value& x) {
  return Value(static_cast<std::int64_t>(static_cast<std::uint64_t>(acc.as_int()) + digest(x)));
}

std::uint64_t fold_generator(Generator g) {
  Generator folded = reduce(fold_step, Value(0), std::move(g));
  return static_cast<std::uint64_t>(folded.ask()->as_int());
}

// Walks the list without keeping its head alive.
std::uint64_t fold_lazy(LazyList l, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Cons* c = l.force();
    if (!c) break;
    acc += digest(c->head);
    LazyList next = c->tail;
    l = std::move(next);
  }
  return acc;
}

Generator generator_workload(Op op, std::size_t n) {
  switch (op) {
    case Op::NatSum:
      return take(n, naturals());
    case Op::MapChain:
      return take(n, map1(fn::succ, map1(fn::succ, map1(fn::succ, naturals()))));
    case Op::ProdPrefix:
      return take(n, prod(naturals(), naturals()));
  }
  return empty();
}

LazyList lazy_workload(Op op) {
  switch (op) {
    case Op::NatSum:
      return lazy_nats();
    case Op::MapChain:
      return lazy_maplist(fn::succ, lazy_maplist(fn::succ, lazy_maplist(fn::succ, lazy_nats())));
    case Op::ProdPrefix:
      return transport2(prod, lazy2gen, gen2lazy, lazy_nats(), lazy_nats());
  }
  return LazyList::nil();
}

}  // namespace

std::string_view name(Op op) noexcept {
  switch (op) {
    case Op::NatSum: return "nat_sum";
    case Op::MapChain: return "map_chain";
    case Op::ProdPrefix: return "prod_prefix";
  }
  return "?";
}

std::string_view name(Impl impl) noexcept { return impl == Impl::Generator ? "generator" : "lazylist"; }

std::optional<Op> parse_op(std::string_view text) noexcept {
  for (Op op : {Op::NatSum, Op::MapChain, Op::ProdPrefix}) {
    if (name(op) == text) return op;
  }
  return std::nullopt;
}

std::uint64_t checksum(Op op, Impl impl, std::size_t n) {
  if (impl == Impl::Generator) return fold_generator(generator_workload(op, n));
  return fold_lazy(lazy_workload(op), n);
}

double Result::elements_per_second() const noexcept { return seconds > 0 ? static_cast<double>(n) / seconds : 0.0; }

Result run(Op op, Impl impl, std::size_t n) {
  const std::size_t base = probe::live_bytes();
  probe::reset_peak();
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t sum = checksum(op, impl, n);
  const auto stop = std::chrono::steady_clock::now();
  const std::size_t peak = probe::peak_bytes();
  return Result{impl, op, n, sum, std::chrono::duration<double>(stop - start).count(), peak > base ? peak - base : 0};
}

}  // namespace lazystreams::bench
