#ifndef LAZYSTREAMS_TOOLS_BENCH_WORKLOADS_HPP
#define LAZYSTREAMS_TOOLS_BENCH_WORKLOADS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace lazystreams::bench {

enum class Op { NatSum, MapChain, ProdPrefix };
enum class Impl { Generator, LazyList };

std::string_view name(Op op) noexcept;
std::string_view name(Impl impl) noexcept;
std::optional<Op> parse_op(std::string_view text) noexcept;

/// Runs workload `op` over `n` elements with the chosen representation and
/// folds the elements into a checksum. Both representations compute the
/// same stream, so their checksums must agree.
///
///   nat_sum      naturals, folded
///   map_chain    naturals through three successive succ maps
///   prod_prefix  first n pairs of the engine product nat x nat
std::uint64_t checksum(Op op, Impl impl, std::size_t n);

struct Result {
  Impl impl;
  Op op;
  std::size_t n;
  std::uint64_t checksum;
  double seconds;
  std::size_t peak_bytes;  // peak heap growth during the run

  double elements_per_second() const noexcept;
};

/// Timed and heap-profiled run of checksum(op, impl, n).
Result run(Op op, Impl impl, std::size_t n);

}  // namespace lazystreams::bench

#endif  // LAZYSTREAMS_TOOLS_BENCH_WORKLOADS_HPP
