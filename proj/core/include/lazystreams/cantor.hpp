#ifndef LAZYSTREAMS_CANTOR_HPP
#define LAZYSTREAMS_CANTOR_HPP

#include <cstdint>
#include <utility>

namespace lazystreams {

/// (x+y)(x+y+1)/2 + y. The result must fit in 64 bits.
std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) noexcept;

/// Exact inverse of cantor_pair for every 64-bit n.
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n) noexcept;

}  // namespace lazystreams

#endif  // LAZYSTREAMS_CANTOR_HPP
