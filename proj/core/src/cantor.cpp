#include "lazystreams/cantor.hpp"

#include <cmath>

namespace lazystreams {

namespace {

__extension__ using u128 = unsigned __int128;

u128 triangle(u128 t) { return t * (t + 1) / 2; }

}  // namespace

std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) noexcept {
  const u128 s = u128{x} + y;
  return static_cast<std::uint64_t>(triangle(s) + y);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n) noexcept {
  // Largest t with t(t+1)/2 <= n. The floating-point estimate is only a
  // starting point; the final t is settled by exact integer comparison.
  auto t = static_cast<u128>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while (t > 0 && triangle(t) > n) --t;
  while (triangle(t + 1) <= n) ++t;
  const auto y = static_cast<std::uint64_t>(n - triangle(t));
  const auto x = static_cast<std::uint64_t>(t) - y;
  return {x, y};
}

}  // namespace lazystreams
