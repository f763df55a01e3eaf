#include "lazystreams/sources.hpp"

#include <limits>
#include <random>

namespace lazystreams {

Generator constant(Value v) {
  return make_generator([v = std::move(v)]() -> std::optional<Value> { return v; });
}

Generator random_stream(std::uint64_t seed) {
  return make_generator([rng = std::mt19937_64(seed)]() mutable -> std::optional<Value> {
    constexpr double kScale = 1.0 / static_cast<double>(std::uint64_t{1} << 53);
    return Value(static_cast<double>(rng() >> 11) * kScale);
  });
}

Generator iterate(UnaryFn f, Value init) {
  return make_generator([f = std::move(f), state = std::move(init)]() mutable -> std::optional<Value> {
    auto next = f(state);
    if (!next) return std::nullopt;
    return std::exchange(state, std::move(*next));
  });
}

Generator from_list(std::vector<Value> values) {
  return make_generator([values = std::move(values), pos = std::size_t{0}]() mutable -> std::optional<Value> {
    if (pos == values.size()) return std::nullopt;
    return std::move(values[pos++]);
  });
}

Generator empty() {
  return make_generator([]() -> std::optional<Value> { return std::nullopt; });
}

Generator range(std::int64_t lo, std::int64_t hi) {
  return make_generator([next = lo, hi]() mutable -> std::optional<Value> {
    if (next >= hi) return std::nullopt;
    return Value(next++);
  });
}

Generator cycle(std::vector<Value> values) {
  return make_generator([values = std::move(values), pos = std::size_t{0}]() mutable -> std::optional<Value> {
    if (values.empty()) return std::nullopt;
    if (pos == values.size()) pos = 0;
    return values[pos++];
  });
}

Generator take(std::size_t n, Generator g) {
  return make_generator([n, g = std::move(g)]() mutable -> std::optional<Value> {
    if (n == 0) {
      g.stop();
      return std::nullopt;
    }
    --n;
    return g.ask();
  });
}

Generator drop(std::size_t n, Generator g) {
  return make_generator([n, g = std::move(g)]() mutable -> std::optional<Value> {
    for (; n > 0; --n) {
      if (!g.ask()) return std::nullopt;
    }
    return g.ask();
  });
}

Generator slice(std::size_t from, std::size_t to, Generator g) {
  return take(to - from, drop(from, std::move(g)));
}

Generator naturals() { return iterate(fn::succ, Value(0)); }

Generator positives() { return iterate(fn::succ, Value(1)); }

Generator negatives() {
  return iterate(
      [](const Value& x) -> std::optional<Value> {
        if (x.as_int() == std::numeric_limits<std::int64_t>::min()) return std::nullopt;
        return Value(x.as_int() - 1);
      },
      Value(-1));
}

}  // namespace lazystreams
