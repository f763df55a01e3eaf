#ifndef LAZYSTREAMS_SOURCES_HPP
#define LAZYSTREAMS_SOURCES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lazystreams/generator.hpp"

namespace lazystreams {

/// Infinite stream of `v`.
Generator constant(Value v);

/// Infinite stream of Num values uniform in [0,1). Uses std::mt19937_64
/// seeded with `seed`; each element is the top 53 bits of one draw scaled
/// by 2^-53, so the sequence is identical on every platform.
Generator random_stream(std::uint64_t seed);

/// init, f(init), f(f(init)), ...  The successor is computed before the
/// current state is yielded; if `f` fails the stream ends there.
Generator iterate(UnaryFn f, Value init);

/// Drives `step : State -> optional<pair<State, Value>>` from `init`,
/// yielding the Value part until the step returns nullopt.
template <class State, class Step>
Generator unfold(Step step, State init) {
  return make_generator(
      [step = std::move(step), state = std::move(init)]() mutable -> std::optional<Value> {
        auto r = step(state);
        if (!r) return std::nullopt;
        state = std::move(r->first);
        return std::move(r->second);
      });
}

Generator from_list(std::vector<Value> values);

/// Empty stream.
Generator empty();

/// lo, lo+1, ..., hi-1. Empty when hi <= lo.
Generator range(std::int64_t lo, std::int64_t hi);

/// `values` repeated forever; empty if `values` is empty.
Generator cycle(std::vector<Value> values);

Generator take(std::size_t n, Generator g);
Generator drop(std::size_t n, Generator g);
/// take(to - from, drop(from, g)); requires from <= to.
Generator slice(std::size_t from, std::size_t to, Generator g);

Generator naturals();
Generator positives();
Generator negatives();

}  // namespace lazystreams

#endif  // LAZYSTREAMS_SOURCES_HPP
