#include "lazystreams/combinators.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <ranges>
#include <unordered_set>
#include <vector>

#include "lazystreams/cantor.hpp"
#include "lazystreams/engine.hpp"

namespace lazystreams {

namespace {

// Prefix of a generator, consumed on demand.
class Prefix {
 public:
  explicit Prefix(Generator gen) : gen_(std::move(gen)) {}

  // Makes element i available if it exists.
  bool fetch(std::size_t i) {
    while (buf_.size() <= i) {
      if (len_) return false;
      auto v = gen_.ask();
      if (!v) {
        len_ = buf_.size();
        return false;
      }
      buf_.push_back(std::move(*v));
    }
    return true;
  }

  const Value& operator[](std::size_t i) const { return buf_[i]; }
  // Length once the generator is known to be exhausted.
  std::optional<std::size_t> length() const { return len_; }
  bool known_empty() const { return len_ == std::size_t{0}; }

 private:
  Generator gen_;
  std::vector<Value> buf_;
  std::optional<std::size_t> len_;
};

struct Side {
  Generator gen;
  std::vector<Value> seen;  // production order; read back newest first
};

Value oriented(bool first_active, const Value& active, const Value& passive) {
  return first_active ? Value::pair(active, passive) : Value::pair(passive, active);
}

Producer prod_goal(Generator g1, Generator g2) {
  auto first = g1.ask();
  if (!first) co_return;
  Side active{std::move(g1), {}};
  Side passive{std::move(g2), {}};
  bool first_active = true;
  Value a = std::move(*first);
  for (;;) {
    for (const Value& y : passive.seen | std::views::reverse) co_yield oriented(first_active, a, y);
    auto b = passive.gen.ask();
    if (!b) break;
    active.seen.push_back(std::move(a));
    std::swap(active, passive);
    first_active = !first_active;
    a = std::move(*b);
  }
  // The passive side is exhausted: pair whatever the active side still
  // produces with the passive side's whole history.
  while (auto x = active.gen.ask()) {
    for (const Value& y : passive.seen | std::views::reverse) co_yield oriented(first_active, *x, y);
  }
}

}  // namespace

Generator sum(Generator g1, Generator g2) {
  return make_generator([g1 = std::move(g1), g2 = std::move(g2)]() mutable -> std::optional<Value> {
    if (auto x = g1.ask()) {
      std::swap(g1, g2);
      return x;
    }
    return g2.ask();
  });
}

Generator prod(Generator g1, Generator g2) { return answer_source(prod_goal(std::move(g1), std::move(g2))); }

Generator conv(Generator g1, Generator g2) {
  return make_generator([xs = Prefix(std::move(g1)), ys = Prefix(std::move(g2)), d = std::size_t{0},
                         i = std::size_t{0}]() mutable -> std::optional<Value> {
    for (;;) {
      if (xs.known_empty() || ys.known_empty()) return std::nullopt;
      const auto len1 = xs.length();
      const auto len2 = ys.length();
      if (len1 && len2 && d + 2 > *len1 + *len2) return std::nullopt;
      const std::size_t lo = (len2 && d + 1 > *len2) ? d + 1 - *len2 : 0;
      const std::size_t hi = len1 ? std::min(d, *len1 - 1) : d;
      i = std::max(i, lo);
      if (i > hi) {
        ++d;
        i = 0;
        continue;
      }
      // A failed fetch discovers a length; the window is recomputed.
      if (!xs.fetch(i) || !ys.fetch(d - i)) continue;
      Value out = Value::pair(xs[i], ys[d - i]);
      ++i;
      return out;
    }
  });
}

Generator prod_cantor(Generator g1, Generator g2) {
  return make_generator([xs = Prefix(std::move(g1)), ys = Prefix(std::move(g2)), n = std::uint64_t{0},
                         emitted = std::size_t{0}]() mutable -> std::optional<Value> {
    for (;; ++n) {
      if (xs.known_empty() || ys.known_empty()) return std::nullopt;
      if (xs.length() && ys.length() && emitted == *xs.length() * *ys.length()) return std::nullopt;
      const auto [x, y] = cantor_unpair(n);
      if (!xs.fetch(x) || !ys.fetch(y)) continue;
      ++n;
      ++emitted;
      return Value::pair(xs[x], ys[y]);
    }
  });
}

Generator map1(UnaryFn f, Generator g) {
  return make_generator([f = std::move(f), g = std::move(g)]() mutable -> std::optional<Value> {
    auto x = g.ask();
    if (!x) return std::nullopt;
    return f(*x);
  });
}

Generator map2(BinaryFn f, Generator g1, Generator g2) {
  return make_generator(
      [f = std::move(f), g1 = std::move(g1), g2 = std::move(g2)]() mutable -> std::optional<Value> {
        auto x = g1.ask();
        if (!x) return std::nullopt;
        auto y = g2.ask();
        if (!y) return std::nullopt;
        return f(*x, *y);
      });
}

Generator reduce(BinaryFn f, Value init, Generator g) {
  return make_generator([f = std::move(f), acc = std::move(init), g = std::move(g)]() mutable -> std::optional<Value> {
    if (g.is_done()) return std::nullopt;
    while (auto y = g.ask()) {
      if (auto z = f(acc, *y)) acc = std::move(*z);
    }
    return acc;
  });
}

Generator scan(BinaryFn f, Value init, Generator g) {
  return make_generator([f = std::move(f), acc = std::move(init), g = std::move(g)]() mutable -> std::optional<Value> {
    auto y = g.ask();
    if (!y) return std::nullopt;
    auto z = f(acc, *y);
    if (!z) return std::nullopt;
    acc = *z;
    return z;
  });
}

Generator setify(Generator g) {
  return make_generator(
      [g = std::move(g), seen = std::unordered_set<Value, ValueHash>()]() mutable -> std::optional<Value> {
        while (auto x = g.ask()) {
          if (seen.insert(*x).second) return x;
        }
        return std::nullopt;
      });
}

namespace {

struct SharedSplit {
  SharedSplit(std::function<bool(const Value&)> p, Generator g) : pred(std::move(p)), source(std::move(g)) {}

  // Next element for side `want` (true = matching side).
  std::optional<Value> next(bool want) {
    auto& mine = want ? accepted : rejected;
    while (mine.empty()) {
      auto x = source.ask();
      if (!x) return std::nullopt;
      (pred(*x) ? accepted : rejected).push_back(std::move(*x));
    }
    Value v = std::move(mine.front());
    mine.pop_front();
    return v;
  }

  std::function<bool(const Value&)> pred;
  Generator source;
  std::deque<Value> accepted;
  std::deque<Value> rejected;
};

}  // namespace

std::pair<Generator, Generator> partition(std::function<bool(const Value&)> pred, Generator g) {
  auto shared = std::make_shared<SharedSplit>(std::move(pred), std::move(g));
  auto side = [shared](bool want) {
    return make_generator([shared, want]() -> std::optional<Value> { return shared->next(want); });
  };
  return {side(true), side(false)};
}

}  // namespace lazystreams
