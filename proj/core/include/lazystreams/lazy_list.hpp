#ifndef LAZYSTREAMS_LAZY_LIST_HPP
#define LAZYSTREAMS_LAZY_LIST_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "lazystreams/generator.hpp"

namespace lazystreams {

namespace detail {
struct Cell;
}

struct Cons;

/// Shared handle to a memoized, possibly infinite cons-list.
///
/// A cell starts suspended and is computed by the first `force`; the result
/// is stored and every later force (from any holder) returns the same
/// content. Holding a list pins every forced cell reachable from it, so
/// long traversals should advance their handle instead of keeping the head.
class LazyList {
 public:
  using Thunk = std::function<std::optional<std::pair<Value, LazyList>>()>;

  /// A cell whose content is computed by `thunk` on first force; nullopt
  /// makes it Nil.
  static LazyList suspended(Thunk thunk);
  static LazyList nil();
  static LazyList cons(Value head, LazyList tail);

  /// Content of this cell, computing it on first use; nullptr means Nil.
  /// If the thunk throws, the cell stays suspended and the error propagates.
  const Cons* force() const;

  bool is_nil() const { return force() == nullptr; }
  /// Throw std::out_of_range on Nil.
  const Value& head() const;
  LazyList tail() const;

  bool is_forced() const noexcept;
  bool same_cell(const LazyList& other) const noexcept { return cell_ == other.cell_; }

 private:
  friend struct detail::Cell;
  explicit LazyList(std::shared_ptr<detail::Cell> cell) noexcept : cell_(std::move(cell)) {}

  std::shared_ptr<detail::Cell> cell_;
};

struct Cons {
  Value head;
  LazyList tail;
};

/// List driven by `step : State -> optional<pair<State, Value>>` from
/// `init`; the step runs once per cell, when that cell is first forced.
template <class State, class Step>
LazyList lazy_list(Step step, State init) {
  struct Driver {
    static LazyList cell(std::shared_ptr<Step> step, State state) {
      return LazyList::suspended([step = std::move(step), state = std::move(state)]()
                                     -> std::optional<std::pair<Value, LazyList>> {
        auto r = (*step)(state);
        if (!r) return std::nullopt;
        return std::pair<Value, LazyList>(std::move(r->second), cell(step, std::move(r->first)));
      });
    }
  };
  return Driver::cell(std::make_shared<Step>(std::move(step)), std::move(init));
}

LazyList lazy_nats();
LazyList lazy_nats_from(std::int64_t n);

/// Lazy list of g's elements; g is asked only when a cell is forced.
LazyList gen2lazy(Generator g);

/// Generator walking `l` from its current head, forcing cells as it goes.
/// It holds only the not-yet-visited suffix.
Generator lazy2gen(LazyList l);

/// First min(n, length) elements.
std::vector<Value> lazy_take(std::size_t n, const LazyList& l);

// Iso-functor transport: convert the argument(s) with `from`, apply `op`
// in that representation, convert the result(s) back with `to`.

template <class Op, class From, class To, class A>
auto transport(Op&& op, From&& from, To&& to, A&& a) {
  return to(op(from(std::forward<A>(a))));
}

template <class Op, class From, class To, class A, class B>
auto transport2(Op&& op, From&& from, To&& to, A&& a, B&& b) {
  return to(op(from(std::forward<A>(a)), from(std::forward<B>(b))));
}

/// One input, two outputs: `op` returns a pair.
template <class Op, class From, class To, class A>
auto transport_split(Op&& op, From&& from, To&& to, A&& a) {
  auto [y, z] = op(from(std::forward<A>(a)));
  auto left = to(std::move(y));
  auto right = to(std::move(z));
  return std::pair<decltype(left), decltype(right)>(std::move(left), std::move(right));
}

/// Elementwise f, lazily; safe on infinite lists. Borrows map1 from the
/// generator side through transport.
LazyList lazy_maplist(UnaryFn f, LazyList l);

/// a0, b0, a1, b1, ... continuing with the longer list.
LazyList lazy_sum(LazyList a, LazyList b);

/// Interleaving sum of generators borrowed from lazy_sum through transport.
Generator sum_alt(Generator g1, Generator g2);

}  // namespace lazystreams

#endif  // LAZYSTREAMS_LAZY_LIST_HPP
