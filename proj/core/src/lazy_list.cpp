#include "lazystreams/lazy_list.hpp"

#include <stdexcept>
#include <variant>

#include "lazystreams/combinators.hpp"

namespace lazystreams {

namespace detail {

struct Nil {};

struct Cell {
  std::variant<LazyList::Thunk, Cons, Nil> content;
  bool forcing = false;

  explicit Cell(LazyList::Thunk t) : content(std::move(t)) {}
  explicit Cell(Cons c) : content(std::move(c)) {}
  Cell() : content(Nil{}) {}

  Cell(const Cell&) = delete;
  Cell& operator=(const Cell&) = delete;

  // Unlink uniquely owned successors one at a time so that dropping the
  // head of a long forced list does not recurse once per cell.
  ~Cell() {
    auto* cons = std::get_if<Cons>(&content);
    if (!cons) return;
    std::shared_ptr<Cell> next = std::move(cons->tail.cell_);
    while (next && next.use_count() == 1) {
      auto* next_cons = std::get_if<Cons>(&next->content);
      if (!next_cons) break;
      std::shared_ptr<Cell> after = std::move(next_cons->tail.cell_);
      next = std::move(after);
    }
  }
};

}  // namespace detail

LazyList LazyList::suspended(Thunk thunk) { return LazyList(std::make_shared<detail::Cell>(std::move(thunk))); }

LazyList LazyList::nil() { return LazyList(std::make_shared<detail::Cell>()); }

LazyList LazyList::cons(Value head, LazyList tail) {
  return LazyList(std::make_shared<detail::Cell>(Cons{std::move(head), std::move(tail)}));
}

const Cons* LazyList::force() const {
  detail::Cell& cell = *cell_;
  if (auto* thunk = std::get_if<Thunk>(&cell.content)) {
    if (cell.forcing) throw std::logic_error("lazy list cell forced while it is being computed");
    cell.forcing = true;
    std::optional<std::pair<Value, LazyList>> produced;
    try {
      produced = (*thunk)();
    } catch (...) {
      cell.forcing = false;
      throw;
    }
    cell.forcing = false;
    if (produced) {
      cell.content = Cons{std::move(produced->first), std::move(produced->second)};
    } else {
      cell.content = detail::Nil{};
    }
  }
  return std::get_if<Cons>(&cell.content);
}

const Value& LazyList::head() const {
  const Cons* c = force();
  if (!c) throw std::out_of_range("head of empty lazy list");
  return c->head;
}

LazyList LazyList::tail() const {
  const Cons* c = force();
  if (!c) throw std::out_of_range("tail of empty lazy list");
  return c->tail;
}

bool LazyList::is_forced() const noexcept { return !std::holds_alternative<Thunk>(cell_->content); }

LazyList lazy_nats_from(std::int64_t n) {
  return lazy_list(
      [](std::int64_t k) -> std::optional<std::pair<std::int64_t, Value>> { return std::pair(k + 1, Value(k)); }, n);
}

LazyList lazy_nats() { return lazy_nats_from(0); }

LazyList gen2lazy(Generator g) {
  using State = std::shared_ptr<Generator>;
  return lazy_list(
      [](const State& gen) -> std::optional<std::pair<State, Value>> {
        auto x = gen->ask();
        if (!x) return std::nullopt;
        return std::pair(gen, std::move(*x));
      },
      std::make_shared<Generator>(std::move(g)));
}

Generator lazy2gen(LazyList l) {
  return make_generator([cursor = std::move(l)]() mutable -> std::optional<Value> {
    const Cons* c = cursor.force();
    if (!c) return std::nullopt;
    Value v = c->head;
    LazyList next = c->tail;
    cursor = std::move(next);
    return v;
  });
}

std::vector<Value> lazy_take(std::size_t n, const LazyList& l) {
  std::vector<Value> out;
  LazyList cursor = l;
  while (out.size() < n) {
    const Cons* c = cursor.force();
    if (!c) break;
    out.push_back(c->head);
    LazyList next = c->tail;
    cursor = std::move(next);
  }
  return out;
}

LazyList lazy_maplist(UnaryFn f, LazyList l) {
  return transport([f = std::move(f)](Generator g) { return map1(f, std::move(g)); }, lazy2gen, gen2lazy,
                   std::move(l));
}

LazyList lazy_sum(LazyList a, LazyList b) {
  using State = std::pair<LazyList, LazyList>;
  return lazy_list(
      [](const State& s) -> std::optional<std::pair<State, Value>> {
        const auto& [xs, ys] = s;
        if (const Cons* x = xs.force()) return std::pair(State(ys, x->tail), x->head);
        if (const Cons* y = ys.force()) return std::pair(State(y->tail, xs), y->head);
        return std::nullopt;
      },
      State(std::move(a), std::move(b)));
}

Generator sum_alt(Generator g1, Generator g2) {
  return transport2(lazy_sum, gen2lazy, lazy2gen, std::move(g1), std::move(g2));
}

}  // namespace lazystreams
