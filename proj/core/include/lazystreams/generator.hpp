#ifndef LAZYSTREAMS_GENERATOR_HPP
#define LAZYSTREAMS_GENERATOR_HPP

#include <cstddef>
#include <functional>
#include <iterator>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "lazystreams/value.hpp"

namespace lazystreams {

/// The step procedure behind a Generator. `next` returns the following
/// element, or nullopt once the source is exhausted. A source is destroyed
/// as soon as its generator is done, so destructors release resources.
class Source {
 public:
  virtual ~Source() = default;
  virtual std::optional<Value> next() = 0;
};

/// Raised when cloning a generator that was not built from a factory.
class NotClonable : public std::logic_error {
 public:
  NotClonable() : std::logic_error("generator is not clonable") {}
};

/// A stateful single-consumer element source with sticky termination.
///
/// Once `ask` has returned nullopt (or `stop` has been called, or the step
/// threw), the source is released and never invoked again. A fresh generator
/// over an empty source reports `is_done() == false` until its first ask.
class Generator {
 public:
  using Factory = std::function<Generator()>;

  explicit Generator(std::unique_ptr<Source> source) noexcept : source_(std::move(source)) {}

  Generator(Generator&&) noexcept = default;
  Generator& operator=(Generator&&) noexcept = default;
  Generator(const Generator&) = delete;
  Generator& operator=(const Generator&) = delete;
  ~Generator() = default;

  /// Produces the next element, or nullopt when exhausted. An exception from
  /// the step marks the generator done before propagating.
  std::optional<Value> ask();

  /// Marks the generator done and releases the source. Idempotent.
  void stop() noexcept;

  bool is_done() const noexcept { return source_ == nullptr; }

  bool clonable() const noexcept { return factory_ != nullptr; }

  /// Rebuilds the generator from its factory, starting from the beginning.
  /// Throws NotClonable for generators without one.
  Generator clone() const;

  /// Attaches a factory used by `clone`. The factory must build
  /// independent generators equivalent to this one.
  Generator with_factory(Factory factory) &&;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Value;
    using difference_type = std::ptrdiff_t;
    using pointer = const Value*;
    using reference = const Value&;

    iterator() = default;
    explicit iterator(Generator* gen) : gen_(gen) { advance(); }

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_; }

   private:
    void advance() { current_ = gen_->ask(); }
    Generator* gen_ = nullptr;
    std::optional<Value> current_;
  };

  /// Iterating a generator consumes it.
  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  std::unique_ptr<Source> source_;
  std::shared_ptr<const Factory> factory_;
};

namespace detail {

template <class Step>
class FnSource final : public Source {
 public:
  explicit FnSource(Step step) : step_(std::move(step)) {}
  std::optional<Value> next() override { return step_(); }

 private:
  Step step_;
};

}  // namespace detail

/// Wraps a nullary callable returning std::optional<Value> as a generator.
template <class Step>
  requires std::is_invocable_r_v<std::optional<Value>, Step&>
Generator make_generator(Step step) {
  return Generator(std::make_unique<detail::FnSource<Step>>(std::move(step)));
}

// Free-function spelling of the protocol.
inline std::optional<Value> ask(Generator& g) { return g.ask(); }
inline void stop(Generator& g) noexcept { g.stop(); }
inline bool is_done(const Generator& g) noexcept { return g.is_done(); }

/// Consuming range over the remaining elements of `g`.
inline Generator& enumerate(Generator& g) { return g; }

/// Renders up to `n` elements of `g` as "[e1, e2, ...]", consuming them.
std::string show(std::size_t n, Generator& g);

/// Collects up to `n` elements of `g`.
std::vector<Value> take_values(std::size_t n, Generator& g);

/// Drains a finite generator.
std::vector<Value> drain(Generator& g);

/// Element procedures. Returning nullopt is a failure, which ends the
/// stream that applies the procedure.
using UnaryFn = std::function<std::optional<Value>(const Value&)>;
using BinaryFn = std::function<std::optional<Value>(const Value&, const Value&)>;

namespace fn {

/// x+1 on Int (fails on other kinds).
std::optional<Value> succ(const Value& x);
/// 2x on Int or Num.
std::optional<Value> twice(const Value& x);
std::optional<Value> identity(const Value& x);
/// Int+Int is Int; any Num operand promotes to Num; other kinds fail.
std::optional<Value> plus(const Value& x, const Value& y);
std::optional<Value> make_pair(const Value& x, const Value& y);

}  // namespace fn

}  // namespace lazystreams

#endif  // LAZYSTREAMS_GENERATOR_HPP
