#ifndef LAZYSTREAMS_ENGINE_HPP
#define LAZYSTREAMS_ENGINE_HPP

#include <coroutine>
#include <exception>
#include <functional>
#include <optional>
#include <utility>

#include "lazystreams/generator.hpp"

namespace lazystreams {

/// A resumable computation written as a C++ coroutine. `co_yield v`
/// suspends the producer and hands `v` to whoever called Engine::next;
/// falling off the end completes it. Producers start suspended, so no code
/// runs until the first next().
///
///   Producer countdown(int n) {
///     while (n > 0) co_yield n--;
///   }
class Producer {
 public:
  struct promise_type {
    std::optional<Value> yielded;
    std::exception_ptr error;

    Producer get_return_object() noexcept {
      return Producer(std::coroutine_handle<promise_type>::from_promise(*this));
    }
    std::suspend_always initial_suspend() noexcept { return {}; }
    std::suspend_always final_suspend() noexcept { return {}; }
    std::suspend_always yield_value(Value v) noexcept {
      yielded = std::move(v);
      return {};
    }
    void return_void() noexcept {}
    void unhandled_exception() noexcept { error = std::current_exception(); }
  };

  Producer(Producer&& other) noexcept : handle_(std::exchange(other.handle_, {})) {}
  Producer& operator=(Producer&& other) noexcept {
    if (this != &other) {
      reset();
      handle_ = std::exchange(other.handle_, {});
    }
    return *this;
  }
  Producer(const Producer&) = delete;
  Producer& operator=(const Producer&) = delete;
  ~Producer() { reset(); }

 private:
  friend class Engine;
  explicit Producer(std::coroutine_handle<promise_type> h) noexcept : handle_(h) {}
  // Destroying a suspended frame runs the destructors of its live locals.
  void reset() noexcept {
    if (handle_) handle_.destroy();
    handle_ = {};
  }

  std::coroutine_handle<promise_type> handle_;
};

/// First-class engine over a Producer: stepped one answer at a time,
/// stoppable at any yield point.
class Engine {
 public:
  enum class Status { Fresh, Suspended, Completed, Stopped };

  explicit Engine(Producer producer) noexcept : producer_(std::move(producer)) {}

  Engine(Engine&&) noexcept = default;
  Engine& operator=(Engine&&) noexcept = default;

  /// Resumes the producer up to its next yield. Returns nullopt on
  /// completion (sticky). An exception escaping the producer completes the
  /// engine and is rethrown here; later calls return nullopt.
  std::optional<Value> next();

  /// Releases the producer frame without resuming it. Idempotent.
  void stop() noexcept;

  Status status() const noexcept { return status_; }

 private:
  Producer producer_;
  Status status_ = Status::Fresh;
  bool in_flight_ = false;
};

inline Engine engine_create(Producer p) { return Engine(std::move(p)); }
inline std::optional<Value> engine_next(Engine& e) { return e.next(); }
inline void engine_stop(Engine& e) noexcept { e.stop(); }

/// Generator whose asks step an engine over `p`; stopping it stops the engine.
Generator answer_source(Producer p);

/// Like answer_source(factory()), but keeps `factory` so the stream can be
/// cloned. Only meaningful for side-effect-free producers.
Generator clonable_source(std::function<Producer()> factory);

/// Fresh generator restarting a clonable source from its first element.
/// Throws NotClonable for other generators.
Generator clone_source(const Generator& g);

/// Naturals from a forward loop that yields as it goes (AND-stream).
Producer and_nats();

/// Naturals as the successive solutions of the search
///   nat_from(From, To) :- From = To ; nat_from(From + 1, To)
/// explored depth-first with an explicit choicepoint stack (OR-stream).
Producer or_nats();

}  // namespace lazystreams

#endif  // LAZYSTREAMS_ENGINE_HPP
