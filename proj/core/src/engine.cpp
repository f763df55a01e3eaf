#include "lazystreams/engine.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace lazystreams {

std::optional<Value> Engine::next() {
  if (status_ == Status::Completed || status_ == Status::Stopped) return std::nullopt;
  if (in_flight_) throw std::logic_error("engine resumed from inside its own producer");

  auto handle = producer_.handle_;
  auto& promise = handle.promise();
  promise.yielded.reset();
  in_flight_ = true;
  handle.resume();
  in_flight_ = false;

  if (handle.done()) {
    status_ = Status::Completed;
    auto error = std::exchange(promise.error, nullptr);
    producer_.reset();
    if (error) std::rethrow_exception(error);
    return std::nullopt;
  }
  status_ = Status::Suspended;
  return std::move(promise.yielded);
}

void Engine::stop() noexcept {
  if (status_ == Status::Completed || status_ == Status::Stopped) return;
  status_ = Status::Stopped;
  producer_.reset();
}

namespace {

class EngineSource final : public Source {
 public:
  explicit EngineSource(Producer p) : engine_(std::move(p)) {}
  // Source destruction is the generator's stop.
  ~EngineSource() override { engine_.stop(); }
  std::optional<Value> next() override { return engine_.next(); }

 private:
  Engine engine_;
};

}  // namespace

Generator answer_source(Producer p) { return Generator(std::make_unique<EngineSource>(std::move(p))); }

Generator clonable_source(std::function<Producer()> factory) {
  Generator g = answer_source(factory());
  return std::move(g).with_factory([factory = std::move(factory)] { return clonable_source(factory); });
}

Generator clone_source(const Generator& g) { return g.clone(); }

Producer and_nats() {
  for (std::int64_t n = 0;; ++n) co_yield n;
}

Producer or_nats() {
  struct Goal {
    enum class Kind { Unify, Descend } kind;
    std::int64_t from;
  };
  // Pending alternatives, last one on top. The final alternative of a
  // disjunction is popped before it is expanded, so the stack never grows.
  std::vector<Goal> choicepoints;
  choicepoints.push_back({Goal::Kind::Descend, 0});
  while (!choicepoints.empty()) {
    const Goal goal = choicepoints.back();
    choicepoints.pop_back();
    if (goal.kind == Goal::Kind::Unify) {
      co_yield goal.from;
    } else {
      choicepoints.push_back({Goal::Kind::Descend, goal.from + 1});
      choicepoints.push_back({Goal::Kind::Unify, goal.from});
    }
  }
}

}  // namespace lazystreams
