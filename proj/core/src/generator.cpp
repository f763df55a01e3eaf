#include "lazystreams/generator.hpp"

namespace lazystreams {

std::optional<Value> Generator::ask() {
  if (!source_) return std::nullopt;
  std::optional<Value> v;
  try {
    v = source_->next();
  } catch (...) {
    stop();
    throw;
  }
  if (!v) stop();
  return v;
}

void Generator::stop() noexcept { source_.reset(); }

Generator Generator::clone() const {
  if (!factory_) throw NotClonable();
  return (*factory_)();
}

Generator Generator::with_factory(Factory factory) && {
  factory_ = std::make_shared<const Factory>(std::move(factory));
  return std::move(*this);
}

std::string show(std::size_t n, Generator& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < n; ++i) {
    auto v = g.ask();
    if (!v) break;
    if (i > 0) out += ", ";
    out += v->to_string();
  }
  out += ']';
  return out;
}

std::vector<Value> take_values(std::size_t n, Generator& g) {
  std::vector<Value> out;
  while (out.size() < n) {
    auto v = g.ask();
    if (!v) break;
    out.push_back(std::move(*v));
  }
  return out;
}

std::vector<Value> drain(Generator& g) {
  std::vector<Value> out;
  while (auto v = g.ask()) out.push_back(std::move(*v));
  return out;
}

namespace fn {

std::optional<Value> succ(const Value& x) {
  std::int64_t r;
  if (!x.is_int() || __builtin_add_overflow(x.as_int(), 1, &r)) return std::nullopt;
  return Value(r);
}

std::optional<Value> twice(const Value& x) {
  if (x.is_num()) return Value(2 * x.as_num());
  std::int64_t r;
  if (!x.is_int() || __builtin_mul_overflow(x.as_int(), 2, &r)) return std::nullopt;
  return Value(r);
}

std::optional<Value> identity(const Value& x) { return x; }

std::optional<Value> plus(const Value& x, const Value& y) {
  if (x.is_int() && y.is_int()) {
    std::int64_t r;
    if (__builtin_add_overflow(x.as_int(), y.as_int(), &r)) return std::nullopt;
    return Value(r);
  }
  auto as_double = [](const Value& v) -> std::optional<double> {
    if (v.is_num()) return v.as_num();
    if (v.is_int()) return static_cast<double>(v.as_int());
    return std::nullopt;
  };
  auto a = as_double(x);
  auto b = as_double(y);
  if (!a || !b) return std::nullopt;
  return Value(*a + *b);
}

std::optional<Value> make_pair(const Value& x, const Value& y) { return Value::pair(x, y); }

}  // namespace fn

}  // namespace lazystreams
