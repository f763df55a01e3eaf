#include "lazystreams/combinators.hpp"
#include "lazystreams/lang.hpp"
#include "lazystreams/sources.hpp"

namespace lazystreams {

void Env::bind(std::string_view name, Generator::Factory factory) {
  bindings_.insert_or_assign(std::string(name), std::move(factory));
}

const Generator::Factory* Env::find(Symbol name) const {
  auto it = bindings_.find(name.text());
  return it == bindings_.end() ? nullptr : &it->second;
}

Env default_env(std::uint64_t seed) {
  Env env;
  env.bind("nat", naturals);
  env.bind("pos", positives);
  env.bind("neg", negatives);
  env.bind("rand", [seed] { return random_stream(seed); });
  return env;
}

Generator eval_expr(const Expr& e, const Env& env) {
  return std::visit(
      [&](const auto& n) -> Generator {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Sum>) {
          return sum(eval_expr(*n.left, env), eval_expr(*n.right, env));
        } else if constexpr (std::is_same_v<T, Expr::Prod>) {
          return prod(eval_expr(*n.left, env), eval_expr(*n.right, env));
        } else if constexpr (std::is_same_v<T, Expr::Range>) {
          return range(n.lo, n.hi);
        } else if constexpr (std::is_same_v<T, Expr::ListLit>) {
          return from_list(n.values);
        } else if constexpr (std::is_same_v<T, Expr::SetOf>) {
          return setify(eval_expr(*n.body, env));
        } else if constexpr (std::is_same_v<T, Expr::ConstLit>) {
          return constant(n.value);
        } else if constexpr (std::is_same_v<T, Expr::Ref>) {
          if (const auto* factory = env.find(n.name)) return (*factory)();
          return constant(Value(n.name));
        } else {
          return (*n.factory)();
        }
      },
      e.node);
}

std::vector<Value> eval_text(std::string_view text, const Env& env, std::size_t n) {
  ExprPtr e = parse(text);
  Generator g = eval_expr(*e, env);
  return take_values(n, g);
}

}  // namespace lazystreams
