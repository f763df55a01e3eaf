#ifndef LAZYSTREAMS_LANG_HPP
#define LAZYSTREAMS_LANG_HPP

// Generator-expression language.
//
//   expr  := prod ('+' prod)*
//   prod  := prim ('*' prim)*
//   prim  := INT ':' INT | INT | SYM | '[' (value (',' value)*)? ']'
//          | '{' expr '}' | '(' expr ')'
//   value := INT | SYM
//
// '+' is the interleaving sum, '*' the engine product, N:M a half-open
// range, [..] a finite list, {E} removes duplicates from E. A bare INT is
// a constant stream; a bare SYM names an environment binding, falling back
// to a constant stream of the symbol.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lazystreams/generator.hpp"

namespace lazystreams {

struct Token {
  enum class Kind { Int, Sym, Plus, Star, Colon, LBrack, RBrack, LBrace, RBrace, LParen, RParen, Comma, End };

  Kind kind;
  std::string_view text;  // slice of the tokenized input
  std::size_t pos;        // byte offset

  friend bool operator==(const Token&, const Token&) = default;
};

std::string_view token_kind_name(Token::Kind kind) noexcept;

/// Base for errors carrying a byte offset into the source text.
class LanguageError : public std::runtime_error {
 public:
  LanguageError(const std::string& what, std::size_t pos) : std::runtime_error(what), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

class LexError : public LanguageError {
 public:
  using LanguageError::LanguageError;
};

class SyntaxError : public LanguageError {
 public:
  SyntaxError(std::size_t pos, std::string found, std::vector<Token::Kind> expected);
  const std::vector<Token::Kind>& expected() const noexcept { return expected_; }

 private:
  std::vector<Token::Kind> expected_;
};

/// Splits `text` into tokens, appending End. The returned tokens view
/// `text`, which must outlive them.
std::vector<Token> tokenize(std::string_view text);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  struct Sum {
    ExprPtr left, right;
  };
  struct Prod {
    ExprPtr left, right;
  };
  struct Range {
    std::int64_t lo, hi;
  };
  struct ListLit {
    std::vector<Value> values;
  };
  struct SetOf {
    ExprPtr body;
  };
  struct ConstLit {
    Value value;
  };
  struct Ref {
    Symbol name;
  };
  // Splices an arbitrary generator (engine-backed or otherwise) into an
  // expression. Each evaluation calls the factory again.
  struct Embed {
    std::shared_ptr<const Generator::Factory> factory;
  };

  std::variant<Sum, Prod, Range, ListLit, SetOf, ConstLit, Ref, Embed> node;
};

// Node constructors.
ExprPtr make_sum(ExprPtr l, ExprPtr r);
ExprPtr make_prod(ExprPtr l, ExprPtr r);
ExprPtr make_range(std::int64_t lo, std::int64_t hi);
ExprPtr make_list(std::vector<Value> values);
ExprPtr make_setof(ExprPtr body);
ExprPtr make_const(Value v);
ExprPtr make_ref(std::string_view name);
ExprPtr make_embed(Generator::Factory factory);

/// Structural equality; Embed nodes compare by factory identity.
bool operator==(const Expr& a, const Expr& b);

/// Canonical text with the minimal parentheses needed to reparse to an
/// equal tree. Embed nodes render as "<embed>", which does not parse.
std::string render(const Expr& e);

ExprPtr parse(const std::vector<Token>& tokens);
ExprPtr parse(std::string_view text);

/// Name bindings for Ref nodes. Every lookup builds a fresh generator.
class Env {
 public:
  void bind(std::string_view name, Generator::Factory factory);
  const Generator::Factory* find(Symbol name) const;

 private:
  std::map<std::string, Generator::Factory, std::less<>> bindings_;
};

/// nat, pos, neg and rand (seeded with `seed`).
Env default_env(std::uint64_t seed = 42);

Generator eval_expr(const Expr& e, const Env& env);

/// tokenize + parse + eval, then collect up to n elements.
std::vector<Value> eval_text(std::string_view text, const Env& env, std::size_t n);

}  // namespace lazystreams

#endif  // LAZYSTREAMS_LANG_HPP
