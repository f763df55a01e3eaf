#include <algorithm>
#include <charconv>

#include "lazystreams/lang.hpp"

namespace lazystreams {

namespace {

std::string describe_expected(const std::vector<Token::Kind>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += token_kind_name(expected[i]);
  }
  return out;
}

std::int64_t int_of(const Token& t) {
  std::int64_t v = 0;
  std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  return v;
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {
    if (tokens_.empty() || tokens_.back().kind != Token::Kind::End) {
      throw std::invalid_argument("token sequence must end with End");
    }
  }

  ExprPtr parse_all() {
    ExprPtr e = expr();
    expect(Token::Kind::End);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  // Records `kind` as acceptable here, for error reporting.
  bool at(Token::Kind kind) {
    if (std::find(expected_.begin(), expected_.end(), kind) == expected_.end()) expected_.push_back(kind);
    return peek().kind == kind;
  }

  const Token& advance() {
    expected_.clear();
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::End) ++pos_;
    return t;
  }

  const Token& expect(Token::Kind kind) {
    if (!at(kind)) fail();
    return advance();
  }

  [[noreturn]] void fail() {
    const Token& t = peek();
    std::string found = t.kind == Token::Kind::End ? std::string("end of input") : "'" + std::string(t.text) + "'";
    throw SyntaxError(t.pos, std::move(found), expected_);
  }

  ExprPtr expr() {
    ExprPtr left = prod();
    while (at(Token::Kind::Plus)) {
      advance();
      left = make_sum(std::move(left), prod());
    }
    return left;
  }

  ExprPtr prod() {
    ExprPtr left = prim();
    while (at(Token::Kind::Star)) {
      advance();
      left = make_prod(std::move(left), prim());
    }
    return left;
  }

  ExprPtr prim() {
    if (at(Token::Kind::Int)) {
      const std::int64_t lo = int_of(advance());
      if (at(Token::Kind::Colon)) {
        advance();
        return make_range(lo, int_of(expect(Token::Kind::Int)));
      }
      return make_const(Value(lo));
    }
    if (at(Token::Kind::Sym)) return make_ref(advance().text);
    if (at(Token::Kind::LBrack)) {
      advance();
      std::vector<Value> values;
      if (at(Token::Kind::RBrack)) {
        advance();
        return make_list(std::move(values));
      }
      values.push_back(value());
      while (at(Token::Kind::Comma)) {
        advance();
        values.push_back(value());
      }
      expect(Token::Kind::RBrack);
      return make_list(std::move(values));
    }
    if (at(Token::Kind::LBrace)) {
      advance();
      ExprPtr body = expr();
      expect(Token::Kind::RBrace);
      return make_setof(std::move(body));
    }
    if (at(Token::Kind::LParen)) {
      advance();
      ExprPtr body = expr();
      expect(Token::Kind::RParen);
      return body;
    }
    fail();
  }

  Value value() {
    if (at(Token::Kind::Int)) return Value(int_of(advance()));
    if (at(Token::Kind::Sym)) return sym(advance().text);
    fail();
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  std::vector<Token::Kind> expected_;
};

enum class Level { Sum, Prod, Prim };

void render_into(std::string& out, const Expr& e, Level ctx) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Sum>) {
          const bool wrap = ctx != Level::Sum;
          if (wrap) out += '(';
          render_into(out, *n.left, Level::Sum);
          out += '+';
          render_into(out, *n.right, Level::Prod);
          if (wrap) out += ')';
        } else if constexpr (std::is_same_v<T, Expr::Prod>) {
          const bool wrap = ctx == Level::Prim;
          if (wrap) out += '(';
          render_into(out, *n.left, Level::Prod);
          out += '*';
          render_into(out, *n.right, Level::Prim);
          if (wrap) out += ')';
        } else if constexpr (std::is_same_v<T, Expr::Range>) {
          out += std::to_string(n.lo) + ':' + std::to_string(n.hi);
        } else if constexpr (std::is_same_v<T, Expr::ListLit>) {
          out += '[';
          for (std::size_t i = 0; i < n.values.size(); ++i) {
            if (i > 0) out += ',';
            out += n.values[i].to_string();
          }
          out += ']';
        } else if constexpr (std::is_same_v<T, Expr::SetOf>) {
          out += '{';
          render_into(out, *n.body, Level::Sum);
          out += '}';
        } else if constexpr (std::is_same_v<T, Expr::ConstLit>) {
          out += n.value.to_string();
        } else if constexpr (std::is_same_v<T, Expr::Ref>) {
          out += n.name.text();
        } else {
          out += "<embed>";
        }
      },
      e.node);
}

}  // namespace

SyntaxError::SyntaxError(std::size_t pos, std::string found, std::vector<Token::Kind> expected)
    : LanguageError("syntax error at offset " + std::to_string(pos) + ": found " + found + ", expected " +
                        describe_expected(expected),
                    pos),
      expected_(std::move(expected)) {}

ExprPtr make_sum(ExprPtr l, ExprPtr r) { return std::make_shared<const Expr>(Expr{Expr::Sum{std::move(l), std::move(r)}}); }
ExprPtr make_prod(ExprPtr l, ExprPtr r) { return std::make_shared<const Expr>(Expr{Expr::Prod{std::move(l), std::move(r)}}); }
ExprPtr make_range(std::int64_t lo, std::int64_t hi) { return std::make_shared<const Expr>(Expr{Expr::Range{lo, hi}}); }
ExprPtr make_list(std::vector<Value> values) { return std::make_shared<const Expr>(Expr{Expr::ListLit{std::move(values)}}); }
ExprPtr make_setof(ExprPtr body) { return std::make_shared<const Expr>(Expr{Expr::SetOf{std::move(body)}}); }
ExprPtr make_const(Value v) { return std::make_shared<const Expr>(Expr{Expr::ConstLit{std::move(v)}}); }
ExprPtr make_ref(std::string_view name) { return std::make_shared<const Expr>(Expr{Expr::Ref{Symbol::intern(name)}}); }
ExprPtr make_embed(Generator::Factory factory) {
  return std::make_shared<const Expr>(
      Expr{Expr::Embed{std::make_shared<const Generator::Factory>(std::move(factory))}});
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Expr::Sum> || std::is_same_v<T, Expr::Prod>) {
          return *x.left == *y.left && *x.right == *y.right;
        } else if constexpr (std::is_same_v<T, Expr::Range>) {
          return x.lo == y.lo && x.hi == y.hi;
        } else if constexpr (std::is_same_v<T, Expr::ListLit>) {
          return x.values == y.values;
        } else if constexpr (std::is_same_v<T, Expr::SetOf>) {
          return *x.body == *y.body;
        } else if constexpr (std::is_same_v<T, Expr::ConstLit>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, Expr::Ref>) {
          return x.name == y.name;
        } else {
          return x.factory == y.factory;
        }
      },
      a.node);
}

std::string render(const Expr& e) {
  std::string out;
  render_into(out, e, Level::Sum);
  return out;
}

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).parse_all(); }

ExprPtr parse(std::string_view text) { return parse(tokenize(text)); }

}  // namespace lazystreams
