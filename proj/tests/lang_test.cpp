#include <gtest/gtest.h>

#include <random>

#include "lazystreams/combinators.hpp"
#include "lazystreams/engine.hpp"
#include "lazystreams/lang.hpp"
#include "lazystreams/sources.hpp"
#include "test_support.hpp"

namespace lazystreams {
namespace {

using testing::ints;
using testing::syms;
using testing::texts;
using K = Token::Kind;

std::vector<K> kinds(const std::vector<Token>& ts) {
  std::vector<K> out;
  for (const auto& t : ts) out.push_back(t.kind);
  return out;
}

TEST(TokenizeTest, ListTimesRange) {
  const std::string text = "[a,b]*(1:4)";
  auto ts = tokenize(text);
  EXPECT_EQ(kinds(ts), (std::vector<K>{K::LBrack, K::Sym, K::Comma, K::Sym, K::RBrack, K::Star, K::LParen, K::Int,
                                       K::Colon, K::Int, K::RParen, K::End}));
  EXPECT_EQ(ts[1].text, "a");
  EXPECT_EQ(ts[3].text, "b");
  EXPECT_EQ(ts[7].text, "1");
  EXPECT_EQ(ts[9].pos, 9u);
  EXPECT_EQ(ts.back().pos, text.size());
}

TEST(TokenizeTest, EmptyAndWhitespace) {
  EXPECT_EQ(kinds(tokenize("")), std::vector<K>{K::End});
  EXPECT_EQ(kinds(tokenize(" \t\r\n")), std::vector<K>{K::End});
}

TEST(TokenizeTest, NegativeIntegersAndSymbols) {
  auto ts = tokenize("-12 x_1Y 3:-4");
  EXPECT_EQ(kinds(ts), (std::vector<K>{K::Int, K::Sym, K::Int, K::Colon, K::Int, K::End}));
  EXPECT_EQ(ts[0].text, "-12");
  EXPECT_EQ(ts[1].text, "x_1Y");
  EXPECT_EQ(ts[4].text, "-4");
}

TEST(TokenizeTest, LexicalErrors) {
  try {
    tokenize("@");
    FAIL();
  } catch (const LexError& e) {
    EXPECT_EQ(e.position(), 0u);
  }
  try {
    tokenize("a + Bee");
    FAIL();
  } catch (const LexError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(tokenize("1 - 2"), LexError);
  EXPECT_THROW(tokenize("99999999999999999999"), LexError);
}

TEST(ParseTest, Examples) {
  EXPECT_EQ(*parse("[a,b]*(1:4)"), *make_prod(make_list(syms({"a", "b"})), make_range(1, 4)));
  EXPECT_EQ(*parse("{[a,b,a]}+(1:3)*c"),
            *make_sum(make_setof(make_list(syms({"a", "b", "a"}))), make_prod(make_range(1, 3), make_ref("c"))));
  EXPECT_EQ(*parse("a+b*c"), *make_sum(make_ref("a"), make_prod(make_ref("b"), make_ref("c"))));
}

TEST(ParseTest, AssociativityAndLiterals) {
  EXPECT_EQ(*parse("a+b+c"), *make_sum(make_sum(make_ref("a"), make_ref("b")), make_ref("c")));
  EXPECT_EQ(*parse("a*b*c"), *make_prod(make_prod(make_ref("a"), make_ref("b")), make_ref("c")));
  EXPECT_EQ(*parse("a*(b+c)"), *make_prod(make_ref("a"), make_sum(make_ref("b"), make_ref("c"))));
  EXPECT_EQ(*parse("7"), *make_const(Value(7)));
  EXPECT_EQ(*parse("[]"), *make_list({}));
  EXPECT_EQ(*parse("[1,x,-2]"), *make_list({Value(1), sym("x"), Value(-2)}));
  EXPECT_EQ(*parse("1:4*x"), *make_prod(make_range(1, 4), make_ref("x")));
  EXPECT_FALSE(*parse("a+b") == *parse("b+a"));
}

TEST(ParseTest, SyntaxErrorsCarryPositionAndExpectations) {
  auto expect_error = [](std::string_view text, std::size_t pos) {
    try {
      parse(text);
      ADD_FAILURE() << text;
    } catch (const SyntaxError& e) {
      EXPECT_EQ(e.position(), pos) << text;
      EXPECT_FALSE(e.expected().empty()) << text;
    }
  };
  expect_error("(", 1);
  expect_error("", 0);
  expect_error("a+", 2);
  expect_error("[a,", 3);
  expect_error("a b", 2);
  expect_error("1:x", 2);
  expect_error("{a", 2);
  expect_error("[(a)]", 1);
  try {
    parse("(a");
  } catch (const SyntaxError& e) {
    const auto& exp = e.expected();
    EXPECT_NE(std::find(exp.begin(), exp.end(), K::RParen), exp.end());
  }
}

TEST(EvalTest, Examples) {
  const Env env = default_env();
  EXPECT_EQ(texts(eval_text("[a,b]*(1:4)", env, 6)),
            (std::vector<std::string>{"a-1", "b-1", "b-2", "a-2", "b-3", "a-3"}));
  EXPECT_EQ(eval_text("{[a,b,a]}", env, 10), syms({"a", "b"}));
  EXPECT_EQ(eval_text("c", Env{}, 2), syms({"c", "c"}));
  EXPECT_EQ(eval_text("1:4", env, 10), ints({1, 2, 3}));
  EXPECT_EQ(texts(eval_text("{[a,b,a]}+(1:3)*c", env, 3)), (std::vector<std::string>{"a", "1-c", "b"}));
  EXPECT_EQ(eval_text("5", env, 3), ints({5, 5, 5}));
  EXPECT_EQ(eval_text("[]", env, 3), std::vector<Value>{});
}

TEST(EvalTest, DefaultEnvironment) {
  const Env env = default_env();
  Generator p = prod(naturals(), naturals());
  EXPECT_EQ(eval_text("nat*nat", env, 12), take_values(12, p));
  EXPECT_EQ(eval_text("nat+nat", env, 4), ints({0, 0, 1, 1}));
  EXPECT_EQ(eval_text("pos", env, 2), ints({1, 2}));
  EXPECT_EQ(eval_text("neg", env, 2), ints({-1, -2}));
  EXPECT_EQ(eval_text("zzz", env, 2), syms({"zzz", "zzz"}));
  Generator r = random_stream(42);
  EXPECT_EQ(eval_text("rand", env, 3), take_values(3, r));
  Generator r7 = random_stream(7);
  EXPECT_EQ(eval_text("rand", default_env(7), 3), take_values(3, r7));
}

TEST(EvalTest, FreshGeneratorsPerEvaluation) {
  const Env env = default_env();
  ExprPtr e = parse("nat");
  Generator a = eval_expr(*e, env);
  EXPECT_EQ(take_values(3, a), ints({0, 1, 2}));
  Generator b = eval_expr(*e, env);
  EXPECT_EQ(b.ask(), Value(0));
}

TEST(EvalTest, EmbedSplicesGenerators) {
  ExprPtr e = make_prod(make_embed([] { return answer_source(and_nats()); }), make_list(syms({"x"})));
  Generator g = eval_expr(*e, Env{});
  EXPECT_EQ(texts(take_values(3, g)), (std::vector<std::string>{"0-x", "1-x", "2-x"}));
  EXPECT_EQ(render(*e), "<embed>*[x]");
  ExprPtr again = make_embed([] { return naturals(); });
  EXPECT_TRUE(*again == *again);
  EXPECT_FALSE(*again == *make_embed([] { return naturals(); }));
}

// Random expression trees. finite() only uses ranges and lists as leaves.
class ExprGen {
 public:
  explicit ExprGen(std::uint32_t seed) : rng_(seed) {}

  ExprPtr any(int depth) { return build(depth, true); }
  ExprPtr finite(int depth) { return build(depth, false); }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Value atom() {
    static const char* names[] = {"a", "b", "c", "x1", "k_2"};
    return pick(2) == 0 ? Value(static_cast<std::int64_t>(pick(9) - 4)) : sym(names[pick(5)]);
  }

  ExprPtr leaf(bool allow_infinite) {
    switch (pick(allow_infinite ? 4 : 2)) {
      case 0: {
        const std::int64_t lo = pick(7) - 3;
        return make_range(lo, lo + pick(5));
      }
      case 1: {
        std::vector<Value> vs;
        for (int k = pick(4); k > 0; --k) vs.push_back(atom());
        return make_list(std::move(vs));
      }
      case 2:
        return make_const(Value(static_cast<std::int64_t>(pick(21) - 10)));
      default: {
        static const char* refs[] = {"nat", "pos", "zzz", "c"};
        return make_ref(refs[pick(4)]);
      }
    }
  }

  ExprPtr build(int depth, bool allow_infinite) {
    if (depth == 0 || pick(3) == 0) return leaf(allow_infinite);
    switch (pick(3)) {
      case 0:
        return make_sum(build(depth - 1, allow_infinite), build(depth - 1, allow_infinite));
      case 1:
        return make_prod(build(depth - 1, allow_infinite), build(depth - 1, allow_infinite));
      default:
        return make_setof(build(depth - 1, allow_infinite));
    }
  }

  std::mt19937 rng_;
};

TEST(LangProperty, RenderThenParseIsIdentity) {
  ExprGen gen(41);
  for (int i = 0; i < 2000; ++i) {
    ExprPtr e = gen.any(4);
    const std::string text = render(*e);
    ExprPtr back = parse(text);
    ASSERT_TRUE(*back == *e) << text << " reparsed as " << render(*back);
  }
  EXPECT_EQ(render(*parse("a+(b+c)")), "a+(b+c)");
  EXPECT_EQ(render(*parse("(a+b)+c")), "a+b+c");
  EXPECT_EQ(render(*parse("(a*b)*(c+d)")), "a*b*(c+d)");
}

TEST(LangProperty, SumIsHomomorphic) {
  ExprGen gen(43);
  const Env env = default_env();
  for (int i = 0; i < 300; ++i) {
    ExprPtr a = gen.finite(3);
    ExprPtr b = gen.finite(3);
    Generator whole = eval_expr(*make_sum(a, b), env);
    Generator parts = sum(eval_expr(*a, env), eval_expr(*b, env));
    ASSERT_EQ(take_values(50, whole), take_values(50, parts)) << render(*a) << " | " << render(*b);
  }
}

TEST(LangProperty, FuzzedInputsParseOrFailWithPosition) {
  std::mt19937 rng(47);
  const std::string alphabet = "ab01-:+*[]{}(), @_Zx\t\n9";
  for (int i = 0; i < 5000; ++i) {
    std::string text;
    const int len = std::uniform_int_distribution<int>(0, 256)(rng);
    for (int k = 0; k < len; ++k) text.push_back(alphabet[rng() % alphabet.size()]);
    try {
      parse(text);
    } catch (const LanguageError& e) {
      ASSERT_LE(e.position(), text.size()) << text;
    }
  }
  // Deep nesting stays within bounds.
  std::string deep(200, '(');
  deep += "a";
  deep += std::string(200, ')');
  EXPECT_EQ(*parse(deep), *make_ref("a"));
}

}  // namespace
}  // namespace lazystreams
