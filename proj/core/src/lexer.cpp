#include <charconv>

#include "lazystreams/lang.hpp"

namespace lazystreams {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || is_digit(c) || c == '_';
}

Token::Kind punctuation(char c, bool& ok) {
  ok = true;
  switch (c) {
    case '+': return Token::Kind::Plus;
    case '*': return Token::Kind::Star;
    case ':': return Token::Kind::Colon;
    case '[': return Token::Kind::LBrack;
    case ']': return Token::Kind::RBrack;
    case '{': return Token::Kind::LBrace;
    case '}': return Token::Kind::RBrace;
    case '(': return Token::Kind::LParen;
    case ')': return Token::Kind::RParen;
    case ',': return Token::Kind::Comma;
    default: ok = false; return Token::Kind::End;
  }
}

}  // namespace

std::string_view token_kind_name(Token::Kind kind) noexcept {
  switch (kind) {
    case Token::Kind::Int: return "integer";
    case Token::Kind::Sym: return "symbol";
    case Token::Kind::Plus: return "'+'";
    case Token::Kind::Star: return "'*'";
    case Token::Kind::Colon: return "':'";
    case Token::Kind::LBrack: return "'['";
    case Token::Kind::RBrack: return "']'";
    case Token::Kind::LBrace: return "'{'";
    case Token::Kind::RBrace: return "'}'";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::Comma: return "','";
    case Token::Kind::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c) || (c == '-' && i + 1 < text.size() && is_digit(text[i + 1]))) {
      ++i;
      while (i < text.size() && is_digit(text[i])) ++i;
      std::int64_t ignored;
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, ignored);
      if (ec != std::errc()) throw LexError("integer out of range at offset " + std::to_string(start), start);
      tokens.push_back({Token::Kind::Int, text.substr(start, i - start), start});
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      while (i < text.size() && is_ident_char(text[i])) ++i;
      tokens.push_back({Token::Kind::Sym, text.substr(start, i - start), start});
      continue;
    }
    bool ok;
    const Token::Kind kind = punctuation(c, ok);
    if (!ok) {
      throw LexError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(start), start);
    }
    tokens.push_back({kind, text.substr(start, 1), start});
    ++i;
  }
  tokens.push_back({Token::Kind::End, text.substr(text.size()), text.size()});
  return tokens;
}

}  // namespace lazystreams
