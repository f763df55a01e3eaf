#include "lazystreams/value.hpp"

#include <charconv>
#include <functional>
#include <mutex>
#include <ostream>
#include <unordered_set>

namespace lazystreams {

namespace {

struct SymbolTable {
  std::mutex mutex;
  std::unordered_set<std::string> texts;
};

SymbolTable& symbol_table() {
  static SymbolTable table;
  return table;
}

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_alnum_or_underscore(char c) {
  return is_lower(c) || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

void render_num(std::string& out, double d) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
  std::string_view text(buf, static_cast<std::size_t>(end - buf));
  out += text;
  // Keep Num(3.0) visually distinct from Int(3).
  if (text.find_first_of(".eEni") == std::string_view::npos) out += ".0";
}

void render(std::string& out, const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Int:
      out += std::to_string(v.as_int());
      break;
    case Value::Kind::Num:
      render_num(out, v.as_num());
      break;
    case Value::Kind::Sym:
      out += v.as_sym().text();
      break;
    case Value::Kind::Pair: {
      render(out, v.left());
      out += '-';
      const bool wrap = v.right().is_pair();
      if (wrap) out += '(';
      render(out, v.right());
      if (wrap) out += ')';
      break;
    }
  }
}

}  // namespace

Symbol Symbol::intern(std::string_view text) {
  auto& table = symbol_table();
  std::lock_guard lock(table.mutex);
  auto it = table.texts.emplace(text).first;
  return Symbol(&*it);
}

bool is_identifier(std::string_view text) noexcept {
  if (text.empty() || !is_lower(text.front())) return false;
  for (char c : text.substr(1)) {
    if (!is_alnum_or_underscore(c)) return false;
  }
  return true;
}

Value Value::pair(Value left, Value right) {
  Value v(std::int64_t{0});
  v.rep_ = std::make_shared<const PairCell>(PairCell{std::move(left), std::move(right)});
  return v;
}

const Value& Value::left() const { return std::get<std::shared_ptr<const PairCell>>(rep_)->left; }
const Value& Value::right() const { return std::get<std::shared_ptr<const PairCell>>(rep_)->right; }

std::string Value::to_string() const {
  std::string out;
  render(out, *this);
  return out;
}

bool operator==(const Value& a, const Value& b) noexcept {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Value::Kind::Int:
      return a.as_int() == b.as_int();
    case Value::Kind::Num:
      return a.as_num() == b.as_num();
    case Value::Kind::Sym:
      return a.as_sym() == b.as_sym();
    case Value::Kind::Pair: {
      const auto& pa = std::get<std::shared_ptr<const PairCell>>(a.rep_);
      const auto& pb = std::get<std::shared_ptr<const PairCell>>(b.rep_);
      return pa == pb || (pa->left == pb->left && pa->right == pb->right);
    }
  }
  return false;
}

Value sym(std::string_view text) { return Value(Symbol::intern(text)); }

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.to_string(); }

std::size_t ValueHash::operator()(const Value& v) const noexcept {
  constexpr std::size_t kMix = 0x9e3779b97f4a7c15ULL;
  switch (v.kind()) {
    case Value::Kind::Int:
      return std::hash<std::int64_t>{}(v.as_int());
    case Value::Kind::Num: {
      const double d = v.as_num();
      return std::hash<double>{}(d == 0.0 ? 0.0 : d) ^ kMix;
    }
    case Value::Kind::Sym:
      return std::hash<const void*>{}(v.as_sym().text().data());
    case Value::Kind::Pair: {
      const std::size_t l = (*this)(v.left());
      const std::size_t r = (*this)(v.right());
      return l * 31 + (r ^ (r >> 7)) + kMix;
    }
  }
  return 0;
}

}  // namespace lazystreams
