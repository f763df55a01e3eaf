#ifndef LAZYSTREAMS_VALUE_HPP
#define LAZYSTREAMS_VALUE_HPP

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace lazystreams {

/// Interned text atom. Two symbols with the same text share storage, so
/// equality is a pointer comparison.
class Symbol {
 public:
  /// Interns `text`. No lexical check is made here: the expression language
  /// enforces the identifier rule, while I/O readers accept any non-blank run.
  static Symbol intern(std::string_view text);

  std::string_view text() const noexcept { return *text_; }

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.text_ == b.text_; }

 private:
  explicit Symbol(const std::string* text) noexcept : text_(text) {}
  const std::string* text_;
};

/// True iff `text` is a lowercase letter followed by letters, digits or '_'.
bool is_identifier(std::string_view text) noexcept;

class Value;

struct PairCell;

/// The element type carried by every stream: Int, Num, Sym or Pair.
class Value {
 public:
  enum class Kind { Int, Num, Sym, Pair };

  template <std::integral T>
    requires(!std::same_as<T, bool>)
  Value(T i) noexcept : rep_(static_cast<std::int64_t>(i)) {}  // NOLINT(google-explicit-constructor)
  Value(double d) noexcept : rep_(d) {}                        // NOLINT(google-explicit-constructor)
  Value(Symbol s) noexcept : rep_(s) {}                        // NOLINT(google-explicit-constructor)

  static Value pair(Value left, Value right);

  Kind kind() const noexcept { return static_cast<Kind>(rep_.index()); }
  bool is_int() const noexcept { return kind() == Kind::Int; }
  bool is_num() const noexcept { return kind() == Kind::Num; }
  bool is_sym() const noexcept { return kind() == Kind::Sym; }
  bool is_pair() const noexcept { return kind() == Kind::Pair; }

  // Accessors throw std::bad_variant_access on a kind mismatch.
  std::int64_t as_int() const { return std::get<std::int64_t>(rep_); }
  double as_num() const { return std::get<double>(rep_); }
  Symbol as_sym() const { return std::get<Symbol>(rep_); }
  const Value& left() const;
  const Value& right() const;

  /// "A-B" for pairs; the right side is parenthesised iff it is itself a pair.
  std::string to_string() const;

  friend bool operator==(const Value& a, const Value& b) noexcept;

 private:
  std::variant<std::int64_t, double, Symbol, std::shared_ptr<const PairCell>> rep_;
};

struct PairCell {
  Value left;
  Value right;
};

/// Shorthand for `Value(Symbol::intern(text))`.
Value sym(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Value& v);

/// Hash consistent with Value equality (0.0 and -0.0 hash alike).
struct ValueHash {
  std::size_t operator()(const Value& v) const noexcept;
};

}  // namespace lazystreams

#endif  // LAZYSTREAMS_VALUE_HPP
