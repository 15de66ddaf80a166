#pragma once

#include <cctype>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "contact/expr/ast.hpp"

namespace contact::expr {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UndeclaredVariable, UnknownFunction, NonIntegerExponent };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        kind_(kind),
        position_(position) {}

  Kind kind() const { return kind_; }
  /// Zero-based character offset into the parsed text.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, const Scope& scope) : text_(text), scope_(scope) {}

  NodePtr parse() {
    skip_space();
    if (pos_ >= text_.size()) fail(ParseError::Kind::Syntax, "empty expression");
    NodePtr n = parse_sum();
    skip_space();
    if (pos_ < text_.size()) fail(ParseError::Kind::Syntax, std::string("unexpected '") + text_[pos_] + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(ParseError::Kind kind, const std::string& what) const { throw ParseError(kind, pos_, what); }
  [[noreturn]] void fail_at(ParseError::Kind kind, std::size_t at, const std::string& what) const {
    throw ParseError(kind, at, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(ParseError::Kind::Syntax, std::string("expected '") + c + "' before end of input");
      fail(ParseError::Kind::Syntax, std::string("expected '") + c + "'");
    }
  }

  NodePtr parse_sum() {
    NodePtr lhs = parse_product();
    for (;;) {
      if (accept('+')) lhs = binary_node(Op::Add, lhs, parse_product());
      else if (accept('-')) lhs = binary_node(Op::Subtract, lhs, parse_product());
      else return lhs;
    }
  }

  NodePtr parse_product() {
    NodePtr lhs = parse_unary();
    for (;;) {
      if (accept('*')) lhs = binary_node(Op::Multiply, lhs, parse_unary());
      else if (accept('/')) lhs = binary_node(Op::Divide, lhs, parse_unary());
      else return lhs;
    }
  }

  NodePtr parse_unary() {
    if (accept('-')) return unary_node(Op::Negate, parse_unary());
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    while (accept('^')) base = power_node(base, parse_integer_exponent());
    return base;
  }

  int parse_integer_exponent() {
    skip_space();
    const std::size_t start = pos_;
    bool parenthesized = accept('(');
    bool negative = accept('-');
    skip_space();
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits || (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')))
      fail_at(ParseError::Kind::NonIntegerExponent, start, "exponent must be an integer literal");
    const long value = std::strtol(std::string(text_.substr(digits, pos_ - digits)).c_str(), nullptr, 10);
    if (value > 64) fail_at(ParseError::Kind::NonIntegerExponent, start, "exponent too large");
    if (parenthesized) expect(')');
    return negative ? -static_cast<int>(value) : static_cast<int>(value);
  }

  NodePtr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail(ParseError::Kind::Syntax, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_sum();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    fail(ParseError::Kind::Syntax, std::string("unexpected '") + c + "'");
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    const std::string literal(text_.substr(start, pos_ - start));
    char* end = nullptr;
    const double v = std::strtod(literal.c_str(), &end);
    if (end != literal.c_str() + literal.size()) fail_at(ParseError::Kind::Syntax, start, "malformed number '" + literal + "'");
    return number_node(v);
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      Function f;
      if (!function_from_name(name, f)) fail_at(ParseError::Kind::UnknownFunction, start, "unknown function '" + name + "'");
      ++pos_;
      NodePtr arg = parse_sum();
      expect(')');
      return call_node(f, arg);
    }
    for (std::size_t i = 0; i < scope_.size(); ++i)
      if (scope_[i] == name) return variable_node(static_cast<int>(i));
    if (name == "pi") return number_node(std::numbers::pi);
    fail_at(ParseError::Kind::UndeclaredVariable, start, "undeclared variable '" + name + "'");
  }

  std::string_view text_;
  const Scope& scope_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the expression DSL. Precedence, tightest first: ^ (integer literal
/// exponents only), unary minus, * and /, + and -. Binary operators are
/// left-associative. `pi` is a constant unless the scope declares it.
inline Expression parse(std::string_view text, const ScopePtr& scope) {
  return {detail::Parser(text, *scope).parse(), scope};
}

inline Expression parse(std::string_view text, Scope scope) { return parse(text, make_scope(std::move(scope))); }

}  // namespace contact::expr
