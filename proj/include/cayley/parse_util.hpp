#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cayley/rational.hpp"

namespace cayley {

/// Syntax error carrying the byte offset of the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, size_t pos)
      : std::invalid_argument(message + " at offset " + std::to_string(pos)), pos_(pos) {}
  size_t pos() const { return pos_; }

 private:
  size_t pos_;
};

namespace detail {

/// Recursive-descent parser for the shared expression grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | base ('^' uint)?
///   base   := rational | identifier | '(' expr ')'
/// Rational literals are "a" or "a/b" without spaces around '/'.
/// Precedence: ^ over *, * over binary +/-.
template <class Algebra>
class ExprParser {
 public:
  using Value = typename Algebra::Value;

  ExprParser(std::string_view text, Algebra& alg) : text_(text), alg_(alg) {}

  Value run() {
    Value v = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Value parse_expr() {
    Value v = parse_term();
    for (;;) {
      if (eat('+'))
        v = alg_.add(std::move(v), parse_term());
      else if (eat('-'))
        v = alg_.sub(std::move(v), parse_term());
      else
        return v;
    }
  }

  Value parse_term() {
    Value v = parse_factor();
    while (eat('*')) v = alg_.mul(std::move(v), parse_factor());
    return v;
  }

  Value parse_factor() {
    if (eat('-')) return alg_.neg(parse_factor());
    Value v = parse_base();
    if (eat('^')) {
      size_t at = pos_;
      skip_ws();
      at = pos_;
      unsigned long e = parse_uint();
      v = alg_.pow(std::move(v), e, at);
    }
    return v;
  }

  unsigned long parse_uint() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer exponent", start);
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  Value parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        size_t slash = pos_;
        ++pos_;
        size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == dstart) throw ParseError("expected denominator digits", slash + 1);
      }
      return alg_.from_rational(Rational::parse(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return alg_.symbol(std::string(text_.substr(start, pos_ - start)), start);
    }
    if (c == '(') {
      ++pos_;
      Value v = parse_expr();
      skip_ws();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  Algebra& alg_;
  size_t pos_ = 0;
};

}  // namespace detail
}  // namespace cayley
