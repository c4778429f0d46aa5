#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "vcopy/errors.hpp"
#include "vcopy/rational.hpp"

namespace vcopy {

/// Recursive-descent parser for ring expressions such as "T^2 + R*L - 1/2*(G1*F2 - G2*F1)".
/// Products keep their written order, so it is usable for noncommutative rings.
/// R needs +, -, * and unary minus; `atom(name)` and `constant(q)` build leaves.
template <class R, class AtomFn, class ConstFn>
class ExprParser {
 public:
  ExprParser(std::string_view src, AtomFn atom, ConstFn constant)
      : s_(src), atom_(atom), constant_(constant) {}

  R parse() {
    R r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedInput("expression '" + std::string(s_) + "': " + what + " at offset " +
                         std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  R expr() {
    R acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  R term() {
    R acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  R unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  R power() {
    R base = atom();
    if (!accept('^')) return base;
    std::string digits = integer();
    if (digits.empty()) fail("expected exponent");
    unsigned long e = std::stoul(digits);
    if (e > 64) fail("exponent too large");
    R r = constant_(Rational(1));
    for (unsigned long i = 0; i < e; ++i) r = r * base;
    return r;
  }

  std::string integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  R atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      R r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = integer();
      std::size_t save = pos_;
      if (accept('/')) {
        std::string den = integer();
        if (den.empty()) {
          pos_ = save;
          fail("expected denominator");
        }
        num += "/" + den;
      }
      return constant_(parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return atom_(s_.substr(start, pos_ - start));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  AtomFn atom_;
  ConstFn constant_;
};

template <class R, class AtomFn, class ConstFn>
R parse_expression(std::string_view src, AtomFn atom, ConstFn constant) {
  return ExprParser<R, AtomFn, ConstFn>(src, atom, constant).parse();
}

}  // namespace vcopy
