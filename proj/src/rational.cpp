#include "vcopy/rational.hpp"

#include <cctype>

#include "vcopy/errors.hpp"

namespace vcopy {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw MalformedInput("invalid rational literal '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw MalformedInput("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_latex(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  std::string sign = sgn(value) < 0 ? "-" : "";
  mpz_class num = abs(value.get_num());
  return sign + "\\frac{" + num.get_str(10) + "}{" + value.get_den().get_str(10) + "}";
}

}  // namespace vcopy
