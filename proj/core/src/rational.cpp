#include "popper/rational.hpp"

#include <cctype>

namespace popper {

std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/" + denominator(r).str();
  }
  return s;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  if (!all_digits(num)) {
    throw ModelError("malformed rational '" + std::string(text) + "'");
  }
  Integer p{std::string(num)};
  Integer q = 1;
  if (slash != std::string_view::npos) {
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(den)) {
      throw ModelError("malformed rational '" + std::string(text) + "'");
    }
    q = Integer(std::string(den));
    if (q == 0) {
      throw ModelError("zero denominator in rational '" + std::string(text) +
                       "'");
    }
  }
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

}  // namespace popper
