#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "popper/errors.hpp"

namespace popper {

// Exact rational arithmetic everywhere; the whole subject is conditioning on
// zero-measure events, so probability-zero tests must be exact. cpp_rational
// keeps values in lowest terms automatically.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Renders "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& r);

// Accepts "p/q" or "p" with optional leading minus; q must be positive.
Rational parse_rational(std::string_view text);

inline bool is_probability(const Rational& r) {
  return r >= 0 && r <= 1;
}

}  // namespace popper
