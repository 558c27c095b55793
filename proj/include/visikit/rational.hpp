#ifndef VISIKIT_RATIONAL_HPP_
#define VISIKIT_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>

namespace visikit {

// Arbitrary precision rational; every bound comparison goes through it.
using Rational = mpq_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& value) { return value.get_str(); }

// Accepts "p/q" or "p" (decimal integers). Throws InvalidArgument otherwise.
Rational parse_rational(const std::string& text);

}  // namespace visikit

#endif  // VISIKIT_RATIONAL_HPP_
