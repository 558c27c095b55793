#include "visikit/rational.hpp"

#include <algorithm>

#include "visikit/error.hpp"

namespace visikit {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto is_integer = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const std::string num = text.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den)) {
    throw InvalidArgument("expected a rational \"p/q\", got \"" + text + "\"");
  }
  auto strip = [](const std::string& s) { return s[0] == '+' ? s.substr(1) : s; };
  const mpz_class denominator(strip(den));
  if (denominator == 0) {
    throw InvalidArgument("zero denominator in \"" + text + "\"");
  }
  Rational value(mpz_class(strip(num)), denominator);
  value.canonicalize();
  return value;
}

}  // namespace visikit
