#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace boost {

// Under C++20 rewritten comparisons, Boost's mixed rational/integer equality
// template calls itself. These exact overloads take precedence; rationals
// are kept normalized, so comparing the parts is exact.
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(std::int64_t a, const rational<std::int64_t>& b) { return b == a; }
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a == static_cast<std::int64_t>(b);
}
inline bool operator==(int a, const rational<std::int64_t>& b) {
  return b == static_cast<std::int64_t>(a);
}
inline bool operator!=(const rational<std::int64_t>& a, std::int64_t b) { return !(a == b); }
inline bool operator!=(std::int64_t a, const rational<std::int64_t>& b) { return !(b == a); }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator!=(int a, const rational<std::int64_t>& b) { return !(b == a); }

}  // namespace boost

namespace lamplighter {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace lamplighter
