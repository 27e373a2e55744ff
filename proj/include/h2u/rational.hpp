#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace h2u {

namespace mp = boost::multiprecision;

// Expression templates are switched off so that numerator()/denominator()
// can be applied directly to arithmetic results.
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::backends::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_even_integer(const Rational& r) {
  return is_integer(r) && numerator(r) % 2 == 0;
}

inline bool is_odd_integer(const Rational& r) {
  return is_integer(r) && numerator(r) % 2 != 0;
}

// "n" for integers, "n/d" otherwise; the backend keeps d > 0 and gcd(n,d) = 1.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace h2u
