#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace bsc {

using BigInt = boost::multiprecision::cpp_int;
// Arbitrary-precision rationals; always normalized to lowest terms with a
// positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt factorial(int n);

// C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

}  // namespace bsc
