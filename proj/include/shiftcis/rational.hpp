#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace shiftcis {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", "p", and finite decimals such as "-0.125" or "3e-2".
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

BigInt floor_q(const Rational& q);
BigInt ceil_q(const Rational& q);
// Fractional part in [0,1).
Rational frac_q(const Rational& q);

double to_double(const Rational& q);
long long to_ll(const BigInt& n);  // throws DomainError on overflow

// The exact binary value of a finite double.
Rational exact_rational(double x);

// Best rational approximation with denominator <= max_den (continued fractions).
Rational snap_rational(double x, long long max_den = 1000000);

BigInt lcm_big(const BigInt& a, const BigInt& b);

}  // namespace shiftcis
