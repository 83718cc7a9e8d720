#include "shiftcis/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "shiftcis/errors.hpp"

namespace shiftcis {

namespace mp = boost::multiprecision;

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("empty integer in rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ParseError("bad rational '" + std::string(whole) + "'");
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') throw ParseError("bad rational '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return neg ? BigInt(-v) : v;
}

BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view s) {
  std::string_view mant = s;
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    mant = s.substr(0, epos);
    BigInt e = parse_integer(s.substr(epos + 1), s);
    if (abs(e) > 4000) throw ParseError("exponent out of range in '" + std::string(s) + "'");
    exp10 = e.convert_to<long>();
  }
  std::string digits;
  bool neg = false;
  std::size_t i = 0;
  if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
    neg = mant[0] == '-';
    i = 1;
  }
  long frac_digits = 0;
  bool seen_dot = false;
  for (; i < mant.size(); ++i) {
    char c = mant[i];
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_dot) ++frac_digits;
    } else {
      throw ParseError("bad number '" + std::string(s) + "'");
    }
  }
  if (digits.empty()) throw ParseError("bad number '" + std::string(s) + "'");
  BigInt num = parse_integer(digits, s);
  if (neg) num = -num;
  long shift = exp10 - frac_digits;
  if (shift >= 0) return Rational(num * pow10(shift));
  return Rational(num, pow10(-shift));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    BigInt p = parse_integer(text.substr(0, slash), text);
    BigInt q = parse_integer(text.substr(slash + 1), text);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    return Rational(p, q);
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
  return Rational(parse_integer(text, text));
}

std::string format_rational(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

BigInt floor_q(const Rational& q) {
  const BigInt& n = mp::numerator(q);
  const BigInt& d = mp::denominator(q);
  BigInt f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

BigInt ceil_q(const Rational& q) { return -floor_q(-q); }

Rational frac_q(const Rational& q) { return q - Rational(floor_q(q)); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

long long to_ll(const BigInt& n) {
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
    throw DomainError("integer " + n.str() + " does not fit in 64 bits");
  return n.convert_to<long long>();
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value has no rational value");
  int e = 0;
  double m = std::frexp(x, &e);
  BigInt mant = static_cast<long long>(std::ldexp(m, 53));
  return e - 53 >= 0 ? Rational(mant << (e - 53)) : Rational(mant, BigInt(1) << (53 - e));
}

Rational snap_rational(double x, long long max_den) {
  if (!std::isfinite(x)) throw DomainError("non-finite value cannot be snapped to a rational");
  // Best approximation by convergents and the admissible semiconvergent.
  const Rational exact = exact_rational(x);

  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational r = exact;
  for (int iter = 0; iter < 200; ++iter) {
    BigInt a = floor_q(r);
    BigInt q2 = q0 + a * q1;
    if (q2 > max_den) {
      BigInt k = (BigInt(max_den) - q0) / q1;
      Rational semi(p0 + k * p1, q0 + k * q1);
      Rational conv(p1, q1);
      return abs(semi - exact) < abs(conv - exact) ? semi : conv;
    }
    BigInt p2 = p0 + a * p1;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    Rational rem = r - Rational(a);
    if (rem == 0) break;
    r = 1 / rem;
  }
  return Rational(p1, q1);
}

BigInt lcm_big(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / mp::gcd(a, b) * b);
}

}  // namespace shiftcis
