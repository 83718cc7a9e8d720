#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "shiftcis/rational.hpp"

namespace shiftcis {

// Exact univariate polynomial, ascending coefficients, trailing zeros trimmed.
class PolyR {
 public:
  PolyR() = default;
  explicit PolyR(std::vector<Rational> coeffs);
  PolyR(std::initializer_list<Rational> coeffs);

  static PolyR constant(const Rational& c);
  static PolyR monomial(const Rational& c, int power);

  const std::vector<Rational>& coeffs() const { return c_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  std::complex<double> eval(std::complex<double> z) const;

  PolyR derivative() const;
  // t^n p(1/t) for n >= degree.
  PolyR reversed(int n) const;
  // p(-t).
  PolyR negated_argument() const;

  PolyR& operator+=(const PolyR& o);
  PolyR& operator-=(const PolyR& o);
  PolyR& operator*=(const Rational& s);
  friend PolyR operator+(PolyR a, const PolyR& b) { return a += b; }
  friend PolyR operator-(PolyR a, const PolyR& b) { return a -= b; }
  friend PolyR operator*(PolyR a, const Rational& s) { return a *= s; }
  friend PolyR operator*(const Rational& s, PolyR a) { return a *= s; }
  friend PolyR operator*(const PolyR& a, const PolyR& b);
  friend bool operator==(const PolyR& a, const PolyR& b) { return a.c_ == b.c_; }

  // Euclidean division; throws DegenerateError when dividing by zero.
  static void divmod(const PolyR& a, const PolyR& b, PolyR& q, PolyR& r);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Floating mirror used for root finding and fast evaluation.
class PolyF {
 public:
  PolyF() = default;
  explicit PolyF(std::vector<double> coeffs);
  explicit PolyF(const PolyR& p);

  const std::vector<double>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> z) const;
  PolyF derivative() const;

 private:
  std::vector<double> c_;
};

}  // namespace shiftcis
