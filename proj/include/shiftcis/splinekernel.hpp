#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "shiftcis/poly.hpp"
#include "shiftcis/rational.hpp"

namespace shiftcis {

// Q_m, supported on [0, m], with Q_1 the indicator of [0, 1).
double bspline_eval(int m, double x);
Rational bspline_exact(int m, const Rational& x);

Rational bernoulli(int n);
PolyR euler_poly(int n);
// P_0 = x, P_{j+1} = -[(j+1) x P_j + (1 - x^2) P_j'].
PolyR cot_poly(int j);

// G_m(., beta) from the recurrence with G_1 = -1.
PolyR gm_poly(int m, const Rational& beta);
PolyF gm_poly_float(int m, double beta);
// Coefficient of t^j as a polynomial in beta, j = 0..m-1.
std::vector<PolyR> gm_bivariate(int m);

// F_m(u, beta) = G_m(u^2, beta).
std::complex<double> fm_eval(int m, std::complex<double> u, double beta);

// Phi_{m-1}(beta, t) = (-1)^m / (m-1)! G_m(1/t, beta). Throws ZeroBaseError at t = 0.
std::complex<double> exp_spline_eval(int m, double beta, std::complex<double> t);
// Direct finite sum over k of t^k Q_m(beta - k).
std::complex<double> exp_spline_sum(int m, double beta, std::complex<double> t);

PolyR euler_frobenius(int m);
PolyR modified_euler_frobenius(int m);

struct ZeroSplit {
  int inside = 0;
  int on_circle = 0;
  int outside = 0;
  std::vector<std::complex<double>> roots;
  bool exact = false;  // counts confirmed by a Sturm chain
};

// Companion-matrix eigenvalues (balanced) polished by Newton steps.
std::vector<std::complex<double>> poly_roots(const PolyF& p);

ZeroSplit zero_split(const PolyF& p);
// Float split; when a root lands within 1e-6 of |t| = 1 and the polynomial has
// only real simple roots, the counts come from an exact Sturm chain instead.
ZeroSplit zero_split(const PolyR& p);

// Number of distinct real roots in (lo, hi]; nullopt bounds mean -inf / +inf.
int sturm_count(const PolyR& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi);
// True when all roots are real, simple and strictly negative.
bool real_negative_simple(const PolyR& p);

struct StabilityBounds {
  double A = 0.0;
  double B = 0.0;
  double xi_at_A = 0.0;
  double xi_at_B = 0.0;
  // Direct lattice sum over |n| <= terms, with a rigorous bound on the omitted tail.
  double A_truncated = 0.0;
  double B_truncated = 0.0;
  double tail_bound = 0.0;
};

// Extremes over xi in [0,1) of sum_n |Q^_m(xi + n)|^2 = sum_n sinc^{2m}(xi + n).
StabilityBounds stability_bounds(int m, int grid, int terms = 2000);

}  // namespace shiftcis
