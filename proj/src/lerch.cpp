#include "shiftcis/lerch.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>
#include <ostream>

#include "shiftcis/errors.hpp"
#include "shiftcis/splinekernel.hpp"

namespace shiftcis {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

// e^{2 pi i y}, argument reduced mod 1.
cplx phase(double y) { return std::polar(1.0, 2.0 * kPi * (y - std::floor(y))); }

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool is_integer(double x) { return x == std::floor(x); }

// D^j of cot(pi x), j >= 1, through the cot polynomials.
double cot_derivative(int j, double x) {
  if (j == 0) return std::cos(kPi * x) / std::sin(kPi * x);
  PolyF P(cot_poly(j));
  return std::pow(kPi, j) * P(std::cos(kPi * x)) / std::pow(std::sin(kPi * x), j + 1);
}

}  // namespace

LerchValue lerch_L(double lambda, cplx b, int s, long terms) {
  if (s < 2) throw DomainError("lerch_L needs s >= 2");
  if (terms < 1) throw DomainError("lerch_L needs terms >= 1");
  if (b.imag() == 0.0 && is_integer(b.real()) && b.real() <= 0.0 && -b.real() < static_cast<double>(terms))
    throw PoleError("n + b vanishes at n = " + std::to_string(static_cast<long>(-b.real())));
  cplx sum = 0.0;
  for (long n = terms - 1; n >= 0; --n) sum += phase(lambda * static_cast<double>(n)) / std::pow(static_cast<double>(n) + b, s);
  LerchValue v;
  v.value = sum;
  double base = static_cast<double>(terms) - 1.0 + b.real();
  v.tail_bound = base > 0.0 ? std::pow(base, 1.0 - s) / (s - 1) : INFINITY;
  return v;
}

cplx lerch_reflection(double lambda, double b, int s) {
  if (s < 1) throw DomainError("reflection needs s >= 1");
  if (is_integer(b)) throw PoleError("b must not be an integer");
  // D^{s-1}[ pi (cot pi b + i) e^{-2 pi i lambda b} ] by Leibniz.
  cplx deriv = 0.0;
  const int n = s - 1;
  for (int j = 0; j <= n; ++j) {
    cplx f = j == 0 ? cplx(cot_derivative(0, b), 1.0) : cplx(cot_derivative(j, b), 0.0);
    cplx g = std::pow(-2.0 * kPi * kI * lambda, n - j);
    deriv += binomial(n, j) * f * g;
  }
  deriv *= kPi * phase(-lambda * b);
  double sign = (s - 1) % 2 == 0 ? 1.0 : -1.0;
  return 1.0 / std::pow(b, s) + sign / std::tgamma(static_cast<double>(s)) * deriv;
}

LerchValue h_series(const LerchQuery& q) {
  if (is_integer(q.x)) throw IntegerPoleError("x is an integer");
  if (q.m < 2) throw DomainError("H needs m >= 2");
  const double T = static_cast<double>(q.terms);
  if (!(T > std::abs(q.x) + 1.0)) throw DomainError("terms must exceed |x| + 1");
  cplx sum = 0.0;
  for (long n = q.terms; n >= 1; --n) {
    double dn = static_cast<double>(n);
    sum += phase(q.lambda * dn) / std::pow(dn - q.x, q.m);
    sum += phase(-q.lambda * dn) / std::pow(-dn - q.x, q.m);
  }
  sum += 1.0 / std::pow(-q.x, q.m);
  double base = T + 1.0 - std::abs(q.x);
  LerchValue v;
  v.value = sum;
  v.tail_bound = 2.0 * (std::pow(base, -q.m) + std::pow(base, 1.0 - q.m) / (q.m - 1));
  return v;
}

cplx h_closed(const LerchQuery& q) {
  if (is_integer(q.x)) throw IntegerPoleError("x is an integer");
  if (q.m < 2) throw DomainError("H needs m >= 2");
  const int n = q.m - 1;
  cplx deriv = 0.0;
  for (int j = 0; j <= n; ++j) {
    cplx f = j == 0 ? cplx(-cot_derivative(0, q.x), 1.0) : cplx(-cot_derivative(j, q.x), 0.0);
    cplx g = std::pow(2.0 * kPi * kI * q.lambda, n - j);
    deriv += binomial(n, j) * f * g;
  }
  return kPi / std::tgamma(static_cast<double>(q.m)) * deriv * phase(q.lambda * q.x);
}

cplx h_from_gm(const LerchQuery& q) {
  if (is_integer(q.x)) throw IntegerPoleError("x is an integer");
  if (q.m < 2) throw DomainError("H needs m >= 2");
  cplx z = phase(q.x);
  cplx pref = std::pow(2.0 * kPi * kI, q.m) / std::tgamma(static_cast<double>(q.m));
  return pref * phase(q.lambda * q.x) / std::pow(z - 1.0, q.m) * gm_poly_float(q.m, q.lambda)(z);
}

ZeroFreeReport zero_free_scan(int m, int lambda_grid, int x_grid, int jobs, std::vector<HeatCell>* heat) {
  if (lambda_grid < 32 || x_grid < 32) throw DomainError("zero-free scan grids must be >= 32");
  if (m < 2) throw DomainError("H needs m >= 2");

  std::vector<double> lambdas;
  for (int i = 0; i < lambda_grid; ++i) {
    double l = (i + 0.5) / lambda_grid;
    if (2 * i + 1 == lambda_grid) continue;  // lambda = 1/2
    lambdas.push_back(l);
  }
  auto scan_rows = [&](std::size_t first, std::size_t last) {
    std::vector<HeatCell> out;
    out.reserve((last - first) * x_grid);
    for (std::size_t r = first; r < last; ++r) {
      LerchQuery q;
      q.m = m;
      q.lambda = lambdas[r];
      for (int j = 0; j < x_grid; ++j) {
        q.x = (j + 0.5) / x_grid;
        out.push_back({q.lambda, q.x, std::abs(h_from_gm(q))});
      }
    }
    return out;
  };

  std::vector<HeatCell> cells;
  const std::size_t nrows = lambdas.size();
  const std::size_t nj = static_cast<std::size_t>(std::max(1, jobs));
  if (nj == 1) {
    cells = scan_rows(0, nrows);
  } else {
    std::vector<std::future<std::vector<HeatCell>>> parts;
    for (std::size_t t = 0; t < nj; ++t) {
      std::size_t a = nrows * t / nj, b = nrows * (t + 1) / nj;
      parts.push_back(std::async(std::launch::async, scan_rows, a, b));
    }
    for (auto& f : parts) {
      auto part = f.get();
      cells.insert(cells.end(), part.begin(), part.end());
    }
  }

  ZeroFreeReport rep;
  rep.m = m;
  rep.min_abs = INFINITY;
  for (const auto& c : cells) {
    if (c.abs_h < rep.min_abs) {
      rep.min_abs = c.abs_h;
      rep.lambda_at = c.lambda;
      rep.x_at = c.x;
    }
  }
  if (heat) *heat = std::move(cells);
  return rep;
}

std::vector<HeatCell> h_line_scan(int m, double lambda, int x_grid) {
  if (x_grid < 2) throw DomainError("line scan grid must be >= 2");
  std::vector<HeatCell> out;
  LerchQuery q;
  q.m = m;
  q.lambda = lambda;
  for (int j = 0; j < x_grid; ++j) {
    q.x = (j + 0.5) / x_grid;
    out.push_back({lambda, q.x, std::abs(h_from_gm(q))});
  }
  return out;
}

void write_heatmap_csv(std::ostream& os, const std::vector<HeatCell>& cells) {
  os << "lambda,x,abs_h\n";
  char buf[96];
  for (const auto& c : cells) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", c.lambda, c.x, c.abs_h);
    os << buf;
  }
}

}  // namespace shiftcis
