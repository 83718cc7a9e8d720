#include "shiftcis/splinekernel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <Eigen/Dense>

#include "shiftcis/errors.hpp"

namespace shiftcis {

namespace {

// Degree-raising recursion on the m values Q_k(x - j), j = 0..m-1.
template <class T>
T bspline_recursive(int m, const T& x) {
  if (m < 1) throw DomainError("B-spline order must be >= 1");
  std::vector<T> b(m + 1, T(0));
  for (int j = 0; j < m; ++j) {
    T y = x - T(j);
    if (y >= T(0) && y < T(1)) b[j] = T(1);
  }
  for (int k = 2; k <= m; ++k) {
    for (int j = 0; j <= m - k; ++j) {
      T y = x - T(j);
      b[j] = (y * b[j] + (T(k) - y) * b[j + 1]) / T(k - 1);
    }
  }
  return b[0];
}

Rational binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return Rational(r);
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

const PolyR kX({Rational(0), Rational(1)});

}  // namespace

double bspline_eval(int m, double x) { return bspline_recursive<double>(m, x); }

Rational bspline_exact(int m, const Rational& x) { return bspline_recursive<Rational>(m, x); }

Rational bernoulli(int n) {
  if (n < 0) throw DomainError("Bernoulli index must be >= 0");
  static std::mutex mu;
  static std::vector<Rational> memo{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) <= n) {
    int k = static_cast<int>(memo.size());
    Rational s = 0;
    for (int j = 0; j < k; ++j) s += binom(k + 1, j) * memo[j];
    memo.push_back(-s / (k + 1));
  }
  return memo[n];
}

PolyR euler_poly(int n) {
  if (n < 0) throw DomainError("Euler polynomial index must be >= 0");
  std::vector<Rational> c(n + 1);
  for (int k = 1; k <= n + 1; ++k) {
    Rational two_pow(BigInt(1) << (k + 1));
    c[n + 1 - k] = binom(n + 1, k) * (2 - two_pow) * bernoulli(k) / (n + 1);
  }
  return PolyR(std::move(c));
}

PolyR cot_poly(int j) {
  if (j < 0) throw DomainError("cot polynomial index must be >= 0");
  PolyR p = kX;
  const PolyR one_minus_x2({Rational(1), Rational(0), Rational(-1)});
  for (int i = 0; i < j; ++i) p = (kX * p * Rational(i + 1) + one_minus_x2 * p.derivative()) * Rational(-1);
  return p;
}

PolyR gm_poly(int m, const Rational& beta) {
  if (m < 1) throw DomainError("G_m needs m >= 1");
  PolyR g = PolyR::constant(-1);
  const PolyR t2_minus_t({Rational(0), Rational(-1), Rational(1)});
  for (int k = 2; k <= m; ++k) {
    PolyR lin({-beta, beta - (k - 1)});  // beta (t - 1) - (k - 1) t
    g = lin * g + t2_minus_t * g.derivative();
  }
  return g;
}

PolyF gm_poly_float(int m, double beta) {
  if (m < 1) throw DomainError("G_m needs m >= 1");
  std::vector<double> g{-1.0};
  for (int k = 2; k <= m; ++k) {
    std::vector<double> next(g.size() + 1, 0.0);
    for (std::size_t j = 0; j < g.size(); ++j) {
      double c = g[j];
      double jj = static_cast<double>(j);
      next[j + 1] += (beta - (k - 1)) * c + jj * c;
      next[j] += -beta * c - jj * c;
    }
    g = std::move(next);
  }
  return PolyF(std::move(g));
}

std::vector<PolyR> gm_bivariate(int m) {
  if (m < 1) throw DomainError("G_m needs m >= 1");
  static std::mutex mu;
  static std::map<int, std::vector<PolyR>> memo;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  std::vector<PolyR> g{PolyR::constant(-1)};
  const PolyR b({Rational(0), Rational(1)});
  for (int k = 2; k <= m; ++k) {
    std::vector<PolyR> next(g.size() + 1);
    for (std::size_t j = 0; j < g.size(); ++j) {
      Rational jj(static_cast<long>(j));
      // beta (t - 1) G - (k-1) t G + (t^2 - t) G'
      next[j + 1] += b * g[j] + g[j] * (jj - (k - 1));
      next[j] -= b * g[j] + g[j] * jj;
    }
    g = std::move(next);
  }
  memo.emplace(m, g);
  return g;
}

std::complex<double> fm_eval(int m, std::complex<double> u, double beta) {
  return gm_poly_float(m, beta)(u * u);
}

std::complex<double> exp_spline_eval(int m, double beta, std::complex<double> t) {
  if (m < 2) throw DomainError("exponential spline needs m >= 2");
  if (t == 0.0) throw ZeroBaseError("exponential spline evaluated at t = 0");
  double scale = (m % 2 == 0 ? 1.0 : -1.0) / std::tgamma(static_cast<double>(m));
  return scale * gm_poly_float(m, beta)(1.0 / t);
}

std::complex<double> exp_spline_sum(int m, double beta, std::complex<double> t) {
  if (t == 0.0) throw ZeroBaseError("exponential spline evaluated at t = 0");
  std::complex<double> s = 0.0;
  for (int k = -m; k <= 1; ++k) {
    double q = bspline_eval(m, beta - k);
    if (q != 0.0) s += std::pow(t, k) * q;
  }
  return s;
}

namespace {

PolyR frobenius_step(const PolyR& p, int m, bool modified) {
  const PolyR t_minus_t2({Rational(0), Rational(1), Rational(-1)});
  if (modified) return PolyR({Rational(1), Rational(2 * m + 1)}) * p + t_minus_t2 * p.derivative() * Rational(2);
  return PolyR({Rational(1), Rational(m)}) * p + t_minus_t2 * p.derivative();
}

PolyR frobenius(int m, bool modified) {
  if (m < 0) throw DomainError("Euler-Frobenius index must be >= 0");
  static std::mutex mu;
  static std::vector<PolyR> plain{PolyR::constant(1)};
  static std::vector<PolyR> mod{PolyR::constant(1)};
  std::lock_guard<std::mutex> lock(mu);
  auto& memo = modified ? mod : plain;
  while (static_cast<int>(memo.size()) <= m) {
    int k = static_cast<int>(memo.size()) - 1;
    memo.push_back(frobenius_step(memo.back(), k, modified));
  }
  return memo[m];
}

}  // namespace

PolyR euler_frobenius(int m) { return frobenius(m, false); }

PolyR modified_euler_frobenius(int m) { return frobenius(m, true); }

std::vector<std::complex<double>> poly_roots(const PolyF& p) {
  if (p.is_zero()) throw DegenerateError("zero polynomial has no finite root set");
  const int n = p.degree();
  if (n == 0) return {};
  const auto& c = p.coeffs();
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -c[i] / c[n];

  // Parlett-Reinsch balancing with powers of two.
  for (bool done = false; !done;) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double col = 0.0, row = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        col += std::abs(C(j, i));
        row += std::abs(C(i, j));
      }
      if (col == 0.0 || row == 0.0) continue;
      const double total = col + row;
      double f = 1.0;
      while (col < row / 2.0) { f *= 2.0; col *= 4.0; }
      while (col > row * 2.0) { f /= 2.0; col /= 4.0; }
      if ((col + row) / f < 0.95 * total) {
        done = false;
        C.row(i) /= f;
        C.col(i) *= f;
      }
    }
  }

  Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  if (es.info() != Eigen::Success) throw DegenerateError("companion eigenvalue iteration failed");
  std::vector<std::complex<double>> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);

  PolyF dp = p.derivative();
  for (auto& z : roots) {
    for (int it = 0; it < 4; ++it) {
      std::complex<double> fz = p(z);
      std::complex<double> dz = dp(z);
      if (dz == 0.0) break;
      std::complex<double> nz = z - fz / dz;
      if (!(std::abs(p(nz)) < std::abs(fz))) break;
      z = nz;
    }
  }
  std::sort(roots.begin(), roots.end(), [](auto x, auto y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return roots;
}

ZeroSplit zero_split(const PolyF& p) {
  if (p.is_zero()) throw DegenerateError("zero polynomial");
  ZeroSplit z;
  z.roots = poly_roots(p);
  for (auto r : z.roots) {
    double a = std::abs(r);
    if (a < 1.0 - 1e-9)
      ++z.inside;
    else if (a > 1.0 + 1e-9)
      ++z.outside;
    else
      ++z.on_circle;
  }
  return z;
}

namespace {

std::vector<PolyR> sturm_chain(const PolyR& p) {
  std::vector<PolyR> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    PolyR q, r;
    PolyR::divmod(chain[chain.size() - 2], chain.back(), q, r);
    if (r.is_zero()) break;
    chain.push_back(r * Rational(-1));
  }
  return chain;
}

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of p at +inf (dir = 1) or -inf (dir = -1).
int sign_at_infinity(const PolyR& p, int dir) {
  int s = sign_of(p.leading());
  return (dir < 0 && p.degree() % 2 == 1) ? -s : s;
}

int variations(const std::vector<PolyR>& chain, const std::optional<Rational>& x, int dir) {
  int count = 0, prev = 0;
  for (const auto& q : chain) {
    if (q.is_zero()) continue;
    int s = x ? sign_of(q(*x)) : sign_at_infinity(q, dir);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_count(const PolyR& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (p.is_zero()) throw DegenerateError("Sturm count of the zero polynomial");
  if (p.degree() == 0) return 0;
  auto chain = sturm_chain(p);
  return variations(chain, lo, -1) - variations(chain, hi, 1);
}

bool real_negative_simple(const PolyR& p) {
  if (p.is_zero()) throw DegenerateError("zero polynomial");
  if (p(Rational(0)) == 0) return false;
  return sturm_count(p, std::nullopt, Rational(0)) == p.degree();
}

ZeroSplit zero_split(const PolyR& p) {
  if (p.is_zero()) throw DegenerateError("zero polynomial");
  ZeroSplit z = zero_split(PolyF(p));
  if (p.degree() < 1) return z;

  // Deflate exact roots at +-1, then count by Sturm if every root is real and simple.
  PolyR q = p;
  int on = 0;
  for (int sgn : {-1, 1}) {
    const PolyR lin({Rational(-sgn), Rational(1)});
    while (q.degree() >= 1 && q(Rational(sgn)) == 0) {
      PolyR quo, rem;
      PolyR::divmod(q, lin, quo, rem);
      q = quo;
      ++on;
    }
  }
  int total = q.degree() >= 1 ? sturm_count(q, std::nullopt, std::nullopt) : 0;
  if (total + on != p.degree()) return z;
  int inside = q.degree() >= 1 ? sturm_count(q, Rational(-1), Rational(1)) : 0;
  z.inside = inside;
  z.on_circle = on;
  z.outside = total - inside;
  z.exact = true;
  return z;
}

StabilityBounds stability_bounds(int m, int grid, int terms) {
  if (m < 1) throw DomainError("stability bounds need m >= 1");
  if (grid < 64) throw DomainError("stability grid must be >= 64");
  if (terms < 2) throw DomainError("stability truncation must be >= 2");
  const PolyF P(cot_poly(2 * m - 1));
  const double fact = std::tgamma(2.0 * m);
  const double pi = std::numbers::pi;
  StabilityBounds sb;
  sb.A = sb.A_truncated = INFINITY;
  sb.B = sb.B_truncated = -INFINITY;
  for (int j = 0; j < grid; ++j) {
    double xi = static_cast<double>(j) / grid;
    double v = -P(std::cos(pi * xi)) / fact;
    if (v < sb.A) { sb.A = v; sb.xi_at_A = xi; }
    if (v > sb.B) { sb.B = v; sb.xi_at_B = xi; }

    double sin_pow = std::pow(std::sin(pi * xi), 2 * m);
    double s = 0.0;
    for (int n = -terms; n <= terms; ++n) {
      double w = xi + n;
      s += w == 0.0 ? 1.0 : sin_pow / std::pow(pi * w, 2 * m);
    }
    sb.A_truncated = std::min(sb.A_truncated, s);
    sb.B_truncated = std::max(sb.B_truncated, s);
  }
  const double T = terms;
  sb.tail_bound = std::pow(pi, -2.0 * m) * (std::pow(T, -2.0 * m) + 2.0 * std::pow(T, 1.0 - 2.0 * m) / (2 * m - 1));
  return sb;
}

}  // namespace shiftcis
