#include "shiftcis/operatorlab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>
#include <ostream>
#include <random>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "shiftcis/errors.hpp"
#include "shiftcis/splinekernel.hpp"
#include "shiftcis/symbolcurve.hpp"

namespace shiftcis {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx unit(double y) { return std::polar(1.0, kTwoPi * (y - std::floor(y))); }

void require_order(int m) {
  if (m < 2) throw DomainError("spline order m must be >= 2");
}

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Lattice samples b_n = Q_m(a + n), n = 0..m-1.
std::vector<double> lattice_samples(int m) {
  double a = m % 2 == 0 ? 0.0 : 0.5;
  std::vector<double> b(m);
  for (int n = 0; n < m; ++n) b[n] = bspline_eval(m, a + n);
  return b;
}

}  // namespace

cplx psi_dagger(int m, double x) {
  require_order(m);
  auto b = lattice_samples(m);
  cplx s = 0.0;
  for (int n = 0; n < m; ++n)
    if (b[n] != 0.0) s += b[n] * unit(n * x);
  return s;
}

cplx psi_dagger_closed(int m, double x) {
  require_order(m);
  cplx z = unit(x);
  double fact = std::tgamma(static_cast<double>(m));
  if (m % 2 == 0) return z * PolyF(euler_frobenius(m - 1))(z) / fact;
  return PolyF(modified_euler_frobenius(m - 1))(z) / (std::ldexp(1.0, m - 1) * fact);
}

ThetaTable theta_coeffs(int m, int K, int grid) {
  require_order(m);
  if (K < 1) throw DomainError("theta table needs K >= 1");
  if (!is_pow2(grid) || grid < std::max(4 * K, 1024))
    throw DomainError("theta grid must be a power of two >= max(4K, 1024)");

  std::vector<cplx> inv(grid);
  double min_abs = INFINITY;
  for (int j = 0; j < grid; ++j) {
    cplx p = psi_dagger(m, static_cast<double>(j) / grid);
    min_abs = std::min(min_abs, std::abs(p));
    inv[j] = 1.0 / p;
  }
  if (min_abs < 1e-8) throw NearSingularSymbolError("min |Psi_dagger| on the grid is " + std::to_string(min_abs));

  std::vector<cplx> roots(grid);
  for (int j = 0; j < grid; ++j) roots[j] = std::polar(1.0, -kTwoPi * j / grid);

  ThetaTable t;
  t.m = m;
  t.K = K;
  t.grid = grid;
  t.coeffs.resize(2 * K + 1);
  for (int v = -K; v <= K; ++v) {
    cplx s = 0.0;
    long long step = ((static_cast<long long>(v) % grid) + grid) % grid;
    long long idx = 0;
    for (int j = 0; j < grid; ++j) {
      s += inv[j] * roots[idx];
      idx += step;
      if (idx >= grid) idx -= grid;
    }
    t.coeffs[v + K] = s / static_cast<double>(grid);
  }

  // Geometric fit log|c_v| ~ log C + |v| log r over coefficients above the roundoff floor.
  double cmax = 0.0;
  for (const auto& c : t.coeffs) cmax = std::max(cmax, std::abs(c));
  double floor_level = 1e-13 * cmax;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int npts = 0;
  for (int v = -K; v <= K; ++v) {
    double c = std::abs(t.coefficient(v));
    if (c <= floor_level) continue;
    double xv = std::abs(v), yv = std::log(c);
    sx += xv; sy += yv; sxx += xv * xv; sxy += xv * yv;
    ++npts;
  }
  double denom = npts * sxx - sx * sx;
  if (npts >= 3 && denom > 0.0) {
    double slope = (npts * sxy - sx * sy) / denom;
    t.decay_rate = std::min(std::exp(slope), 1.0);
  } else {
    t.decay_rate = 0.0;  // finitely supported up to roundoff
  }
  double C = cmax;
  if (t.decay_rate > 0.0) {
    for (int v = -K; v <= K; ++v) {
      double c = std::abs(t.coefficient(v));
      if (c > floor_level) C = std::max(C, c / std::pow(t.decay_rate, std::abs(v)));
    }
  }
  t.decay_bound = C;
  if (t.decay_rate > 0.0 && t.decay_rate < 1.0)
    t.aliasing_bound = 2.0 * C * std::pow(t.decay_rate, grid - K) / (1.0 - std::pow(t.decay_rate, grid));
  else
    t.aliasing_bound = t.decay_rate == 0.0 ? 0.0 : INFINITY;
  return t;
}

ThetaValue theta_eval(const ThetaTable& table, double x) {
  if (std::abs(x) > table.K - table.m)
    throw WindowError("|x| = " + std::to_string(std::abs(x)) + " exceeds K - m = " +
                      std::to_string(table.K - table.m));
  // Q_m(x - v) is nonzero only for x - m < v < x.
  int vlo = static_cast<int>(std::floor(x)) - table.m;
  int vhi = static_cast<int>(std::ceil(x));
  double s = 0.0;
  for (int v = vlo; v <= vhi; ++v) {
    double q = bspline_eval(table.m, x - v);
    if (q != 0.0) s += table.coefficient(v).real() * q;
  }
  double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, table.decay_bound);
  return {s, table.aliasing_bound + roundoff};
}

namespace {

struct SymbolParts {
  PolyF numer;
  PolyF denom;
  long long z_power;  // symbol = scale * numer(z) / (z^z_power denom(z))
  double scale;
};

SymbolParts symbol_parts(const SplineConfig& cfg) {
  require_order(cfg.m);
  const int m = cfg.m;
  const double fl = std::floor(cfg.alpha);
  const double a0 = cfg.alpha - fl;
  if (m % 2 == 0) {
    return {gm_poly_float(m, a0), PolyF(euler_frobenius(m - 1)), static_cast<long long>(fl) + 1, 1.0};
  }
  double shifted = a0 + 0.5;
  double a1 = shifted - std::floor(shifted);
  long long k = static_cast<long long>(fl) + static_cast<long long>(std::floor(shifted));
  double exponent = cfg.alpha - a1 + 0.5;
  if (std::abs(exponent - static_cast<double>(k)) > 1e-9)
    throw NonIntegerExponentError("alpha - alpha_1 + 1/2 = " + std::to_string(exponent) + " is not the integer " +
                                  std::to_string(k));
  return {gm_poly_float(m, a1), PolyF(modified_euler_frobenius(m - 1)), k, -std::ldexp(1.0, m - 1)};
}

double frac_part(double x) { return x - std::floor(x); }

bool half_integer_alpha(double alpha) { return std::abs(frac_part(alpha) - 0.5) < 1e-12; }

}  // namespace

cplx spline_symbol(const SplineConfig& cfg, double x) {
  SymbolParts sp = symbol_parts(cfg);
  cplx z = unit(x);
  cplx zp = unit(static_cast<double>(sp.z_power) * x);
  return sp.scale * sp.numer(z) / (zp * sp.denom(z));
}

cplx spline_symbol_direct(const ThetaTable& table, double alpha, double x) {
  double a = table.m % 2 == 0 ? 0.0 : 0.5;
  double lim = table.K - table.m;
  cplx s = 0.0;
  int nlo = static_cast<int>(std::ceil(-lim - alpha - a));
  int nhi = static_cast<int>(std::floor(lim - alpha - a));
  for (int n = nlo; n <= nhi; ++n) s += theta_eval(table, alpha + a + n).value * unit(n * x);
  return s;
}

long long spline_index_numeric(const SplineConfig& cfg) {
  for (int S = 1024; S <= (1 << 16); S *= 2) {
    std::vector<cplx> pts(S);
    for (int j = 0; j < S; ++j) pts[j] = spline_symbol(cfg, static_cast<double>(j) / S);
    double step = 0.0;
    long long w = winding_of_samples(pts, &step);
    if (step < std::numbers::pi / 2) return w;
  }
  throw UndersampledError("spline symbol increments stay above pi/2");
}

long long spline_index(const SplineConfig& cfg) {
  if (half_integer_alpha(cfg.alpha))
    throw HalfIntegerAlphaError("<alpha> = 1/2: the symbol vanishes at x = 1/2");
  SymbolParts sp = symbol_parts(cfg);
  int Z = zero_split(sp.numer).inside;
  int P = sp.denom.degree() >= 1 ? zero_split(sp.denom).inside : 0;
  long long idx = static_cast<long long>(Z) - P - sp.z_power;
  long long numeric = spline_index_numeric(cfg);
  if (numeric != idx)
    throw IndexMismatchError("zero/pole count " + std::to_string(idx) + " vs numeric winding " +
                             std::to_string(numeric));
  return idx;
}

SplineVerdict cis_classify_spline(const SplineConfig& cfg) {
  require_order(cfg.m);
  SplineVerdict v;
  double mn = INFINITY;
  for (int j = 0; j < 1024; ++j) mn = std::min(mn, std::abs(spline_symbol(cfg, j / 1024.0)));
  v.min_modulus = mn;
  if (half_integer_alpha(cfg.alpha) || !(mn > 0.0)) {
    v.reason = "SymbolVanishes";
    return v;
  }
  v.index = spline_index(cfg);
  v.cis = v.index == 0;
  if (!v.cis) v.reason = "NonzeroIndex";
  return v;
}

SectionReport toeplitz_section(std::span<const cplx> samples, int N) {
  if (N < 4) throw DomainError("section size must be >= 4");
  const int G = static_cast<int>(samples.size());
  if (G < 4 * N) throw DomainError("symbol grid must have at least 4N samples");

  std::vector<cplx> coef(2 * N - 1);
  for (int k = -(N - 1); k <= N - 1; ++k) {
    cplx s = 0.0;
    for (int j = 0; j < G; ++j) s += samples[j] * std::polar(1.0, -kTwoPi * static_cast<double>((static_cast<long long>(k) * j) % G) / G);
    coef[k + N - 1] = s / static_cast<double>(G);
  }
  Eigen::MatrixXcd T(N, N);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) T(r, c) = coef[r - c + N - 1];
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(T);
  const auto& sv = svd.singularValues();
  SectionReport rep;
  rep.N = N;
  rep.singular_max = sv(0);
  rep.singular_min = sv(N - 1);
  rep.cond = rep.singular_min > 0.0 ? rep.singular_max / rep.singular_min : INFINITY;
  return rep;
}

std::vector<cplx> spline_symbol_samples(const SplineConfig& cfg, int grid) {
  std::vector<cplx> s(grid);
  for (int j = 0; j < grid; ++j) s[j] = spline_symbol(cfg, static_cast<double>(j) / grid);
  return s;
}

std::vector<SectionReport> spline_section_sweep(const SplineConfig& cfg, const std::vector<int>& Ns, int grid,
                                                int jobs) {
  int need = 0;
  for (int N : Ns) need = std::max(need, 4 * N);
  const int G = std::max(grid, next_pow2(need));
  const auto samples = spline_symbol_samples(cfg, G);
  std::vector<SectionReport> out(Ns.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < Ns.size(); ++i) out[i] = toeplitz_section(samples, Ns[i]);
    return out;
  }
  std::vector<std::future<SectionReport>> futs;
  for (int N : Ns) futs.push_back(std::async(std::launch::async, [&samples, N] { return toeplitz_section(samples, N); }));
  for (std::size_t i = 0; i < Ns.size(); ++i) out[i] = futs[i].get();
  return out;
}

cplx transversal_generator_eval(const TransversalSet& set, double x) {
  if (x == 0.0) return 1.0;
  cplx s = 0.0;
  for (const auto& p : set.input_pieces()) {
    double lo = to_double(p.lo), hi = to_double(p.hi);
    s += (std::polar(1.0, kTwoPi * x * hi) - std::polar(1.0, kTwoPi * x * lo));
  }
  return s / cplx(0.0, kTwoPi * x);
}

ReconstructionReport reconstruct_experiment(const Generator& gen, double alpha, int N, unsigned long long seed) {
  if (N < 1) throw DomainError("reconstruction window N must be >= 1");
  const int n = 2 * N + 1;

  // Theta on the shifted lattice: Theta(alpha + a + j) for j = -2N..2N.
  std::vector<cplx> theta(4 * N + 1);
  if (const auto* sg = std::get_if<SplineGenerator>(&gen)) {
    require_order(sg->m);
    const int K = 2 * N + sg->m + static_cast<int>(std::ceil(std::abs(alpha))) + 4;
    const ThetaTable table = theta_coeffs(sg->m, K, next_pow2(std::max(4 * K, 1024)));
    const double a = sg->m % 2 == 0 ? 0.0 : 0.5;
    for (int j = -2 * N; j <= 2 * N; ++j) theta[j + 2 * N] = theta_eval(table, alpha + a + j).value;
  } else {
    const auto& tg = std::get<TransversalGenerator>(gen);
    for (int j = -2 * N; j <= 2 * N; ++j) theta[j + 2 * N] = transversal_generator_eval(tg.set, alpha + j);
  }

  // Rows n >= 0 sample at a + n (Theta(a + n - k) = delta), rows n < 0 at alpha + a + n.
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(n, n);
  for (int r = -N; r <= N; ++r) {
    if (r >= 0) {
      U(r + N, r + N) = 1.0;
      continue;
    }
    for (int k = -N; k <= N; ++k) U(r + N, k + N) = theta[r - k + 2 * N];
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::VectorXcd d(n);
  for (int i = 0; i < n; ++i) d(i) = dist(rng);
  Eigen::VectorXcd F = U * d;

  Eigen::VectorXcd dh = U.colPivHouseholderQr().solve(F);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(U);
  const auto& sv = svd.singularValues();

  ReconstructionReport rep;
  rep.N = N;
  rep.alpha = alpha;
  rep.seed = seed;
  rep.cond = sv(n - 1) > 0.0 ? sv(0) / sv(n - 1) : INFINITY;
  rep.singular = !(sv(n - 1) > sv(0) * std::numeric_limits<double>::epsilon());
  rep.residual = (U * dh - F).norm();
  for (int i = 0; i < n; ++i) {
    double e = std::abs(dh(i) - d(i));
    rep.max_error = std::max(rep.max_error, e);
    if (std::abs(i - N) <= N / 2) rep.inner_error = std::max(rep.inner_error, e);
  }
  return rep;
}

void write_sections_csv(std::ostream& os, double alpha, int m, const std::vector<SectionReport>& rows) {
  os << "alpha,m,N,singular_min,singular_max,cond\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%d,%d,%.17g,%.17g,%.17g\n", alpha, m, r.N, r.singular_min,
                  r.singular_max, r.cond);
    os << buf;
  }
}

}  // namespace shiftcis
