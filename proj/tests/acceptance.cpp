// Acceptance run: one PASS/FAIL line per criterion, with wall time against its budget.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "shiftcis/errors.hpp"
#include "shiftcis/exactset.hpp"
#include "shiftcis/io.hpp"
#include "shiftcis/lerch.hpp"
#include "shiftcis/operatorlab.hpp"
#include "shiftcis/splinekernel.hpp"
#include "shiftcis/symbolcurve.hpp"

using namespace shiftcis;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Rational q(long long p, long long d = 1) { return Rational(p, d); }

CongruenceData load_cd(const std::string& name) {
  std::string path = std::string(SHIFTCIS_TEST_DATA) + "/" + name + ".json";
  return congruence_decompose(validate_transversal(intervals_from_json(parse_json_text(read_file(path), path))));
}

IntervalQ open_iv(Rational lo, Rational hi) { return IntervalQ{std::move(lo), std::move(hi), false, false}; }

Outcome region_golden(const std::string& name, const std::vector<IntervalQ>& want, std::vector<long long> A) {
  Outcome o;
  auto r = admissible_region(load_cd(name));
  auto got = r.admissible_intervals();
  o.check(got == want, "intervals differ: got " + std::to_string(got.size()));
  if (!A.empty()) {
    std::sort(A.begin(), A.end());
    o.check(r.A == A, "A differs");
  }
  if (o.ok) o.detail = std::to_string(got.size()) + " intervals exact";
  return o;
}

Rational fact(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

long long expected_index(double alpha) {
  double fl = std::floor(alpha), fr = alpha - fl;
  if (fr == 0.0) return -static_cast<long long>(fl);
  return fr < 0.5 ? -static_cast<long long>(fl) : -1 - static_cast<long long>(fl);
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  std::vector<Criterion> cs;

  cs.push_back({1, "sinc region golden", 1.0, [] {
                  return region_golden("sinc", {open_iv(q(-1, 2), q(1, 2))}, {});
                }});

  cs.push_back({2, "Littlewood-Paley region golden", 1.0, [] {
                  return region_golden("littlewood_paley",
                                       {open_iv(q(-3, 4), q(-1, 2)), open_iv(q(-1, 4), q(1, 4)), open_iv(q(1, 2), q(3, 4))},
                                       {-2, 0, 1, 3});
                }});

  cs.push_back({3, "Journe region golden", 1.0, [] {
                  return region_golden("journe",
                                       {open_iv(q(-10, 8), q(-9, 8)), open_iv(q(-6, 8), q(-5, 8)),
                                        open_iv(q(-4, 8), q(-3, 8)), open_iv(q(-1, 8), q(1, 8)), open_iv(q(3, 8), q(4, 8)),
                                        open_iv(q(5, 8), q(6, 8)), open_iv(q(9, 8), q(10, 8))},
                                       {-9, -5, -3, 0, 1, 4, 6, 10});
                }});

  cs.push_back({4, "non-symmetric region golden", 2.0, [] {
                  return region_golden("nonsymmetric",
                                       {open_iv(q(-7, 6), q(-9, 8)), open_iv(q(-3, 4), q(-5, 8)),
                                        open_iv(q(-1, 2), q(-3, 8)), open_iv(q(-1, 4), q(-1, 6)),
                                        open_iv(q(-1, 8), q(1, 8)), open_iv(q(1, 6), q(1, 4)), open_iv(q(3, 8), q(1, 2)),
                                        open_iv(q(5, 8), q(3, 4)), open_iv(q(9, 8), q(7, 6))},
                                       {0, 1, -1, 2, -2, 3, -4, 5, -5, 6, -9, 10, -10, 11, -11, 12, -15, 16, -16, 17,
                                        -17, 18, -27, 28});
                }});

  cs.push_back({5, "three-way winding agreement", 30.0, [] {
                  Outcome o;
                  const char* names[] = {"sinc", "littlewood_paley", "journe", "nonsymmetric"};
                  std::vector<CongruenceData> cds;
                  for (auto n : names) cds.push_back(load_cd(n));
                  std::mt19937_64 rng(2024);
                  std::uniform_int_distribution<int> pick(0, 3);
                  int done = 0;
                  while (done < 500) {
                    const auto& cd = cds[pick(rng)];
                    double B = to_double(cd.bound());
                    double a = std::uniform_real_distribution<double>(-B, B)(rng);
                    if (cd.distance_to_G(a) < 1e-6) continue;
                    long long f = index_formula(cd, a);
                    auto curve = build_symbol_curve(cd, a);
                    long long c = curve_index(curve);
                    long long w = numeric_winding_adaptive(curve);
                    o.check(f == c && c == w, "disagreement at alpha=" + fmt("%.12g", a));
                    ++done;
                  }
                  if (o.ok) o.detail = "500 pairs agree";
                  return o;
                }});

  cs.push_back({6, "G_m polynomial goldens and identities", 5.0, [] {
                  Outcome o;
                  const std::vector<Rational> betas{q(1, 7), q(1, 3), q(2, 5), q(3, 5), q(5, 6)};
                  for (const auto& b : betas) {
                    o.check(gm_poly(2, b) == PolyR({b, 1 - b}), "G_2");
                    o.check(gm_poly(3, b) == PolyR({-b * b, -(1 + 2 * b - 2 * b * b), -(1 - b) * (1 - b)}), "G_3");
                    o.check(gm_poly(4, b) == PolyR({b * b * b, 1 + 3 * b + 3 * b * b - 3 * b * b * b,
                                                    3 * b * b * b - 6 * b * b + 4, (1 - b) * (1 - b) * (1 - b)}),
                            "G_4");
                  }
                  const PolyR t({q(0), q(1)});
                  for (int m = 1; m <= 12; ++m) {
                    for (const auto& b : betas) {
                      o.check(gm_poly(m, b)(q(1)) == (m % 2 ? -1 : 1) * fact(m - 1), "G_m(1) at m=" + std::to_string(m));
                      o.check(gm_poly(m, 1 - b).reversed(m - 1) == gm_poly(m, b), "inversion at m=" + std::to_string(m));
                    }
                    if (m >= 2) {
                      o.check(gm_poly(m, q(0)) == t * euler_frobenius(m - 1) * Rational(m % 2 ? -1 : 1),
                              "G_m(t,0) at m=" + std::to_string(m));
                      Rational c = Rational(m % 2 ? -1 : 1) / Rational(BigInt(1) << (m - 1));
                      o.check(gm_poly(m, q(1, 2)) == modified_euler_frobenius(m - 1) * c,
                              "G_m(t,1/2) at m=" + std::to_string(m));
                    }
                  }
                  if (o.ok) o.detail = "exact for m <= 12";
                  return o;
                }});

  cs.push_back({7, "zero-count law", 10.0, [] {
                  Outcome o;
                  for (int m = 2; m <= 10; ++m)
                    for (auto [p, d] : {std::pair{1, 10}, {3, 10}, {9, 20}, {11, 20}, {7, 10}, {9, 10}}) {
                      Rational b(p, d);
                      bool low = b < q(1, 2);
                      auto z = zero_split(gm_poly(m, b));
                      std::string at = " m=" + std::to_string(m) + " beta=" + format_rational(b);
                      o.check(z.inside == (low ? m / 2 : (m - 1) / 2), "inside count" + at);
                      o.check(z.outside == (low ? (m - 1) / 2 : m / 2), "outside count" + at);
                      o.check(z.on_circle == 0, "on-circle root" + at);
                      for (std::size_t i = 0; i < z.roots.size(); ++i) {
                        o.check(std::abs(z.roots[i].imag()) < 1e-8 && z.roots[i].real() < 0, "non-real-negative root" + at);
                        if (i) o.check(std::abs(z.roots[i] - z.roots[i - 1]) > 1e-8, "clustered roots" + at);
                      }
                    }
                  if (o.ok) o.detail = "m=2..10, 6 betas";
                  return o;
                }});

  cs.push_back({8, "F_m at the imaginary unit", 2.0, [] {
                  Outcome o;
                  std::mt19937_64 rng(8);
                  std::uniform_real_distribution<double> u(0.0, 1.0);
                  double worst = 0.0;
                  for (int m = 1; m <= 10; ++m)
                    for (int i = 0; i < 20; ++i) {
                      double b = u(rng);
                      std::complex<double> I(0, 1);
                      auto want = std::pow(2.0, m - 1) * std::pow(I, m) * std::exp(I * (m * std::numbers::pi / 2)) *
                                  PolyF(euler_poly(m - 1))(b);
                      worst = std::max(worst, std::abs(fm_eval(m, I, b) - want));
                    }
                  o.check(worst < 1e-9, "max deviation " + fmt("%.3g", worst));
                  if (o.ok) o.detail = "max deviation " + fmt("%.3g", worst);
                  return o;
                }});

  cs.push_back({9, "Lerch three routes and zero-free scan", 60.0, [] {
                  Outcome o;
                  std::mt19937_64 rng(9);
                  std::uniform_real_distribution<double> ul(0.0, 1.0), ux(-3.0, 3.0);
                  std::uniform_int_distribution<int> um(2, 6);
                  int done = 0;
                  while (done < 100) {
                    LerchQuery lq{ul(rng), ux(rng), um(rng), 100000};
                    if (std::abs(lq.x - std::round(lq.x)) < 1e-3) continue;
                    auto s = h_series(lq);
                    // 1e-8 scaled by |H|: near the poles |H| passes 1e8 and one ulp already exceeds 1e-8.
                    double tol = s.tail_bound + 1e-8 * std::max(1.0, std::abs(s.value));
                    o.check(std::abs(s.value - h_closed(lq)) < tol, "series vs closed");
                    o.check(std::abs(s.value - h_from_gm(lq)) < tol, "series vs G_m");
                    ++done;
                  }
                  double mn = INFINITY;
                  for (int m = 2; m <= 6; ++m) mn = std::min(mn, zero_free_scan(m, 64, 64, 2).min_abs);
                  o.check(mn > 1e-4, "scan minimum " + fmt("%.3g", mn));
                  if (o.ok) o.detail = "100 queries agree; scan min " + fmt("%.3g", mn);
                  return o;
                }});

  cs.push_back({10, "spline CIS verdict and index branches", 60.0, [] {
                  Outcome o;
                  for (int m = 2; m <= 8; ++m)
                    for (int k = -64; k <= 64; ++k) {
                      if (k == 16 || k == -16) continue;
                      double a = k / 32.0;
                      std::string at = " m=" + std::to_string(m) + " alpha=" + fmt("%g", a);
                      auto v = cis_classify_spline({m, a});
                      o.check(v.cis == (std::abs(a) < 0.5), "verdict" + at);
                      if (k % 16 != 0 || k % 32 == 0)
                        if (std::abs(a - std::round(a)) != 0.5)
                          o.check(spline_index({m, a}) == expected_index(a), "index" + at);
                    }
                  if (o.ok) o.detail = "m=2..8, 127 alphas each";
                  return o;
                }});

  cs.push_back({11, "conditioning contrast", 120.0, [] {
                  Outcome o;
                  std::ostringstream info;
                  for (int m : {2, 3}) {
                    auto good = spline_section_sweep({m, 0.3}, {16, 32, 64, 128, 256}, 4096, 2);
                    double worst = 0;
                    for (const auto& r : good) worst = std::max(worst, r.cond);
                    o.check(worst < 1e3, "cond at 0.3 reached " + fmt("%.3g", worst));
                    auto half = spline_section_sweep({m, 0.5}, {256}, 4096, 1);
                    info << " m=" << m << ": cond(256,0.5)=" << fmt("%.3g", half[0].cond) << ";";
                    o.check(half[0].cond > 1e6, "m=" + std::to_string(m) + " cond(256) at 0.5 is " +
                                                    fmt("%.3g", half[0].cond) + ", not > 1e6");
                    std::vector<double> eg, eb;
                    for (int N : {32, 64, 128}) {
                      eg.push_back(reconstruct_experiment(SplineGenerator{m}, 0.3, N).max_error);
                      eb.push_back(reconstruct_experiment(SplineGenerator{m}, 0.75, N).max_error);
                    }
                    for (std::size_t i = 1; i < eg.size(); ++i)
                      o.check(eg[i] <= 1.1 * std::max(eg[i - 1], 1e-12), "error rises at admissible alpha");
                    o.check(eb.back() > eb.front() / 1.1, "error decreases at alpha=0.75");
                  }
                  if (o.ok) o.detail = info.str();
                  return o;
                }});

  cs.push_back({12, "Theta interpolation", 5.0, [] {
                  Outcome o;
                  double worst = 0.0;
                  for (int m = 2; m <= 6; ++m) {
                    auto t = theta_coeffs(m, 32, 1024);
                    double a = SplineConfig{m, 0.0}.a();
                    for (int n = -10; n <= 10; ++n)
                      worst = std::max(worst, std::abs(theta_eval(t, a + n).value - (n == 0 ? 1.0 : 0.0)));
                  }
                  o.check(worst < 1e-8, "max deviation " + fmt("%.3g", worst));
                  if (o.ok) o.detail = "max deviation " + fmt("%.3g", worst);
                  return o;
                }});

  int failed = 0;
  for (const auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && s >= c.budget_s) {
      o.ok = false;
      o.detail = "over time budget";
    }
    failed += !o.ok;
    std::printf("%s %2d %-40s %8.3f s (budget %g s)  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, s, c.budget_s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(cs.size()) - failed, cs.size());
  return failed == 0 ? 0 : 1;
}
