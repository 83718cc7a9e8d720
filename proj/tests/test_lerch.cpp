#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "shiftcis/errors.hpp"
#include "shiftcis/lerch.hpp"

using namespace shiftcis;
using cplx = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(LerchL, Zeta2) {
  auto v = lerch_L(0.0, 1.0, 2, 100000);
  EXPECT_LE(std::abs(v.value - kPi * kPi / 6), v.tail_bound);
  EXPECT_GT(v.tail_bound, 0.0);
}

TEST(LerchL, AlternatingSeries) {
  auto v = lerch_L(0.5, 1.0, 2, 100000);
  EXPECT_LE(std::abs(v.value - kPi * kPi / 12), v.tail_bound);
}

TEST(LerchL, BruteForceSum) {
  cplx s = 0.0;
  for (long n = 999999; n >= 0; --n) s += std::exp(cplx(0, 2 * kPi * 0.3 * n)) / std::pow(n + 0.5, 3);
  auto v = lerch_L(0.3, 0.5, 3, 1000000);
  EXPECT_LT(std::abs(v.value - s), 1e-9);
}

TEST(LerchL, Errors) {
  EXPECT_THROW(lerch_L(0.2, -3.0, 2, 100), PoleError);
  EXPECT_THROW(lerch_L(0.2, 0.0, 2, 100), PoleError);
  EXPECT_THROW(lerch_L(0.2, 0.5, 1, 100), DomainError);
  // Pole lies beyond the truncation range: the evaluated sum is still defined.
  EXPECT_NO_THROW(lerch_L(0.2, -300.0, 2, 100));
}

TEST(LerchL, ReflectionClosedForm) {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> ul(0.0, 1.0), ub(0.05, 0.95);
  for (int s = 2; s <= 4; ++s)
    for (int i = 0; i < 20; ++i) {
      double lam = ul(rng), b = ub(rng);
      const long T = 400000;
      auto p = lerch_L(lam, b, s, T);
      auto n = lerch_L(-lam, -b, s, T);
      cplx lhs = p.value + (s % 2 ? -1.0 : 1.0) * n.value;
      EXPECT_LT(std::abs(lhs - lerch_reflection(lam, b, s)), 1e-7 + p.tail_bound + n.tail_bound)
          << "s=" << s << " lam=" << lam << " b=" << b;
    }
}

TEST(HFunction, CosecantSquaredSum) {
  LerchQuery q{0.0, 0.5, 2, 100000};
  auto s = h_series(q);
  EXPECT_LE(std::abs(s.value - kPi * kPi), s.tail_bound + 1e-12);
  EXPECT_LT(std::abs(h_closed(q) - kPi * kPi), 1e-10);
  EXPECT_LT(std::abs(h_from_gm(q) - kPi * kPi), 1e-10);
}

TEST(HFunction, ThreeRoutesAtFixedPoint) {
  LerchQuery q{0.3, 0.45, 4, 100000};
  auto s = h_series(q).value;
  auto c = h_closed(q);
  auto g = h_from_gm(q);
  EXPECT_LT(std::abs(s - c), 1e-8);
  EXPECT_LT(std::abs(s - g), 1e-8);
  EXPECT_LT(std::abs(c - g), 1e-8);
}

TEST(HFunction, HalfLambdaOddM) {
  for (int m : {3, 5}) {
    LerchQuery q{0.5, 0.25, m, 100000};
    auto s = h_series(q);
    EXPECT_LT(std::abs(s.value - h_closed(q)), s.tail_bound + 1e-8);
    EXPECT_LT(std::abs(s.value - h_from_gm(q)), s.tail_bound + 1e-8);
  }
}

TEST(HFunction, ThreeRoutesRandom) {
  std::mt19937 rng(33);
  std::uniform_real_distribution<double> ul(0.0, 1.0), ux(-2.0, 2.0);
  std::uniform_int_distribution<int> um(2, 6);
  for (int i = 0; i < 100; ++i) {
    LerchQuery q{ul(rng), ux(rng), um(rng), 100000};
    if (std::abs(q.x - std::round(q.x)) < 0.02) continue;
    auto s = h_series(q);
    cplx c = h_closed(q), g = h_from_gm(q);
    double tol = s.tail_bound + 1e-8 * std::max(1.0, std::abs(c));
    EXPECT_LT(std::abs(s.value - c), tol) << q.lambda << " " << q.x << " " << q.m;
    EXPECT_LT(std::abs(s.value - g), tol) << q.lambda << " " << q.x << " " << q.m;
  }
}

TEST(HFunction, PeriodicityInX) {
  // H(lambda, x + 1, m) = e^{2 pi i lambda} H(lambda, x, m) from reindexing n -> n + 1.
  LerchQuery a{0.37, 0.21, 3, 100000}, b = a;
  b.x += 1.0;
  EXPECT_LT(std::abs(h_closed(b) - std::exp(cplx(0, 2 * kPi * a.lambda)) * h_closed(a)), 1e-9);
}

TEST(HFunction, Errors) {
  LerchQuery q{0.3, 2.0, 3, 1000};
  EXPECT_THROW(h_series(q), IntegerPoleError);
  EXPECT_THROW(h_closed(q), IntegerPoleError);
  EXPECT_THROW(h_from_gm(q), IntegerPoleError);
  q.x = 0.5;
  q.m = 1;
  EXPECT_THROW(h_series(q), DomainError);
}

TEST(ZeroFree, GridMinimumBoundedAway) {
  for (int m = 2; m <= 6; ++m) {
    auto r = zero_free_scan(m, 64, 64, 2);
    EXPECT_GT(r.min_abs, 1e-4) << m;
    EXPECT_NE(r.lambda_at, 0.5);
  }
}

TEST(ZeroFree, HeatmapAndThreadingConsistent) {
  std::vector<HeatCell> h1, h2;
  auto a = zero_free_scan(3, 32, 32, 1, &h1);
  auto b = zero_free_scan(3, 32, 32, 3, &h2);
  EXPECT_EQ(a.min_abs, b.min_abs);
  ASSERT_EQ(h1.size(), h2.size());
  EXPECT_EQ(h1.size(), 32u * 32u);
  for (std::size_t i = 0; i < h1.size(); ++i) EXPECT_EQ(h1[i].abs_h, h2[i].abs_h);
  std::ostringstream os;
  write_heatmap_csv(os, h1);
  EXPECT_EQ(os.str().rfind("lambda,x,abs_h\n", 0), 0u);
  EXPECT_THROW(zero_free_scan(3, 16, 64), DomainError);
}

TEST(ZeroFree, HalfLambdaLineDips) {
  // G_2(-1, 1/2) = 0: along lambda = 1/2, |H(., x, 2)| vanishes at x = 1/2.
  auto line = h_line_scan(2, 0.5, 101);
  double mn = 1e300;
  double x_at = 0;
  for (const auto& c : line)
    if (c.abs_h < mn) {
      mn = c.abs_h;
      x_at = c.x;
    }
  EXPECT_LT(mn, 1e-6);
  EXPECT_NEAR(x_at, 0.5, 1e-9);
  auto off = zero_free_scan(2, 64, 64);
  EXPECT_GT(off.min_abs, 1e3 * mn);
}
