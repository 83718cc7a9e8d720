#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

namespace shiftcis {

struct LerchValue {
  std::complex<double> value;
  double tail_bound = 0.0;
};

// L(lambda, b, s) = sum_{n >= 0} e^{2 pi i lambda n} / (n + b)^s over n < terms.
LerchValue lerch_L(double lambda, std::complex<double> b, int s, long terms);

// Closed form of L(lambda, b, s) + (-1)^s L(-lambda, -b, s) for real b in (0,1).
std::complex<double> lerch_reflection(double lambda, double b, int s);

struct LerchQuery {
  double lambda = 0.0;
  double x = 0.5;
  int m = 2;
  long terms = 100000;
};

// H(lambda, x, m) = sum_{n in Z} e^{2 pi i lambda n} / (n - x)^m.
LerchValue h_series(const LerchQuery& q);
// Leibniz expansion of pi/(m-1)! D^{m-1}[(-cot pi x + i) e^{2 pi i lambda x}].
std::complex<double> h_closed(const LerchQuery& q);
// (2 pi i)^m/(m-1)! e^{2 pi i lambda x} (e^{2 pi i x} - 1)^{-m} G_m(e^{2 pi i x}, lambda).
std::complex<double> h_from_gm(const LerchQuery& q);

struct ZeroFreeReport {
  int m = 0;
  double min_abs = 0.0;
  double lambda_at = 0.0;
  double x_at = 0.0;
};

struct HeatCell {
  double lambda;
  double x;
  double abs_h;
};

// Half-step offset grids on (0,1)^2, skipping lambda = 1/2. jobs > 1 splits rows over threads.
ZeroFreeReport zero_free_scan(int m, int lambda_grid, int x_grid, int jobs = 1,
                              std::vector<HeatCell>* heat = nullptr);

// |H| along x for fixed lambda.
std::vector<HeatCell> h_line_scan(int m, double lambda, int x_grid);

void write_heatmap_csv(std::ostream& os, const std::vector<HeatCell>& cells);

}  // namespace shiftcis
