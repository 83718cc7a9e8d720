#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "shiftcis/exactset.hpp"

namespace shiftcis {

using cplx = std::complex<double>;

struct SplineConfig {
  int m = 2;
  double alpha = 0.0;

  // Lattice offset: 0 for even m, 1/2 for odd m.
  double a() const { return m % 2 == 0 ? 0.0 : 0.5; }
};

// sum_n Q_m(a + n) e^{2 pi i n x}, directly from B-spline samples.
cplx psi_dagger(int m, double x);
// Same function through Pi_{m-1} (even m) or the modified Pi~_{m-1} (odd m).
cplx psi_dagger_closed(int m, double x);

struct ThetaTable {
  int m = 2;
  int K = 0;
  int grid = 0;
  std::vector<cplx> coeffs;  // c_v for v = -K..K at index v + K
  double decay_rate = 0.0;   // fitted r in |c_v| <= decay_bound r^|v|
  double decay_bound = 0.0;
  double aliasing_bound = 0.0;

  cplx coefficient(int v) const { return (v < -K || v > K) ? cplx(0.0) : coeffs[v + K]; }
};

ThetaTable theta_coeffs(int m, int K, int grid);

struct ThetaValue {
  double value = 0.0;
  double error_bound = 0.0;
};

// Fundamental interpolant sum_v c_v Q_m(x - v). Throws WindowError for |x| > K - m.
ThetaValue theta_eval(const ThetaTable& table, double x);

// phi_{alpha,m}(e^{2 pi i x}) via G_m and the Euler-Frobenius denominators.
cplx spline_symbol(const SplineConfig& cfg, double x);
// Direct sum_n Theta(alpha + a + n) e^{2 pi i n x} over the table window.
cplx spline_symbol_direct(const ThetaTable& table, double alpha, double x);

// Zeros minus poles of the symbol inside the unit disk. Throws
// HalfIntegerAlphaError when <alpha> = 1/2 and IndexMismatchError when the
// count disagrees with the numeric winding of spline_symbol.
long long spline_index(const SplineConfig& cfg);
long long spline_index_numeric(const SplineConfig& cfg);

struct SplineVerdict {
  bool cis = false;
  std::string reason;  // "", "SymbolVanishes", "NonzeroIndex"
  long long index = 0;
  double min_modulus = 0.0;
};

SplineVerdict cis_classify_spline(const SplineConfig& cfg);

struct SectionReport {
  int N = 0;
  double singular_min = 0.0;
  double singular_max = 0.0;
  double cond = 0.0;
};

// N x N section with entry (r, c) the (r - c)-th Fourier coefficient of the sampled symbol.
SectionReport toeplitz_section(std::span<const cplx> symbol_samples, int N);

std::vector<cplx> spline_symbol_samples(const SplineConfig& cfg, int grid);
std::vector<SectionReport> spline_section_sweep(const SplineConfig& cfg, const std::vector<int>& Ns,
                                                int grid, int jobs = 1);

struct SplineGenerator {
  int m = 2;
};
struct TransversalGenerator {
  TransversalSet set;
};
using Generator = std::variant<SplineGenerator, TransversalGenerator>;

struct ReconstructionReport {
  int N = 0;
  double alpha = 0.0;
  unsigned long long seed = 42;
  double cond = 0.0;
  bool singular = false;
  double max_error = 0.0;
  double inner_error = 0.0;
  double residual = 0.0;
};

// Inverse Fourier transform of the indicator of E, closed form per piece.
cplx transversal_generator_eval(const TransversalSet& set, double x);

ReconstructionReport reconstruct_experiment(const Generator& gen, double alpha, int N,
                                            unsigned long long seed = 42);

void write_sections_csv(std::ostream& os, double alpha, int m, const std::vector<SectionReport>& rows);

}  // namespace shiftcis
