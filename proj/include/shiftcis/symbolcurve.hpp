#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include "shiftcis/exactset.hpp"

namespace shiftcis {

using cplx = std::complex<double>;

// t -> A exp(2 pi i B t), t in [t0, t1].
struct ArcPiece {
  cplx amplitude;
  double frequency = 0.0;
  double t0 = 0.0;
  double t1 = 0.0;
};

// t -> A((1-t) exp(2 pi i M alpha) + t exp(2 pi i N alpha)), t in [0, 1].
struct SegmentPiece {
  cplx amplitude;
  long long M = 0;
  long long N = 0;
  double alpha = 0.0;
};

using CurvePiece = std::variant<ArcPiece, SegmentPiece>;

// Point on a piece at normalized parameter tau in [0,1].
cplx piece_point(const CurvePiece& p, double tau);
bool piece_is_degenerate(const CurvePiece& p);

class SymbolCurve {
 public:
  SymbolCurve() = default;
  explicit SymbolCurve(std::vector<CurvePiece> pieces) : pieces_(std::move(pieces)) {}

  const std::vector<CurvePiece>& pieces() const { return pieces_; }
  // Largest gap between the end of one piece and the start of the next,
  // the last piece wrapping around to the first.
  double closure_defect() const;

 private:
  std::vector<CurvePiece> pieces_;
};

// Pieces C_k, S_k, C~_k, S~_k for k = L down to 1.
SymbolCurve build_symbol_curve(const CongruenceData& cd, double alpha);

// Arc: (t1 - t0) B. Segment: x - floor(x + 1/2) with x = (N - M) alpha.
double piece_index(const CurvePiece& p);
long long curve_index(const SymbolCurve& c);

long long numeric_winding(const SymbolCurve& c, int samples_per_piece);
// Starts at 256 samples per piece and doubles until every increment is below pi/2.
long long numeric_winding_adaptive(const SymbolCurve& c);

// Winding number about 0 of the closed polygon through the given points.
// Throws OriginProximityError / UndersampledError.
long long winding_of_samples(std::span<const cplx> closed_samples, double* max_step = nullptr);

double curve_min_modulus(const SymbolCurve& c);

void write_curve_csv(std::ostream& os, const SymbolCurve& c, int samples_per_piece);

}  // namespace shiftcis
