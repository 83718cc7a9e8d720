#include "shiftcis/symbolcurve.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "shiftcis/errors.hpp"

namespace shiftcis {

namespace {

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx expi(double theta) { return std::polar(1.0, theta); }

// exp(2 pi i x) with the argument reduced mod 1 first.
cplx unit(double x) { return expi(kTwoPi * (x - std::floor(x))); }

// Distance from x to the nearest point of Z + 1/2.
double half_integer_gap(double x) { return std::abs(x - std::floor(x) - 0.5); }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

cplx piece_point(const CurvePiece& p, double tau) {
  return std::visit(
      overloaded{
          [tau](const ArcPiece& a) { return a.amplitude * unit(a.frequency * (a.t0 + tau * (a.t1 - a.t0))); },
          [tau](const SegmentPiece& s) {
            return s.amplitude * ((1.0 - tau) * unit(static_cast<double>(s.M) * s.alpha) +
                                  tau * unit(static_cast<double>(s.N) * s.alpha));
          }},
      p);
}

bool piece_is_degenerate(const CurvePiece& p) {
  return std::visit(overloaded{[](const ArcPiece& a) { return a.t1 == a.t0 || a.frequency == 0.0; },
                               [](const SegmentPiece& s) { return s.M == s.N; }},
                    p);
}

double SymbolCurve::closure_defect() const {
  double worst = 0.0;
  for (std::size_t j = 0; j < pieces_.size(); ++j) {
    cplx end = piece_point(pieces_[j], 1.0);
    cplx next = piece_point(pieces_[(j + 1) % pieces_.size()], 0.0);
    double scale = std::max(1.0, std::abs(end));
    worst = std::max(worst, std::abs(end - next) / scale);
  }
  return worst;
}

SymbolCurve build_symbol_curve(const CongruenceData& cd, double alpha) {
  std::vector<CurvePiece> pieces;
  pieces.reserve(4 * cd.L);
  for (int k = cd.L; k >= 1; --k) {
    long long l1 = cd.lambda_first(k);
    long long lmu = cd.lambda_last(k);
    long long lprev = cd.lambda_first(k - 1);
    double x_lo = to_double(1 - cd.a[k]);
    double s = to_double(cd.s[k - 1]);
    double x_hi = to_double(1 - cd.a[k - 1]);
    pieces.emplace_back(ArcPiece{unit(alpha * static_cast<double>(l1)), -alpha, x_lo, s});
    pieces.emplace_back(SegmentPiece{unit(-alpha * s), l1, lmu, alpha});
    pieces.emplace_back(ArcPiece{unit(alpha * static_cast<double>(lmu)), -alpha, s, x_hi});
    pieces.emplace_back(SegmentPiece{unit(-alpha * x_hi), lmu, lprev, alpha});
  }
  return SymbolCurve(std::move(pieces));
}

double piece_index(const CurvePiece& p) {
  return std::visit(overloaded{[](const ArcPiece& a) { return (a.t1 - a.t0) * a.frequency; },
                               [](const SegmentPiece& s) {
                                 if (s.M == s.N) return 0.0;
                                 double x = static_cast<double>(s.N - s.M) * s.alpha;
                                 if (half_integer_gap(x) < 1e-12)
                                   throw OriginCrossingError("segment (N-M) alpha = " + std::to_string(x) +
                                                             " is a half-integer");
                                 return x - std::floor(x + 0.5);
                               }},
                    p);
}

long long curve_index(const SymbolCurve& c) {
  double total = 0.0;
  for (const auto& p : c.pieces()) total += piece_index(p);
  double r = std::round(total);
  if (std::abs(total - r) > 1e-6)
    throw NonIntegerIndexError("piece indices sum to " + std::to_string(total));
  return static_cast<long long>(r);
}

long long winding_of_samples(std::span<const cplx> pts, double* max_step) {
  if (pts.empty()) return 0;
  double total = 0.0;
  double worst = 0.0;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const cplx& z0 = pts[j];
    const cplx& z1 = pts[(j + 1) % pts.size()];
    if (std::abs(z0) < 1e-9)
      throw OriginProximityError("sampled modulus " + fmt_g(std::abs(z0)) + " below 1e-9");
    double step = std::arg(z1 / z0);
    worst = std::max(worst, std::abs(step));
    total += step;
  }
  if (max_step) *max_step = worst;
  if (worst >= std::numbers::pi * (1.0 - 1e-12))
    throw UndersampledError("argument increment reached pi");
  return static_cast<long long>(std::llround(total / kTwoPi));
}

namespace {

std::vector<cplx> sample_curve(const SymbolCurve& c, int spp) {
  std::vector<cplx> pts;
  for (const auto& p : c.pieces()) {
    if (piece_is_degenerate(p)) {
      pts.push_back(piece_point(p, 0.0));
      continue;
    }
    for (int j = 0; j < spp; ++j) pts.push_back(piece_point(p, static_cast<double>(j) / spp));
  }
  return pts;
}

}  // namespace

long long numeric_winding(const SymbolCurve& c, int samples_per_piece) {
  if (samples_per_piece < 1) throw DomainError("samples_per_piece must be positive");
  auto pts = sample_curve(c, samples_per_piece);
  return winding_of_samples(pts);
}

long long numeric_winding_adaptive(const SymbolCurve& c) {
  for (int spp = 256; spp <= (1 << 16); spp *= 2) {
    auto pts = sample_curve(c, spp);
    double step = 0.0;
    long long w = winding_of_samples(pts, &step);
    if (step < std::numbers::pi / 2) return w;
  }
  throw UndersampledError("increments stay above pi/2 at 65536 samples per piece");
}

double curve_min_modulus(const SymbolCurve& c) {
  double best = INFINITY;
  for (const auto& p : c.pieces()) {
    double m = std::visit(overloaded{[](const ArcPiece& a) { return std::abs(a.amplitude); },
                                     [](const SegmentPiece& s) {
                                       // Chord between two points of the circle of radius |A|:
                                       // its nearest point to 0 is the midpoint, at distance
                                       // |A| |cos(pi x)| = |A| sin(pi * gap to Z + 1/2).
                                       double x = static_cast<double>(s.N - s.M) * s.alpha;
                                       return std::abs(s.amplitude) *
                                              std::sin(std::numbers::pi * half_integer_gap(x));
                                     }},
                          p);
    best = std::min(best, m);
  }
  return best;
}

void write_curve_csv(std::ostream& os, const SymbolCurve& c, int samples_per_piece) {
  os << "piece_id,t,re,im\n";
  char buf[128];
  for (std::size_t id = 0; id < c.pieces().size(); ++id) {
    const auto& p = c.pieces()[id];
    for (int j = 0; j <= samples_per_piece; ++j) {
      double tau = static_cast<double>(j) / samples_per_piece;
      double t = std::visit(overloaded{[tau](const ArcPiece& a) { return a.t0 + tau * (a.t1 - a.t0); },
                                       [tau](const SegmentPiece&) { return tau; }},
                            p);
      cplx z = piece_point(p, tau);
      std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", id, t, z.real(), z.imag());
      os << buf;
    }
  }
}

}  // namespace shiftcis
