#include "shiftcis/exactset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "shiftcis/errors.hpp"

namespace shiftcis {

bool IntervalQ::contains(const Rational& x) const {
  bool above = lo_closed ? x >= lo : x > lo;
  bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

IntervalQ make_interval(Rational lo, Rational hi, bool lo_closed, bool hi_closed) {
  if (!(lo < hi))
    throw LengthError("interval [" + format_rational(lo) + ", " + format_rational(hi) +
                      "] has non-positive length");
  return IntervalQ{std::move(lo), std::move(hi), lo_closed, hi_closed};
}

std::string format_interval(const IntervalQ& iv) {
  return std::string(iv.lo_closed ? "[" : "(") + format_rational(iv.lo) + ", " +
         format_rational(iv.hi) + (iv.hi_closed ? "]" : ")");
}

namespace {

struct ImagePart {
  Rational u, v;
  std::size_t piece;
};

bool wraps(const IntervalQ& p) { return frac_q(p.lo) + p.length() > 1; }

}  // namespace

TransversalSet validate_transversal(const std::vector<IntervalQ>& pieces) {
  if (pieces.empty()) throw LengthError("empty set of pieces");
  for (const auto& p : pieces)
    if (!(p.lo < p.hi)) throw LengthError("degenerate piece " + format_interval(p));

  // Mod-1 images as parts of [0,1].
  std::vector<ImagePart> parts;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (p.length() > 1)
      throw OverlapError("piece " + format_interval(p) + " is longer than one period");
    Rational u = frac_q(p.lo);
    Rational v = u + p.length();
    if (v <= 1) {
      parts.push_back({u, v, i});
    } else {
      parts.push_back({u, Rational(1), i});
      parts.push_back({Rational(0), v - 1, i});
    }
  }
  std::sort(parts.begin(), parts.end(), [](const ImagePart& x, const ImagePart& y) {
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  });
  Rational reach = 0;
  std::size_t reach_piece = parts.front().piece;
  for (const auto& part : parts) {
    if (part.u < reach)
      throw OverlapError("pieces " + format_interval(pieces[reach_piece]) + " and " +
                         format_interval(pieces[part.piece]) + " overlap mod 1 on (" +
                         format_rational(part.u) + ", " + format_rational(std::min(reach, part.v)) + ")");
    if (part.u > reach)
      throw GapError("mod-1 images miss (" + format_rational(reach) + ", " + format_rational(part.u) + ")");
    reach = part.v;
    reach_piece = part.piece;
  }
  if (reach < 1) throw GapError("mod-1 images miss (" + format_rational(reach) + ", 1)");

  Rational total = 0;
  for (const auto& p : pieces) total += p.length();
  if (total != 1) throw LengthError("total length " + format_rational(total) + " is not 1");

  TransversalSet set;
  set.input_ = pieces;
  if (pieces.size() == 1) {
    set.pieces_ = pieces;
    set.images_ = {IntervalQ{Rational(0), Rational(1), true, false}};
    return set;
  }
  // With several pieces a wrapping piece cannot have a single-interval image,
  // so cut it at its interior integer.
  std::vector<IntervalQ> split;
  for (const auto& p : pieces) {
    if (wraps(p)) {
      Rational n(floor_q(p.lo) + 1);
      split.push_back({p.lo, n, p.lo_closed, false});
      split.push_back({n, p.hi, true, p.hi_closed});
    } else {
      split.push_back(p);
    }
  }
  std::sort(split.begin(), split.end(), [](const IntervalQ& x, const IntervalQ& y) {
    return frac_q(x.lo) < frac_q(y.lo);
  });
  for (const auto& p : split) {
    Rational u = frac_q(p.lo);
    set.images_.push_back({u, u + p.length(), p.lo_closed, p.hi_closed});
  }
  set.pieces_ = std::move(split);
  return set;
}

ValidationReport check_transversal(const std::vector<IntervalQ>& pieces) {
  try {
    validate_transversal(pieces);
    return {true, "", ""};
  } catch (const ValidationError& e) {
    return {false, e.kind(), e.what()};
  }
}

long long CongruenceData::lambda_first(int k) const {
  return k == 0 ? lambda01 : lambda[k - 1].front();
}

long long CongruenceData::lambda_last(int k) const { return lambda[k - 1].back(); }

std::vector<std::pair<long long, long long>> CongruenceData::differences() const {
  std::vector<std::pair<long long, long long>> d;
  for (int k = 1; k <= L; ++k)
    d.emplace_back(lambda_last(k) - lambda_first(k), lambda_first(k - 1) - lambda_last(k));
  return d;
}

Rational CongruenceData::bound() const { return Rational(L + rho, 2); }

bool CongruenceData::in_G(const Rational& alpha) const {
  for (long long d : g_denominators) {
    Rational x = alpha * (2 * d);
    if (boost::multiprecision::denominator(x) == 1 && boost::multiprecision::numerator(x) % 2 != 0)
      return true;
  }
  return false;
}

double CongruenceData::distance_to_G(double alpha) const {
  double best = INFINITY;
  for (long long d : g_denominators) {
    double x = 2.0 * static_cast<double>(d) * alpha;
    double odd = 2.0 * std::floor((x - 1.0) / 2.0 + 0.5) + 1.0;
    best = std::min(best, std::abs(x - odd) / (2.0 * static_cast<double>(d)));
  }
  return best;
}

CongruenceData congruence_decompose(const TransversalSet& set) {
  CongruenceData cd;
  cd.L = static_cast<int>(set.pieces().size());
  cd.E = set.pieces();
  cd.F = set.images();
  for (const auto& f : cd.F) cd.a.push_back(f.lo);
  cd.a.push_back(Rational(1));

  for (int k = 1; k <= cd.L; ++k) {
    const auto& e = cd.E[k - 1];
    // lambda in Delta_k iff (lambda - E_k) meets [0,1] in positive measure,
    // i.e. lo < lambda < hi + 1.
    long long first = to_ll(floor_q(e.lo) + 1);
    long long last = to_ll(ceil_q(e.hi + 1) - 1);
    std::vector<long long> delta;
    for (long long l = first; l <= last; ++l) delta.push_back(l);
    if (delta.empty() || delta.size() > 2)
      throw DomainError("piece " + format_interval(e) + " has " + std::to_string(delta.size()) +
                        " congruence shifts");
    cd.mu.push_back(static_cast<int>(delta.size()));
    if (delta.size() == 2) cd.omega.push_back(k);
    if (delta.size() == 2)
      cd.s.push_back(std::min(Rational(delta.front()) - e.lo, Rational(1)));
    else
      cd.s.push_back(1 - cd.a[k - 1]);
    cd.lambda.push_back(std::move(delta));
  }
  cd.rho = static_cast<int>(cd.omega.size());
  cd.lambda01 = cd.lambda.back().front() + 1;

  BigInt nu = 1;
  std::vector<long long> dens;
  for (auto [d1, d2] : cd.differences()) {
    for (long long d : {d1, d2}) {
      if (d == 0) continue;
      nu = lcm_big(nu, BigInt(std::llabs(d)));
      dens.push_back(std::llabs(d));
    }
  }
  std::sort(dens.begin(), dens.end());
  dens.erase(std::unique(dens.begin(), dens.end()), dens.end());
  cd.nu = to_ll(nu);
  cd.g_denominators = std::move(dens);
  return cd;
}

namespace {

long long floor_sum(const CongruenceData& cd, const Rational& alpha) {
  static const Rational half(1, 2);
  BigInt total = 0;
  for (auto [d1, d2] : cd.differences()) {
    total += floor_q(alpha * d1 + half);
    total += floor_q(alpha * d2 + half);
  }
  return to_ll(-total);
}

}  // namespace

long long index_formula(const CongruenceData& cd, const Rational& alpha) {
  if (cd.in_G(alpha))
    throw ExcludedAlphaError("alpha = " + format_rational(alpha) + " lies in G");
  return floor_sum(cd, alpha);
}

long long index_formula(const CongruenceData& cd, double alpha) {
  if (cd.distance_to_G(alpha) < 1e-9)
    throw ExcludedAlphaError("alpha = " + std::to_string(alpha) + " is within 1e-9 of G");
  Rational snapped = snap_rational(alpha);
  // A float outside the tolerance can still snap onto a point of G; use its
  // exact binary value then.
  if (cd.in_G(snapped)) snapped = exact_rational(alpha);
  return index_formula(cd, snapped);
}

long long f_of_n(const CongruenceData& cd, long long n) {
  static const Rational half(1, 2);
  const Rational two_nu(2 * cd.nu);
  BigInt total = -BigInt(cd.rho) * floor_q(Rational(n - 1) / two_nu + half);
  for (int k = 1; k <= cd.L; ++k) {
    bool in_omega = cd.mu[k - 1] == 2;
    long long delta = cd.lambda_first(k - 1) - cd.lambda_first(k);
    long long coef = in_omega ? delta - 1 : delta;
    if (coef == 0) continue;
    int g;
    if (delta > 0)
      g = 1;
    else if (delta < 0)
      g = 0;
    else
      throw UndefinedDirectionError("g(" + std::to_string(k) + ") undefined: lambda_{k-1,1} = lambda_{k1}");
    total -= floor_q(Rational(n - g) / two_nu * coef + half);
  }
  return to_ll(total);
}

std::vector<IntervalQ> AlphaRegion::admissible_intervals() const {
  std::vector<IntervalQ> out;
  for (const auto& c : cells)
    if (c.index == 0) out.push_back(c.interval);
  return out;
}

bool AlphaRegion::contains(const Rational& alpha) const {
  if (std::find(excluded.begin(), excluded.end(), alpha) != excluded.end()) return false;
  for (const auto& c : cells)
    if (c.index == 0 && c.interval.contains(alpha)) return true;
  return false;
}

AlphaRegion admissible_region(const CongruenceData& cd) {
  AlphaRegion region;
  const Rational B = cd.bound();
  const long long span = 2 * cd.nu * to_ll(ceil_q(B));
  const Rational two_nu(2 * cd.nu);

  std::vector<RegionCell> raw;
  for (long long n = -span; n <= span; ++n) {
    Rational mid = Rational(2 * n - 1) / (4 * cd.nu);
    long long idx;
    try {
      idx = f_of_n(cd, n);
      long long check = index_formula(cd, mid);
      if (idx != check)
        throw IndexMismatchError("f(" + std::to_string(n) + ") = " + std::to_string(idx) +
                                 " but the index on the cell is " + std::to_string(check));
    } catch (const UndefinedDirectionError&) {
      idx = index_formula(cd, mid);
    }
    if (idx == 0) region.A.push_back(n);

    Rational lo = Rational(n - 1) / two_nu;
    Rational hi = Rational(n) / two_nu;
    bool hi_closed = false;
    if (lo < -B) lo = -B;
    if (hi > B) {
      hi = B;
      hi_closed = true;
    }
    if (!(lo < hi)) continue;
    IntervalQ iv{lo, hi, !cd.in_G(lo), hi_closed && !cd.in_G(hi)};
    raw.push_back({iv, idx});
  }

  for (auto& cell : raw) {
    if (!region.cells.empty()) {
      auto& last = region.cells.back();
      if (last.index == cell.index && last.interval.hi == cell.interval.lo) {
        if (cd.in_G(cell.interval.lo) && cell.index == 0) region.excluded.push_back(cell.interval.lo);
        last.interval.hi = cell.interval.hi;
        last.interval.hi_closed = cell.interval.hi_closed;
        continue;
      }
    }
    region.cells.push_back(cell);
  }
  return region;
}

}  // namespace shiftcis
