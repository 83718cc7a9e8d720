#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftcis/rational.hpp"

namespace shiftcis {

struct IntervalQ {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = false;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const;
  friend bool operator==(const IntervalQ&, const IntervalQ&) = default;
};

// Throws LengthError unless lo < hi.
IntervalQ make_interval(Rational lo, Rational hi, bool lo_closed = true, bool hi_closed = false);

std::string format_interval(const IntervalQ& iv);

class TransversalSet {
 public:
  // Pieces after splitting at interior integers (when there is more than one
  // piece) and sorting by the left end of their mod-1 image.
  const std::vector<IntervalQ>& pieces() const { return pieces_; }
  // Images F_k in [0,1], same order as pieces().
  const std::vector<IntervalQ>& images() const { return images_; }
  // The pieces exactly as supplied by the caller.
  const std::vector<IntervalQ>& input_pieces() const { return input_; }

 private:
  friend TransversalSet validate_transversal(const std::vector<IntervalQ>&);
  std::vector<IntervalQ> input_;
  std::vector<IntervalQ> pieces_;
  std::vector<IntervalQ> images_;
};

struct ValidationReport {
  bool ok = false;
  std::string error_kind;  // "OverlapError", "GapError", "LengthError"
  std::string message;
};

// Throws OverlapError, GapError or LengthError.
TransversalSet validate_transversal(const std::vector<IntervalQ>& pieces);
ValidationReport check_transversal(const std::vector<IntervalQ>& pieces);

struct CongruenceData {
  int L = 0;
  std::vector<IntervalQ> E;             // pieces E_1..E_L
  std::vector<IntervalQ> F;             // images F_1..F_L
  std::vector<Rational> a;              // breakpoints a_1..a_{L+1}
  std::vector<std::vector<long long>> lambda;  // Delta_k, ascending
  std::vector<int> mu;
  std::vector<int> omega;               // 1-based k with mu_k = 2
  int rho = 0;
  long long nu = 1;
  long long lambda01 = 0;
  std::vector<Rational> s;              // split points s_k
  std::vector<long long> g_denominators;  // alpha in G iff 2 d alpha is odd for some d

  // k in 0..L; k = 0 gives lambda_01.
  long long lambda_first(int k) const;
  long long lambda_last(int k) const;
  // Per k: (lambda_{k mu_k} - lambda_{k1}, lambda_{k-1,1} - lambda_{k mu_k}).
  std::vector<std::pair<long long, long long>> differences() const;
  // (L + rho) / 2.
  Rational bound() const;

  bool in_G(const Rational& alpha) const;
  double distance_to_G(double alpha) const;
};

CongruenceData congruence_decompose(const TransversalSet& set);

// Winding index of the symbol curve. Throws ExcludedAlphaError for alpha in G.
long long index_formula(const CongruenceData& cd, const Rational& alpha);
// Float alpha: rejected within 1e-9 of G, then snapped (denominator <= 1e6).
long long index_formula(const CongruenceData& cd, double alpha);

long long f_of_n(const CongruenceData& cd, long long n);

struct RegionCell {
  IntervalQ interval;
  long long index = 0;
};

struct AlphaRegion {
  std::vector<RegionCell> cells;       // sorted, disjoint, merged by equal index
  std::vector<Rational> excluded;      // G points interior to merged cells
  std::vector<long long> A;            // n in the scan window with f(n) = 0

  std::vector<IntervalQ> admissible_intervals() const;
  bool contains(const Rational& alpha) const;
};

AlphaRegion admissible_region(const CongruenceData& cd);

}  // namespace shiftcis
