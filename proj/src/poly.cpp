#include "shiftcis/poly.hpp"

#include <cmath>

#include "shiftcis/errors.hpp"

namespace shiftcis {

PolyR::PolyR(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyR::PolyR(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

PolyR PolyR::constant(const Rational& c) { return PolyR({c}); }

PolyR PolyR::monomial(const Rational& c, int power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return PolyR(std::move(v));
}

void PolyR::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational PolyR::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

Rational PolyR::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational PolyR::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> PolyR::eval(std::complex<double> z) const { return PolyF(*this)(z); }

PolyR PolyR::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return PolyR(std::move(d));
}

PolyR PolyR::reversed(int n) const {
  if (n < degree()) throw DomainError("reversal order below degree");
  std::vector<Rational> r(n + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) r[n - k] = c_[k];
  return PolyR(std::move(r));
}

PolyR PolyR::negated_argument() const {
  std::vector<Rational> r(c_);
  for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return PolyR(std::move(r));
}

PolyR& PolyR::operator+=(const PolyR& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

PolyR& PolyR::operator-=(const PolyR& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

PolyR& PolyR::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

PolyR operator*(const PolyR& a, const PolyR& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return PolyR(std::move(r));
}

void PolyR::divmod(const PolyR& a, const PolyR& b, PolyR& q, PolyR& r) {
  if (b.is_zero()) throw DegenerateError("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  int da = a.degree();
  std::vector<Rational> quo(da >= db ? da - db + 1 : 0);
  for (int k = da; k >= db; --k) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] / b.c_[db];
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
  }
  q = PolyR(std::move(quo));
  r = PolyR(std::move(rem));
}

namespace {
constexpr double kLeadingFloor = 1e-14;
}

PolyF::PolyF(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && std::abs(c_.back()) <= kLeadingFloor) c_.pop_back();
}

PolyF::PolyF(const PolyR& p) {
  c_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) c_.push_back(to_double(c));
  while (!c_.empty() && std::abs(c_.back()) <= kLeadingFloor) c_.pop_back();
}

double PolyF::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> PolyF::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PolyF PolyF::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
  return PolyF(std::move(d));
}

}  // namespace shiftcis
