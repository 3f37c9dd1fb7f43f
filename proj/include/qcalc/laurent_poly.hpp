#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "qcalc/gaussian_rational.hpp"

namespace qcalc {

/// Laurent polynomial in the formal variable s (q = s^2) with Gaussian rational
/// coefficients. Stored densely from the lowest nonzero exponent; the zero
/// polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(GaussianRational c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(GaussianRational c, int s_exponent);
  static LaurentPoly s_power(int e) { return monomial(1, e); }
  static LaurentPoly q_power(int e) { return monomial(1, 2 * e); }
  /// Builds from (s exponent, coefficient) pairs; repeated exponents accumulate.
  static LaurentPoly from_terms(const std::vector<std::pair<int, GaussianRational>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  bool has_odd_exponent() const;

  /// Lowest / highest exponent of s; undefined for zero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  int span() const { return is_zero() ? 0 : high() - low(); }
  GaussianRational coeff(int e) const;
  const GaussianRational& leading() const { return coeffs_.back(); }
  const GaussianRational& trailing() const { return coeffs_.front(); }
  /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<int, GaussianRational>> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const GaussianRational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const GaussianRational& c) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplies by s^e.
  LaurentPoly shifted(int e) const;
  /// s -> 1/s, i.e. q -> 1/q.
  LaurentPoly invert_s() const;
  /// s -> s^k for k != 0 (k = 2 realises q -> q^2 on q-polynomials).
  LaurentPoly stretch(int k) const;

  GaussianRational eval(const GaussianRational& s) const;
  std::complex<double> eval(std::complex<double> s) const;

  /// Exact quotient by `d` when `d` divides this polynomial in GaussianRational[s, 1/s].
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<GaussianRational> coeffs_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned exponent);

/// Monic greatest common divisor of the polynomial parts (s-power content removed).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace qcalc
