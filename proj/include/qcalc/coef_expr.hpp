#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>

#include "qcalc/gaussian_rational.hpp"
#include "qcalc/laurent_poly.hpp"

namespace qcalc {

/// Element of the fraction field of GaussianRational[s, 1/s], with q = s^2.
///
/// Values are kept reduced (common polynomial factors cancelled, denominator
/// monic with no s-power content) but equality never relies on that: two
/// values compare equal iff num_a * den_b == num_b * den_a.
class CoefExpr {
 public:
  CoefExpr() : den_(1) {}
  CoefExpr(LaurentPoly num, LaurentPoly den);
  CoefExpr(LaurentPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  CoefExpr(GaussianRational c) : CoefExpr(LaurentPoly(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  CoefExpr(long c) : CoefExpr(LaurentPoly(c)) {}  // NOLINT(google-explicit-constructor)

  static CoefExpr s() { return LaurentPoly::s_power(1); }
  static CoefExpr q() { return LaurentPoly::q_power(1); }
  static CoefExpr i() { return GaussianRational::i(); }
  static CoefExpr rational(const mpq_class& v) { return GaussianRational(v); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return *this == CoefExpr(1); }
  /// True when the denominator is a monomial, so the value is a Laurent polynomial.
  bool is_laurent() const { return den_.is_monomial(); }
  /// Lossless lowering; throws Unsupported if the denominator is not a monomial.
  LaurentPoly to_laurent() const;

  CoefExpr inverse() const;

  CoefExpr& operator+=(const CoefExpr& o);
  CoefExpr& operator-=(const CoefExpr& o);
  CoefExpr& operator*=(const CoefExpr& o);
  CoefExpr& operator/=(const CoefExpr& o) { return *this *= o.inverse(); }

  friend CoefExpr operator+(CoefExpr a, const CoefExpr& b) { return a += b; }
  friend CoefExpr operator-(CoefExpr a, const CoefExpr& b) { return a -= b; }
  friend CoefExpr operator*(CoefExpr a, const CoefExpr& b) { return a *= b; }
  friend CoefExpr operator/(CoefExpr a, const CoefExpr& b) { return a /= b; }
  CoefExpr operator-() const { return {-num_, den_, Reduced{}}; }

  /// Cross-multiplication equality.
  friend bool operator==(const CoefExpr& a, const CoefExpr& b);

  /// s -> 1/s in numerator and denominator (q -> 1/q).
  CoefExpr substitute_inverse_q() const { return {num_.invert_s(), den_.invert_s()}; }
  /// s -> s^k (k = 2 maps q -> q^2).
  CoefExpr stretch(int k) const { return {num_.stretch(k), den_.stretch(k)}; }

  /// Exact value at q = q_value. Requires all s exponents even unless
  /// `s_value` (with s_value^2 == q_value) is supplied.
  GaussianRational eval(const mpq_class& q_value, const std::optional<mpq_class>& s_value = std::nullopt) const;
  /// Exact value at a given s.
  GaussianRational eval_at_s(const GaussianRational& s_value) const;
  /// Floating-point value at q = q_value > 0 (s = sqrt(q_value)).
  std::complex<double> eval_numeric(double q_value) const;

  std::string to_string() const;

 private:
  struct Reduced {};
  CoefExpr(LaurentPoly num, LaurentPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

CoefExpr pow(const CoefExpr& base, int exponent);

/// Equality decided by evaluating the cross-product difference at s = 1, 2, ...
/// (span + 1 points, which is enough for a Laurent polynomial of that span).
bool equal_by_sampling(const CoefExpr& a, const CoefExpr& b);

std::ostream& operator<<(std::ostream& os, const CoefExpr& c);

}  // namespace qcalc
