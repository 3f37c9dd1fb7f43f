#include "qcalc/coef_expr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcalc/error.hpp"

namespace qcalc {

CoefExpr::CoefExpr(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void CoefExpr::normalize() {
  if (den_.is_zero()) throw QError(ErrorKind::DivisionByZero, "coefficient with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    num_ = *num_.divide_exact(den_);
    den_ = LaurentPoly(1);
    return;
  }
  int shift = den_.low();
  den_ = den_.shifted(-shift);
  num_ = num_.shifted(-shift);
  LaurentPoly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  if (den_.is_monomial()) {
    num_ = *num_.divide_exact(den_);
    den_ = LaurentPoly(1);
    return;
  }
  if (!den_.leading().is_one()) {
    GaussianRational inv = den_.leading().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

LaurentPoly CoefExpr::to_laurent() const {
  if (!is_laurent()) {
    throw QError(ErrorKind::Unsupported, "coefficient " + to_string() + " is not a Laurent polynomial");
  }
  return *num_.divide_exact(den_);
}

CoefExpr CoefExpr::inverse() const {
  if (is_zero()) throw QError(ErrorKind::DivisionByZero, "inverse of zero coefficient");
  return {den_, num_};
}

CoefExpr& CoefExpr::operator+=(const CoefExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    return *this;
  }
  LaurentPoly g = poly_gcd(den_, o.den_);
  if (g.is_constant()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  } else {
    LaurentPoly mine = *den_.divide_exact(g);
    LaurentPoly theirs = *o.den_.divide_exact(g);
    num_ = num_ * theirs + o.num_ * mine;
    den_ = den_ * theirs;
  }
  normalize();
  return *this;
}

CoefExpr& CoefExpr::operator-=(const CoefExpr& o) { return *this += -o; }

CoefExpr& CoefExpr::operator*=(const CoefExpr& o) {
  if (is_zero() || o.is_zero()) return *this = CoefExpr();
  num_ *= o.num_;
  if (o.den_.is_one()) {
    if (!den_.is_one()) normalize();
    return *this;
  }
  den_ *= o.den_;
  normalize();
  return *this;
}

bool operator==(const CoefExpr& a, const CoefExpr& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

GaussianRational CoefExpr::eval_at_s(const GaussianRational& s_value) const {
  GaussianRational d = den_.eval(s_value);
  if (d.is_zero()) throw QError(ErrorKind::Pole, "denominator of " + to_string() + " vanishes at s = " + s_value.to_string());
  return num_.eval(s_value) / d;
}

GaussianRational CoefExpr::eval(const mpq_class& q_value, const std::optional<mpq_class>& s_value) const {
  if (s_value) {
    if (*s_value * *s_value != q_value) {
      throw QError(ErrorKind::InvalidArgument, "supplied s does not square to q");
    }
    return eval_at_s(GaussianRational(*s_value));
  }
  if (num_.has_odd_exponent() || den_.has_odd_exponent()) {
    throw QError(ErrorKind::NeedsSquareRoot, "coefficient " + to_string() + " needs sqrt(q); supply s");
  }
  // Even exponents only: substitute q directly for s^2.
  auto eval_even = [&](const LaurentPoly& p) {
    LaurentPoly half;
    for (const auto& [e, c] : p.terms()) half += LaurentPoly::monomial(c, e / 2);
    return half.eval(GaussianRational(q_value));
  };
  GaussianRational d = eval_even(den_);
  if (d.is_zero()) throw QError(ErrorKind::Pole, "denominator of " + to_string() + " vanishes at q = " + q_value.get_str());
  return eval_even(num_) / d;
}

std::complex<double> CoefExpr::eval_numeric(double q_value) const {
  std::complex<double> s(std::sqrt(q_value), 0.0);
  std::complex<double> d = den_.eval(s);
  if (d == std::complex<double>{}) throw QError(ErrorKind::Pole, "denominator vanishes at q = " + std::to_string(q_value));
  return num_.eval(s) / d;
}

std::string CoefExpr::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

CoefExpr pow(const CoefExpr& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  CoefExpr result(1);
  CoefExpr b = base;
  auto e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

bool equal_by_sampling(const CoefExpr& a, const CoefExpr& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  // Exponent window of the cross-product difference, found without forming it.
  int lo = std::min(a.num().low() + b.den().low(), b.num().low() + a.den().low());
  int hi = std::max(a.num().high() + b.den().high(), b.num().high() + a.den().high());
  int points = hi - lo + 1;
  for (int k = 1; k <= points; ++k) {
    GaussianRational s(k);
    if (!(a.num().eval(s) * b.den().eval(s) == b.num().eval(s) * a.den().eval(s))) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const CoefExpr& c) { return os << c.to_string(); }

}  // namespace qcalc
