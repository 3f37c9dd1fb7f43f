#pragma once

#include <ostream>
#include <string>

#include "qcalc/mpoly.hpp"

namespace qcalc {

/// Power series in one or more variables, exact in every monomial of total
/// degree <= order and unknown above it. Arithmetic keeps the smaller order.
class TruncSeries {
 public:
  TruncSeries(MPoly body, int order);

  const MPoly& body() const { return body_; }
  int order() const { return order_; }
  const std::vector<std::string>& vars() const { return body_.vars(); }
  /// Coefficient of x^n in a univariate series; zero above the order is not implied.
  CoefExpr coeff(int n) const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const CoefExpr& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const CoefExpr& c) { return a *= c; }
  TruncSeries operator-() const { return {-body_, order_}; }

  /// Lowers the order (truncating the body); raising it is not allowed.
  TruncSeries truncated(int order) const;

  /// Monomials of total degree <= degree agree.
  bool agrees_with(const TruncSeries& o, int degree) const;

 private:
  MPoly body_;
  int order_;
};

std::ostream& operator<<(std::ostream& os, const TruncSeries& s);

}  // namespace qcalc
