#pragma once

#include <functional>
#include <string>

#include "qcalc/coef_expr.hpp"
#include "qcalc/mpoly.hpp"
#include "qcalc/trunc_series.hpp"

namespace qcalc {

/// Which deformation parameter a q-derivative uses.
enum class QDirection { Q, InverseQ };

/// D_q (or D_{1/q}) in `var` by the monomial rule x^n -> [n] x^(n-1).
MPoly q_derivative(const MPoly& p, const std::string& var, QDirection dir = QDirection::Q);
/// Same rule applied to a series; the order drops by one.
TruncSeries q_derivative(const TruncSeries& p, const std::string& var, QDirection dir = QDirection::Q);

/// var -> s^s_power * var, i.e. the degree-d coefficient gains s^(d * s_power).
MPoly scale_substitute(const MPoly& p, const std::string& var, int s_power);

/// (a + b_coef*b)_q^n = (a + b_coef*b)(a + q*b_coef*b)...(a + q^(n-1)*b_coef*b), by repeated multiplication.
MPoly q_binomial_power(const std::string& a_var, const CoefExpr& b_coef, const std::string& b_var, int n);
/// The same polynomial from the Gaussian-binomial expansion
/// sum_k [n,k] q^(k(k-1)/2) b_coef^k a^(n-k) b^k.
MPoly q_binomial_power_closed_form(const std::string& a_var, const CoefExpr& b_coef, const std::string& b_var,
                                   int n);

/// 1/2 (D_q^z + i D_{1/q}^w).
MPoly dbar_operator(const MPoly& p, const std::string& z = "z", const std::string& w = "w");
/// 1/2 (D_q^z - i D_{1/q}^w).
MPoly d_operator(const MPoly& p, const std::string& z = "z", const std::string& w = "w");

/// (D_q^z)^2 + q^level (D_{1/q}^w)^2.
MPoly q_laplacian(const MPoly& p, int level, const std::string& z = "z", const std::string& w = "w");
/// The ordered product of levels 0..m-1 applied to p; m = 0 is the identity.
MPoly nested_q_laplacian(const MPoly& p, int m, const std::string& z = "z", const std::string& w = "w");

/// Inverse of D_q: x^n -> x^(n+1)/[n+1], with zero constant of integration.
MPoly jackson_antiderivative(const MPoly& p, const std::string& var);
/// Series version; the order grows by one.
TruncSeries jackson_antiderivative(const TruncSeries& p, const std::string& var);

/// Every coefficient evaluated at s = s_value; s = 1 gives the classical (q = 1) polynomial.
MPoly specialize_s(const MPoly& p, const GaussianRational& s_value);

struct JacksonSum {
  double value = 0.0;
  /// Bound on |value - exact integral| from the discarded terms j >= J.
  double tail_bound = 0.0;
};

/// Truncated Jackson integral from a to b of a real polynomial g at numeric 0 < q < 1:
/// (1-q) b sum_{j<J} q^j g(q^j b) - (1-q) a sum_{j<J} q^j g(q^j a).
JacksonSum jackson_integral_numeric(const MPoly& g, double a, double b, double q_value, int terms);

}  // namespace qcalc
