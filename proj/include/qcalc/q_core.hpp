#pragma once

#include <string>

#include "qcalc/coef_expr.hpp"
#include "qcalc/laurent_poly.hpp"
#include "qcalc/trunc_series.hpp"

namespace qcalc {

// q-numbers and friends. `base` selects the deformation parameter q^base, so
// base = -1 gives [n]_{1/q} and base = 2 gives [n]_{q^2}.

/// [n] = 1 + q + ... + q^(n-1); [0] = 0. Negative n is rejected.
LaurentPoly q_int(int n, int base = 1);
/// [n]! = [1][2]...[n]; [0]! = 1.
LaurentPoly q_factorial(int n, int base = 1);
/// Gaussian binomial [n choose k]_q as a polynomial in q of degree k(n-k).
LaurentPoly gauss_binomial(int n, int k);

enum class ExpKind {
  Small,  ///< e_q(x) = sum x^n / [n]!
  Big,    ///< E_q(x) = sum q^(n(n-1)/2) x^n / [n]!
};

TruncSeries q_exp_series(ExpKind kind, int order, const std::string& var = "x", int base = 1);

enum class TrigKind { Cos, Sin };

/// cos_q = sum (-1)^m x^(2m)/[2m]!, sin_q = sum (-1)^m x^(2m+1)/[2m+1]!
/// (the real and imaginary parts of e_q(ix)), so D_q sin_q = cos_q.
TruncSeries q_trig_series(TrigKind kind, int order, const std::string& var = "x");

/// Partial sum of 1/[n]! for n <= order.
CoefExpr q_euler_number(int order);

}  // namespace qcalc
