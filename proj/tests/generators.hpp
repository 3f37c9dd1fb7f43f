#pragma once

// Random generators for property tests.

#include <random>

#include "qcalc/coef_expr.hpp"
#include "qcalc/mpoly.hpp"

namespace qcalc::testing {

inline GaussianRational random_gaussian(std::mt19937& rng, bool complex = true) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  mpq_class re(num(rng), den(rng));
  mpq_class im = complex ? mpq_class(num(rng), den(rng)) : mpq_class(0);
  return {re, im};
}

inline mpq_class random_rational(std::mt19937& rng, long max_num = 9, long max_den = 6) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  mpq_class v(num(rng), den(rng));
  v.canonicalize();
  return v;
}

inline LaurentPoly random_laurent(std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> exponent(-4, 6);
  LaurentPoly p;
  int n = count(rng);
  for (int k = 0; k < n; ++k) p += LaurentPoly::monomial(random_gaussian(rng), exponent(rng));
  return p;
}

inline CoefExpr random_coef(std::mt19937& rng) {
  LaurentPoly den;
  while (den.is_zero()) den = random_laurent(rng, 3);
  return {random_laurent(rng), den};
}

/// Univariate polynomial in `var` of degree <= max_degree with q-free rational coefficients.
inline MPoly random_rational_poly(std::mt19937& rng, int max_degree, const std::string& var = "x") {
  std::uniform_int_distribution<int> degree(0, max_degree);
  MPoly p({var});
  int d = degree(rng);
  for (int k = 0; k <= d; ++k) p.add_term({k}, CoefExpr::rational(random_rational(rng)));
  return p;
}

}  // namespace qcalc::testing
