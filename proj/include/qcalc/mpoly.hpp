#pragma once

#include <complex>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "qcalc/coef_expr.hpp"

namespace qcalc {

using Exponents = std::vector<int>;

/// Multivariate polynomial over CoefExpr in an ordered list of named variables.
///
/// Binary operations on polynomials with different variable lists work on the
/// union of the lists (left operand's order first). Zero coefficients are never
/// stored.
class MPoly {
 public:
  using TermMap = std::map<Exponents, CoefExpr>;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars);

  static MPoly constant(const CoefExpr& c, std::vector<std::string> vars = {});
  static MPoly variable(const std::string& name);
  static MPoly monomial(std::vector<std::string> vars, Exponents exps, const CoefExpr& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_var(const std::string& name) const;
  /// Index of `name` in the variable list; throws InvalidArgument if absent.
  std::size_t var_index(const std::string& name) const;

  int degree_in(const std::string& name) const;
  int total_degree() const;
  CoefExpr coeff(const Exponents& exps) const;
  /// Coefficient of a univariate polynomial at x^n.
  CoefExpr coeff(int n) const;

  void add_term(const Exponents& exps, const CoefExpr& c);

  /// Same polynomial over `vars`, which must contain every variable in use.
  MPoly with_vars(const std::vector<std::string>& vars) const;
  /// Drops variables that no term uses.
  MPoly compacted() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const CoefExpr& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const CoefExpr& c) { return a *= c; }
  friend MPoly operator*(const CoefExpr& c, MPoly a) { return a *= c; }
  MPoly operator-() const;

  /// Term-by-term CoefExpr equality over the union of both variable lists.
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly map_coefficients(const std::function<CoefExpr(const CoefExpr&)>& fn) const;
  MPoly filter(const std::function<bool(const Exponents&)>& keep) const;
  /// Keeps monomials of total degree <= max_degree.
  MPoly truncated(int max_degree) const;
  /// Keeps monomials whose degree in `var` is <= max_degree.
  MPoly truncated_in(const std::string& var, int max_degree) const;

  /// Composition: replaces `var` by `replacement`; `var` is removed from the
  /// variable list unless the replacement uses it.
  MPoly substitute(const std::string& var, const MPoly& replacement) const;
  /// Replaces `var` by a constant and removes it from the variable list.
  MPoly evaluate_at(const std::string& var, const CoefExpr& value) const;
  /// Renames a variable; the new name must not already be in use.
  MPoly renamed(const std::string& from, const std::string& to) const;

  /// Floating-point value with all variables bound (in variable-list order) at q = q_value.
  std::complex<double> eval_numeric(double q_value, const std::vector<std::complex<double>>& point) const;

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

MPoly pow(const MPoly& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const MPoly& p);

}  // namespace qcalc
