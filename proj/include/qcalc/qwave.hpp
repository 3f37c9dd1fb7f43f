#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcalc/coef_expr.hpp"
#include "qcalc/identities.hpp"
#include "qcalc/mpoly.hpp"

namespace qcalc {

/// Wave speed. Either an exact nonzero constant, or symbolic, in which case c is
/// carried as the polynomial variable "c".
class Speed {
 public:
  static Speed symbolic() { return Speed(); }
  /// Throws InvalidArgument for c = 0.
  static Speed exact(const CoefExpr& c);

  bool is_symbolic() const { return !value_.has_value(); }
  const std::optional<CoefExpr>& value() const { return value_; }
  /// c as a polynomial (the variable "c", or a constant).
  MPoly as_poly() const;
  /// p / c. For symbolic c every term of p must contain c.
  MPoly divide(const MPoly& p) const;

 private:
  Speed() = default;
  std::optional<CoefExpr> value_;
};

enum class Provenance { Dalembert, DirectBinomial, NamedSeries };

std::string provenance_name(Provenance p);
/// Throws Parse for an unknown name.
Provenance provenance_from_name(const std::string& name);

/// u(x,t). For a series body (`order` set) only monomials of (x,t)-degree <= order are exact.
struct WaveSolution {
  MPoly body;
  Speed c = Speed::symbolic();
  std::optional<int> order;
  Provenance provenance = Provenance::Dalembert;
};

/// f(x) and g(x). Coefficients may involve the symbol c. An order marks a truncated series.
struct InitialData {
  MPoly f;
  MPoly g;
  std::optional<int> f_order;
  std::optional<int> g_order;
};

/// Degree of a monomial in x and t only (c does not count).
int xt_degree(const MPoly& p, const Exponents& e);
/// Drops monomials of (x,t)-degree above max_degree.
MPoly truncated_xt(const MPoly& p, int max_degree);

/// (x + sign c t)_q^n.
MPoly traveling_power(int n, int sign, const Speed& c);

/// Linear extension of x^n -> (x + sign c t)_q^n.
MPoly q_binomial_substitute(const MPoly& p, int sign, const Speed& c);

/// (D_{1/q}^t)^2 u - c^2 (D_q^x)^2 u.
MPoly qwave_operator(const MPoly& u, const Speed& c);
MPoly qwave_operator(const WaveSolution& u);
/// Residual that must vanish: the full operator output for a polynomial body,
/// its part of (x,t)-degree <= order - 2 for a series body.
MPoly qwave_residual(const WaveSolution& u);

/// (D_{1/q}^t + op_sign c D_q^x) (x + sign c t)_q^n. Zero when op_sign = -sign.
MPoly one_directional_residual(int n, int sign, int op_sign, const Speed& c);
/// The matched operator annihilates (x + sign c t)_q^n for every n <= n_max.
Verdict one_directional_check(int n_max, int sign, const Speed& c = Speed::symbolic());

/// q-D'Alembert solution
///   1/2 [f(x+ct)_q + f(x-ct)_q] + 1/(2c) [G(x+ct)_q - G(x-ct)_q],  G = Jackson antiderivative of g.
/// Checks u(x,0) = f, D_{1/q}^t u(x,0) = g and the wave residual before returning;
/// a failed check throws Internal.
WaveSolution dalembert_solve(const InitialData& data, const Speed& c);

/// Truncated series in x of a named initial profile: "q-gaussian" (sum (-1)^n x^(2n)/n!,
/// classical factorial), "cos_q", "sin_q".
MPoly named_profile(const std::string& name, int order);
/// The named profile with x^n -> (x + sign c t)_q^n.
WaveSolution named_wave(const std::string& name, int sign, const Speed& c, int order);
/// (x + sign c t)_q^n as a wave.
WaveSolution traveling_wave(int n, int sign, const Speed& c);

/// Inclusive grid start, start + step, ..., up to stop.
struct GridRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::vector<double> points() const;
};

/// Parses "start:stop:step"; throws Parse on malformed text or a non-positive step.
GridRange parse_grid(const std::string& text);

struct SampleRow {
  double x = 0.0;
  double t = 0.0;
  double u = 0.0;
  /// False when a series body's highest retained degree contributes more than 1e-8 (relative).
  bool valid = true;
};

/// Evaluates u on the grid at numeric q > 0 and c. Rows are x-major, then t.
std::vector<SampleRow> sample_grid(const WaveSolution& u, double q_value, double c_value, const GridRange& x_grid,
                                   const GridRange& t_grid);

/// "x,t,u,valid" CSV with 17 significant digits.
std::string to_csv(const std::vector<SampleRow>& rows);

/// Intervals [x_k, x_{k+1}] over which the sampled values change sign (or hit zero at x_k).
std::vector<std::pair<double, double>> sign_change_brackets(const std::vector<double>& xs,
                                                            const std::vector<double>& us);
/// Trapezoid rule over the samples with a <= x <= b.
double trapezoid(const std::vector<double>& xs, const std::vector<double>& us, double a, double b);

}  // namespace qcalc
