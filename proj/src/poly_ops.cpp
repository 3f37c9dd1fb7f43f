#include "qcalc/poly_ops.hpp"

#include <cmath>

#include "qcalc/error.hpp"
#include "qcalc/q_core.hpp"

namespace qcalc {

namespace {

int base_of(QDirection dir) { return dir == QDirection::Q ? 1 : -1; }

const CoefExpr& half() {
  static const CoefExpr h = CoefExpr::rational(mpq_class(1, 2));
  return h;
}

}  // namespace

MPoly q_derivative(const MPoly& p, const std::string& var, QDirection dir) {
  if (!p.has_var(var)) return MPoly(p.vars());
  std::size_t k = p.var_index(var);
  MPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) continue;
    Exponents ne = e;
    --ne[k];
    out.add_term(ne, c * CoefExpr(q_int(e[k], base_of(dir))));
  }
  return out;
}

TruncSeries q_derivative(const TruncSeries& p, const std::string& var, QDirection dir) {
  if (p.order() == 0) return {MPoly(p.vars()), 0};
  return {q_derivative(p.body(), var, dir), p.order() - 1};
}

MPoly scale_substitute(const MPoly& p, const std::string& var, int s_power) {
  std::size_t k = p.var_index(var);
  MPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, c * CoefExpr(LaurentPoly::s_power(e[k] * s_power)));
  return out;
}

MPoly q_binomial_power(const std::string& a_var, const CoefExpr& b_coef, const std::string& b_var, int n) {
  if (n < 0) throw QError(ErrorKind::Unsupported, "q-binomial powers with negative exponent are not supported");
  if (a_var == b_var) throw QError(ErrorKind::InvalidArgument, "q-binomial needs two distinct variables");
  std::vector<std::string> vars{a_var, b_var};
  MPoly out = MPoly::constant(1, vars);
  for (int k = 0; k < n; ++k) {
    MPoly factor(vars);
    factor.add_term({1, 0}, 1);
    factor.add_term({0, 1}, b_coef * CoefExpr(LaurentPoly::q_power(k)));
    out *= factor;
  }
  return out;
}

MPoly q_binomial_power_closed_form(const std::string& a_var, const CoefExpr& b_coef, const std::string& b_var,
                                   int n) {
  if (n < 0) throw QError(ErrorKind::Unsupported, "q-binomial powers with negative exponent are not supported");
  MPoly out({a_var, b_var});
  CoefExpr b_power(1);
  for (int k = 0; k <= n; ++k) {
    out.add_term({n - k, k}, CoefExpr(gauss_binomial(n, k).shifted(k * (k - 1))) * b_power);
    b_power *= b_coef;
  }
  return out;
}

MPoly dbar_operator(const MPoly& p, const std::string& z, const std::string& w) {
  MPoly sum = q_derivative(p, z, QDirection::Q) + CoefExpr::i() * q_derivative(p, w, QDirection::InverseQ);
  return sum * half();
}

MPoly d_operator(const MPoly& p, const std::string& z, const std::string& w) {
  MPoly diff = q_derivative(p, z, QDirection::Q) - CoefExpr::i() * q_derivative(p, w, QDirection::InverseQ);
  return diff * half();
}

MPoly q_laplacian(const MPoly& p, int level, const std::string& z, const std::string& w) {
  if (level < 0) throw QError(ErrorKind::InvalidArgument, "q-Laplacian level must be >= 0");
  MPoly zz = q_derivative(q_derivative(p, z, QDirection::Q), z, QDirection::Q);
  MPoly ww = q_derivative(q_derivative(p, w, QDirection::InverseQ), w, QDirection::InverseQ);
  return zz + CoefExpr(LaurentPoly::q_power(level)) * ww;
}

MPoly nested_q_laplacian(const MPoly& p, int m, const std::string& z, const std::string& w) {
  if (m < 0) throw QError(ErrorKind::InvalidArgument, "nesting depth must be >= 0");
  MPoly out = p;
  // The levels commute (constant coefficients), so order of application is immaterial.
  for (int level = m - 1; level >= 0; --level) out = q_laplacian(out, level, z, w);
  return out;
}

MPoly jackson_antiderivative(const MPoly& p, const std::string& var) {
  MPoly base = p.has_var(var) ? p : p.with_vars([&] {
    auto v = p.vars();
    v.push_back(var);
    return v;
  }());
  std::size_t k = base.var_index(var);
  MPoly out(base.vars());
  for (const auto& [e, c] : base.terms()) {
    Exponents ne = e;
    ++ne[k];
    out.add_term(ne, c / CoefExpr(q_int(ne[k])));
  }
  return out;
}

TruncSeries jackson_antiderivative(const TruncSeries& p, const std::string& var) {
  return {jackson_antiderivative(p.body(), var), p.order() + 1};
}

MPoly specialize_s(const MPoly& p, const GaussianRational& s_value) {
  return p.map_coefficients([&](const CoefExpr& c) { return CoefExpr(c.eval_at_s(s_value)); });
}

JacksonSum jackson_integral_numeric(const MPoly& g, double a, double b, double q_value, int terms) {
  if (!(q_value > 0.0 && q_value < 1.0)) {
    throw QError(ErrorKind::InvalidArgument, "numeric Jackson sum needs 0 < q < 1");
  }
  if (terms < 0) throw QError(ErrorKind::InvalidArgument, "term count must be >= 0");
  if (g.vars().size() > 1) throw QError(ErrorKind::InvalidArgument, "Jackson sum integrand must be univariate");

  std::vector<double> coeffs(static_cast<std::size_t>(std::max(g.total_degree(), 0)) + 1, 0.0);
  for (const auto& [e, c] : g.terms()) {
    std::complex<double> v = c.eval_numeric(q_value);
    coeffs[e.empty() ? 0 : static_cast<std::size_t>(e[0])] = v.real();
  }
  auto eval = [&](double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  };

  JacksonSum out;
  if (a == b) return out;
  double sum_b = 0.0;
  double sum_a = 0.0;
  double qj = 1.0;
  for (int j = 0; j < terms; ++j) {
    sum_b += qj * eval(qj * b);
    sum_a += qj * eval(qj * a);
    qj *= q_value;
  }
  out.value = (1.0 - q_value) * (b * sum_b - a * sum_a);

  // Remaining nodes lie in [-r, r]; bound |g| there by sum |c_k| r^k.
  double r = qj * std::max(std::fabs(a), std::fabs(b));
  double max_g = 0.0;
  double rk = 1.0;
  for (double c : coeffs) {
    max_g += std::fabs(c) * rk;
    rk *= r;
  }
  out.tail_bound = (std::fabs(a) + std::fabs(b)) * qj * max_g;
  return out;
}

}  // namespace qcalc
