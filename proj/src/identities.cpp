#include "qcalc/identities.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>

#include "qcalc/error.hpp"
#include "qcalc/hermite.hpp"
#include "qcalc/poly_ops.hpp"
#include "qcalc/q_core.hpp"

namespace qcalc {

namespace {

using Clock = std::chrono::steady_clock;

/// Accumulates residual checks for one identity; stops recording at the first failure.
class Check {
 public:
  Check(std::string id, ParamRange range) : start_(Clock::now()) {
    verdict_.id = std::move(id);
    verdict_.range = std::move(range);
  }

  bool failed() const { return verdict_.status == VerdictStatus::Failed; }

  void expect_zero(int value, const MPoly& residual, const std::string& form = {}) {
    if (failed() || residual.is_zero()) return;
    verdict_.status = VerdictStatus::Failed;
    verdict_.failing_value = value;
    if (!form.empty()) verdict_.failing_form = form;
    verdict_.residual = residual;
  }

  void expect_equal(int value, const MPoly& lhs, const MPoly& rhs, const std::string& form = {}) {
    if (failed()) return;
    expect_zero(value, lhs - rhs, form);
  }

  Verdict finish() {
    verdict_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return std::move(verdict_);
  }

 private:
  Verdict verdict_;
  Clock::time_point start_;
};

CoefExpr binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return CoefExpr::rational(mpq_class(b));
}

CoefExpr power_of_i(int k) { return pow(CoefExpr::i(), k); }

CoefExpr rational(long num, long den = 1) { return CoefExpr::rational(mpq_class(num, den)); }

MPoly linear(const std::string& var, const CoefExpr& c) { return MPoly::monomial({var}, {1}, c); }

/// p(var -> c * new_var)
MPoly rescaled(const MPoly& p, const std::string& var, const CoefExpr& c, const std::string& new_var) {
  return p.substitute(var, linear(new_var, c));
}

bool all_real(const MPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    for (const auto* part : {&c.num(), &c.den()}) {
      for (const auto& [exp, coef] : part->terms()) {
        if (!coef.is_real()) return false;
      }
    }
  }
  return true;
}

/// Keeps only the imaginary part of every coefficient (coefficients must be Laurent).
MPoly imaginary_part(const MPoly& p) {
  return p.map_coefficients([](const CoefExpr& c) {
    LaurentPoly im;
    for (const auto& [e, v] : c.to_laurent().terms()) im += LaurentPoly::monomial(GaussianRational(v.im()), e);
    return CoefExpr(im);
  });
}

MPoly series_body_substituted(const TruncSeries& s, const std::string& var, const MPoly& replacement) {
  return s.body().substitute(var, replacement);
}

}  // namespace

MPoly hermite_binomial_rhs(int n) {
  MPoly sum({"z", "w"});
  for (int k = 0; k <= n; ++k) {
    sum += binomial(n, k) * power_of_i(k) * (hermite_classical(n - k, "z") * hermite_classical(k, "w"));
  }
  return sum * pow(rational(1, 2), n);
}

MPoly q_hermite_binomial_rhs(int n) {
  MPoly sum({"z", "w"});
  for (int k = 0; k <= n; ++k) {
    CoefExpr c = CoefExpr(gauss_binomial(n, k).shifted(k * (k - 1))) * power_of_i(k);
    sum += c * (q_hermite(n - k, "z") * q_hermite_dual(k, "w"));
  }
  return sum * pow(CoefExpr(q_int(2)), -n);
}

MPoly traveling_binomial(int n, const std::optional<mpq_class>& c, int sign) {
  CoefExpr s = sign >= 0 ? 1 : -1;
  if (c) return q_binomial_power("x", s * CoefExpr::rational(*c), "t", n);
  return q_binomial_power("x", s, "t", n).substitute("t", MPoly::monomial({"t", "c"}, {1, 1}, 1));
}

MPoly traveling_hermite_rhs(int n, const std::optional<mpq_class>& c) {
  // w -> -i c t
  MPoly w_image = c ? MPoly::monomial({"t"}, {1}, -CoefExpr::i() * CoefExpr::rational(*c))
                    : MPoly::monomial({"t", "c"}, {1, 1}, -CoefExpr::i());
  MPoly sum({"x"});
  for (int k = 0; k <= n; ++k) {
    CoefExpr coef = CoefExpr(gauss_binomial(n, k).shifted(k * (k - 1))) * power_of_i(k);
    sum += coef * (q_hermite(n - k, "x") * q_hermite_dual(k, "w").substitute("w", w_image));
  }
  return sum * pow(CoefExpr(q_int(2)), -n);
}

MPoly apply_exp_operator(const MPoly& p, const std::function<MPoly(const MPoly&)>& op, const CoefExpr& coef,
                         int base, int order) {
  MPoly sum(p.vars());
  MPoly term = p;
  CoefExpr weight(1);
  for (int m = 0; m <= order && !term.is_zero(); ++m) {
    sum += (weight / CoefExpr(q_factorial(m, base))) * term;
    term = op(term);
    weight *= coef;
  }
  return sum;
}

Verdict verify_hermite_binomial(int n_max) {
  Check check("hermite-binomial", {"n", 0, n_max});
  MPoly zi({"z", "w"});
  zi.add_term({1, 0}, 1);
  zi.add_term({0, 1}, CoefExpr::i());
  MPoly lhs = MPoly::constant(1, {"z", "w"});
  for (int n = 0; n <= n_max && !check.failed(); ++n) {
    check.expect_equal(n, lhs, hermite_binomial_rhs(n));
    lhs *= zi;
  }
  return check.finish();
}

Verdict verify_xi_identity(int n_max) {
  Check check("xi", {"n", 0, n_max});
  const CoefExpr i = CoefExpr::i();
  for (int n = 0; n <= n_max && !check.failed(); ++n) {
    MPoly main({"xi"});
    MPoly z_form({"z"});
    MPoly x_form({"x"});
    MPoly y_form({"y"});
    for (int k = 0; k <= n; ++k) {
      const CoefExpr c = binomial(n, k);
      const CoefExpr minus_i_power = pow(-i, n - k);
      const MPoly h_nk = hermite_classical(n - k);
      const MPoly h_k = hermite_classical(k);
      main += c * minus_i_power *
              (rescaled(h_nk, "x", i / CoefExpr(2), "xi") * rescaled(h_k, "x", rational(1, 2), "xi"));
      z_form += c * pow(i, k) * (rescaled(h_nk, "x", 1, "z") * rescaled(h_k, "x", -i, "z"));
      x_form += c * minus_i_power *
                (rescaled(h_nk, "x", i / CoefExpr(2), "x") * rescaled(h_k, "x", rational(1, 2), "x"));
      y_form += c * minus_i_power *
                (rescaled(h_nk, "x", rational(-1, 2), "y") * rescaled(h_k, "x", i / CoefExpr(2), "y"));
    }
    CoefExpr half_n = pow(rational(1, 2), n);
    check.expect_equal(n, half_n * main, MPoly::monomial({"xi"}, {n}, 1), "xi");
    check.expect_equal(n, pow(rational(1, 4), n) * z_form, MPoly::monomial({"z"}, {n}, 1), "xi=-2iz");
    check.expect_equal(n, half_n * x_form, MPoly::monomial({"x"}, {n}, 1), "xi=x");
    check.expect_equal(n, half_n * y_form, MPoly::monomial({"y"}, {n}, pow(i, n)), "xi=iy");
  }
  return check.finish();
}

Verdict verify_q_hermite_binomial(int n_max) {
  Check check("q-hermite-binomial", {"n", 0, n_max});
  for (int n = 0; n <= n_max && !check.failed(); ++n) {
    check.expect_equal(n, q_binomial_power("z", CoefExpr::i(), "w", n), q_hermite_binomial_rhs(n));
  }
  return check.finish();
}

Verdict verify_exp_product(int order, const std::vector<mpq_class>& q_samples) {
  for (const auto& q : q_samples) {
    if (q == -1) throw QError(ErrorKind::InvalidArgument, "q = -1 is a pole of (1-q)/(1+q)");
  }
  Check check("exp-product", {"order", 0, order});
  TruncSeries e = q_exp_series(ExpKind::Small, order, "x");
  TruncSeries e_neg(series_body_substituted(e, "x", linear("x", -1)), order);
  TruncSeries lhs = e * e_neg;

  CoefExpr q = CoefExpr::q();
  CoefExpr ratio = (1 - q) / (1 + q);
  MPoly rhs_body({"x"});
  for (int m = 0; 2 * m <= order; ++m) {
    rhs_body.add_term({2 * m}, pow(ratio, m) / CoefExpr(q_factorial(m, 2)));
  }
  TruncSeries rhs(rhs_body, order);
  check.expect_equal(order, lhs.body(), rhs.body(), "symbolic");

  for (const auto& q_value : q_samples) {
    MPoly diff({"x"});
    for (int n = 0; n <= order; ++n) {
      GaussianRational l = lhs.coeff(n).eval(q_value);
      GaussianRational r = rhs.coeff(n).eval(q_value);
      diff.add_term({n}, CoefExpr(l - r));
    }
    check.expect_zero(order, diff, "q=" + q_value.get_str());
  }
  return check.finish();
}

Verdict verify_exp_factorization(int order) {
  Check check("exp-factorization", {"order", 0, order});
  TruncSeries lhs = q_exp_series(ExpKind::Small, order, "x") * q_exp_series(ExpKind::Small, order, "y", -1);
  MPoly rhs({"x", "y"});
  for (int n = 0; n <= order; ++n) {
    rhs += CoefExpr(q_factorial(n)).inverse() * q_binomial_power("x", 1, "y", n);
  }
  check.expect_equal(order, lhs.body(), rhs, "factorization");

  MPoly t_squared = MPoly::monomial({"t"}, {2}, 1);
  TruncSeries left(series_body_substituted(q_exp_series(ExpKind::Small, order, "u"), "u", -t_squared), order);
  TruncSeries right(series_body_substituted(q_exp_series(ExpKind::Small, order, "u", -1), "u", t_squared), order);
  check.expect_equal(order, (left * right).body(), MPoly::constant(1, {"t"}), "corollary");
  return check.finish();
}

Verdict verify_double_q_analytic(int n_max) {
  Check check("double-q-analytic", {"n", 1, n_max});
  for (int n = 1; n <= n_max && !check.failed(); ++n) {
    MPoly b = q_binomial_power("z", CoefExpr::i(), "w", n);
    check.expect_zero(n, dbar_operator(b), "dbar");
    check.expect_equal(n, d_operator(b), CoefExpr(q_int(n)) * q_binomial_power("z", CoefExpr::i(), "w", n - 1), "d");
  }
  return check.finish();
}

Verdict verify_q_laplacian_identity(int n_max, int order) {
  if (order < n_max) throw QError(ErrorKind::InvalidArgument, "operator series order must be >= n_max");
  Check check("q-laplacian", {"n", 0, n_max});
  const CoefExpr two(q_int(2));
  const CoefExpr minus_inv_two_sq = -pow(two, -2);
  auto dz2 = [](const MPoly& p) { return q_derivative(q_derivative(p, "z"), "z"); };
  auto dw2 = [](const MPoly& p) {
    return q_derivative(q_derivative(p, "w", QDirection::InverseQ), "w", QDirection::InverseQ);
  };
  auto dx2 = [](const MPoly& p) { return q_derivative(q_derivative(p, "x"), "x"); };

  for (int n = 0; n <= n_max && !check.failed(); ++n) {
    MPoly b = q_binomial_power("z", CoefExpr::i(), "w", n);

    for (int m = 1; m <= std::max(3, n / 2 + 1); ++m) check.expect_zero(n, nested_q_laplacian(b, m), "nested");

    MPoly plain({"z", "w"});
    for (int m = 0; m <= order; ++m) {
      MPoly term = nested_q_laplacian(b, m);
      if (term.is_zero()) break;
      plain += (pow(minus_inv_two_sq, m) / CoefExpr(q_factorial(m))) * term;
    }
    check.expect_equal(n, plain, b, "exponential operator");

    MPoly factorized({"z", "w"});
    for (int k = 0; k <= n; ++k) {
      CoefExpr c = CoefExpr(gauss_binomial(n, k).shifted(k * (k - 1))) * pow(CoefExpr::i(), k);
      MPoly z_part = apply_exp_operator(MPoly::monomial({"z"}, {n - k}, 1), dz2, minus_inv_two_sq, 1, order);
      MPoly w_part = apply_exp_operator(MPoly::monomial({"w"}, {k}, 1), dw2, minus_inv_two_sq, -1, order);
      factorized += c * (z_part * w_part);
    }
    check.expect_equal(n, factorized, b, "factorized operator");

    MPoly hermite = pow(two, n) * apply_exp_operator(MPoly::monomial({"x"}, {n}, 1), dx2, minus_inv_two_sq, 1, order);
    check.expect_equal(n, hermite, q_hermite(n), "hermite operator");
  }
  return check.finish();
}

Verdict verify_traveling_hermite_expansion(int n_max, const std::optional<mpq_class>& c) {
  Check check("traveling-hermite", {"n", 0, n_max});
  for (int n = 0; n <= n_max && !check.failed(); ++n) {
    MPoly rhs = traveling_hermite_rhs(n, c);
    check.expect_equal(n, traveling_binomial(n, c), rhs);
    if (!all_real(rhs)) check.expect_zero(n, imaginary_part(rhs), "imaginary part");
  }
  return check.finish();
}

Verdict verify_q_euler_expansion(int order) {
  Check check("q-euler", {"order", 0, order});
  const CoefExpr inv_two = CoefExpr(q_int(2)).inverse();
  CoefExpr lhs_total;
  CoefExpr rhs_total;
  for (int n = 0; n <= order; ++n) {
    // t^n coefficient of e_q(-t^2) e_q(t)
    CoefExpr graded;
    for (int k = 0; 2 * k <= n; ++k) {
      CoefExpr term = CoefExpr(q_factorial(k) * q_factorial(n - 2 * k)).inverse();
      graded += k % 2 == 0 ? term : -term;
    }
    CoefExpr hermite_term = q_hermite(n).evaluate_at("x", inv_two).coeff(Exponents{}) / CoefExpr(q_factorial(n));
    check.expect_equal(n, MPoly::constant(graded), MPoly::constant(hermite_term), "graded term");
    lhs_total += graded;
    rhs_total += hermite_term;
  }
  check.expect_equal(order, MPoly::constant(lhs_total), MPoly::constant(rhs_total), "partial sum");
  return check.finish();
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {
      "double-q-analytic", "exp-factorization", "exp-product", "hermite-binomial",
      "q-hermite-binomial", "q-laplacian", "traveling-hermite", "xi",
  };
  return ids;
}

std::vector<Verdict> run_verification(const std::string& id, const VerifyOptions& options) {
  auto run_one = [&options](const std::string& which) -> Verdict {
    if (which == "double-q-analytic") return verify_double_q_analytic(std::max(options.n_max, 1));
    if (which == "exp-factorization") return verify_exp_factorization(options.order);
    if (which == "exp-product") return verify_exp_product(options.order, options.q_samples);
    if (which == "hermite-binomial") return verify_hermite_binomial(options.n_max);
    if (which == "q-hermite-binomial") return verify_q_hermite_binomial(options.n_max);
    if (which == "q-laplacian") return verify_q_laplacian_identity(options.n_max, std::max(options.order, options.n_max));
    if (which == "traveling-hermite") return verify_traveling_hermite_expansion(options.n_max, options.c);
    if (which == "xi") return verify_xi_identity(options.n_max);
    throw QError(ErrorKind::InvalidArgument, "unknown identity id '" + which + "'");
  };

  if (id != "all") return {run_one(id)};

  std::vector<std::future<Verdict>> pending;
  for (const auto& which : identity_ids()) pending.push_back(std::async(std::launch::async, run_one, which));
  std::vector<Verdict> out;
  for (auto& f : pending) out.push_back(f.get());
  std::sort(out.begin(), out.end(), [](const Verdict& a, const Verdict& b) { return a.id < b.id; });
  return out;
}

}  // namespace qcalc
