#include "doctest.h"
#include "qcalc/error.hpp"
#include "qcalc/hermite.hpp"
#include "qcalc/identities.hpp"
#include "qcalc/poly_ops.hpp"
#include "qcalc/q_core.hpp"

using namespace qcalc;

namespace {

void check_verified(const Verdict& v) {
  INFO(v.id << " failing at " << v.failing_value.value_or(-1) << " form " << v.failing_form.value_or("")
            << " residual " << (v.residual ? v.residual->to_string() : std::string()));
  CHECK(v.verified());
  CHECK(!v.residual.has_value());
}

}  // namespace

TEST_CASE("hermite binomial, small n") {
  MPoly z_iw({"z", "w"});
  z_iw.add_term({1, 0}, 1);
  z_iw.add_term({0, 1}, CoefExpr::i());
  CHECK(hermite_binomial_rhs(0) == MPoly::constant(1, {"z", "w"}));
  CHECK(hermite_binomial_rhs(1) == z_iw);
  CHECK(hermite_binomial_rhs(2) == z_iw * z_iw);
  check_verified(verify_hermite_binomial(12));
}

TEST_CASE("xi identity and reductions") {
  Verdict v = verify_xi_identity(12);
  check_verified(v);
  CHECK(v.range.max == 12);
}

TEST_CASE("reduction with i^(n-k) in place of (-i)^(n-k) gives 0 instead of x at n = 1") {
  const CoefExpr i = CoefExpr::i();
  MPoly sum({"x"});
  for (int k = 0; k <= 1; ++k) {
    MPoly a = hermite_classical(1 - k).substitute("x", MPoly::monomial({"x"}, {1}, i / CoefExpr(2)));
    MPoly b = hermite_classical(k).substitute("x", MPoly::monomial({"x"}, {1}, CoefExpr::rational(mpq_class(1, 2))));
    sum += pow(i, 1 - k) * (a * b);
  }
  CHECK((CoefExpr::rational(mpq_class(1, 2)) * sum).is_zero());
}

TEST_CASE("q-hermite binomial") {
  MPoly b1 = q_binomial_power("z", CoefExpr::i(), "w", 1);
  CHECK(q_hermite_binomial_rhs(1) == b1);
  check_verified(verify_q_hermite_binomial(10));
}

TEST_CASE("q-hermite binomial degenerates to the classical one at s = 1") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(specialize_s(q_hermite_binomial_rhs(n), GaussianRational(1)) == hermite_binomial_rhs(n));
  }
}

TEST_CASE("exp product") {
  // Order-2 coefficient is (1-q)/(1+q).
  TruncSeries e = q_exp_series(ExpKind::Small, 4, "x");
  TruncSeries e_neg(e.body().substitute("x", MPoly::monomial({"x"}, {1}, -1)), 4);
  CoefExpr q = CoefExpr::q();
  CHECK((e * e_neg).coeff(2) == (1 - q) / (1 + q));
  CHECK((e * e_neg).coeff(1).is_zero());
  check_verified(verify_exp_product(20, {mpq_class(1, 2), mpq_class(1, 3), mpq_class(2), mpq_class(-1, 2)}));
  CHECK_THROWS_AS(verify_exp_product(4, {mpq_class(-1)}), QError);
}

TEST_CASE("exp factorization") { check_verified(verify_exp_factorization(12)); }

TEST_CASE("double q-analytic binomial") { check_verified(verify_double_q_analytic(12)); }

TEST_CASE("q-laplacian identities") {
  Verdict v = verify_q_laplacian_identity(8, 8);
  check_verified(v);
  CHECK_THROWS_AS(verify_q_laplacian_identity(8, 4), QError);
}

TEST_CASE("exp operator helper") {
  // e_q(D_q) x^2 = x^2 + [2] x + [2]/[2]! = x^2 + [2] x + 1
  auto dq = [](const MPoly& p) { return q_derivative(p, "x"); };
  MPoly got = apply_exp_operator(MPoly::monomial({"x"}, {2}, 1), dq, 1, 1, 10);
  MPoly want = MPoly::monomial({"x"}, {2}, 1) + MPoly::monomial({"x"}, {1}, CoefExpr(q_int(2))) +
               MPoly::constant(1, {"x"});
  CHECK(got == want);
}

TEST_CASE("traveling hermite expansion") {
  check_verified(verify_traveling_hermite_expansion(8));
  check_verified(verify_traveling_hermite_expansion(8, mpq_class(3, 2)));
  // Symbolic c is carried as a polynomial variable.
  MPoly b = traveling_binomial(2, std::nullopt);
  CHECK(b.has_var("c"));
  CHECK(b.degree_in("c") == 2);
}

TEST_CASE("q-euler expansion") { check_verified(verify_q_euler_expansion(12)); }

TEST_CASE("run_verification dispatch") {
  VerifyOptions opts;
  opts.n_max = 6;
  opts.order = 8;
  auto all = run_verification("all", opts);
  REQUIRE(all.size() == identity_ids().size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    CHECK(all[k].id == identity_ids()[k]);
    check_verified(all[k]);
  }
  CHECK(run_verification("xi", opts).size() == 1);
  CHECK_THROWS_AS(run_verification("nope", opts), QError);
}
