#include <cmath>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "qcalc/error.hpp"
#include "qcalc/poly_ops.hpp"
#include "qcalc/q_core.hpp"
#include "qcalc/qwave.hpp"

using namespace qcalc;

namespace {

const CoefExpr q = CoefExpr::q();
const CoefExpr two = CoefExpr(q_int(2));

MPoly xt(int i, int j, const CoefExpr& coef) { return MPoly::monomial({"x", "t"}, {i, j}, coef); }
MPoly xtc(int i, int j, int k, const CoefExpr& coef) { return MPoly::monomial({"x", "t", "c"}, {i, j, k}, coef); }

MPoly x_poly(std::initializer_list<long> coeffs) {
  MPoly p({"x"});
  int d = 0;
  for (long v : coeffs) p.add_term({d++}, v);
  return p;
}

// Classical D'Alembert: 1/2 [f(x+ct) + f(x-ct)] + 1/(2c) [G(x+ct) - G(x-ct)], G' = g, all at q = 1.
MPoly classical_dalembert(const MPoly& f, const MPoly& g, const CoefExpr& c) {
  MPoly big_g({"x"});
  for (const auto& [e, coef] : g.terms()) big_g.add_term({e[0] + 1}, coef / CoefExpr(static_cast<long>(e[0] + 1)));
  auto shifted = [&](const MPoly& p, int sign) {
    return p.substitute("x", MPoly::variable("x") + xt(0, 1, sign * c));
  };
  CoefExpr half = CoefExpr::rational(mpq_class(1, 2));
  return half * (shifted(f, 1) + shifted(f, -1)) + (half / c) * (shifted(big_g, 1) - shifted(big_g, -1));
}

}  // namespace

TEST_CASE("q_binomial_substitute") {
  Speed c = Speed::symbolic();
  MPoly got = q_binomial_substitute(x_poly({0, 0, 1}), -1, c);
  CHECK(got == xtc(2, 0, 0, 1) - xtc(1, 1, 1, two) + xtc(0, 2, 2, q));
  CHECK(q_binomial_substitute(MPoly::constant(5, {"x"}), 1, c) == MPoly::constant(5, {"x"}));
  CHECK(got == traveling_power(2, -1, c));

  MPoly cos6 = named_profile("cos_q", 6);
  MPoly expected({"x"});
  for (int m = 0; 2 * m <= 6; ++m) {
    CoefExpr a = CoefExpr(m % 2 == 0 ? 1 : -1) / CoefExpr(q_factorial(2 * m));
    expected += a * traveling_power(2 * m, 1, c);
  }
  CHECK(q_binomial_substitute(cos6, 1, c) == expected);
}

TEST_CASE("qwave_operator") {
  Speed c = Speed::symbolic();
  CHECK(qwave_operator(traveling_power(2, -1, c), c).is_zero());
  CHECK(qwave_operator(xtc(2, 0, 0, 1) + xtc(0, 2, 2, q), c).is_zero());
  CHECK(qwave_operator(xt(1, 1, 1), c).is_zero());
  CHECK(!qwave_operator(xt(2, 0, 1), c).is_zero());
}

TEST_CASE("one-directional operators") {
  Speed c = Speed::symbolic();
  CHECK(one_directional_residual(2, -1, 1, c).is_zero());
  CHECK(one_directional_residual(0, 1, 1, c).is_zero());
  CHECK(one_directional_residual(0, 1, -1, c).is_zero());
  MPoly mismatched = one_directional_residual(1, 1, 1, c);
  CHECK(mismatched == MPoly::monomial({"c"}, {1}, 2));
  for (int n = 1; n <= 6; ++n) CHECK(!one_directional_residual(n, -1, -1, c).is_zero());
  CHECK(one_directional_check(10, 1).verified());
  CHECK(one_directional_check(10, -1, Speed::exact(CoefExpr::rational(mpq_class(-3, 7)))).verified());
}

TEST_CASE("dalembert: f = x^2, g = 0") {
  Speed c = Speed::symbolic();
  WaveSolution u = dalembert_solve({x_poly({0, 0, 1}), MPoly({"x"}), {}, {}}, c);
  CHECK(u.body == xtc(2, 0, 0, 1) + xtc(0, 2, 2, q));
  CHECK(u.provenance == Provenance::Dalembert);
  CHECK(!u.order);

  Speed one = Speed::exact(1);
  CHECK(dalembert_solve({x_poly({0, 0, 1}), MPoly({"x"}), {}, {}}, one).body == xt(2, 0, 1) + xt(0, 2, q));
}

TEST_CASE("dalembert: f = x^2, g = -[2] c x") {
  Speed c = Speed::symbolic();
  MPoly g = MPoly::monomial({"x", "c"}, {1, 1}, -two);
  WaveSolution u = dalembert_solve({x_poly({0, 0, 1}), g, {}, {}}, c);
  CHECK(u.body == traveling_power(2, -1, c));

  CoefExpr c_val = CoefExpr::rational(mpq_class(5, 3));
  WaveSolution v = dalembert_solve({x_poly({0, 0, 1}), MPoly::monomial({"x"}, {1}, -two * c_val), {}, {}},
                                   Speed::exact(c_val));
  CHECK(v.body == traveling_power(2, -1, Speed::exact(c_val)));
}

TEST_CASE("dalembert: cos_q and sin_q data") {
  const int order = 16;
  Speed c = Speed::symbolic();
  InitialData data{named_profile("cos_q", order), named_profile("sin_q", order), order, order};
  WaveSolution u = dalembert_solve(data, c);
  CHECK(u.order == order);
  // 2c u = (c + 1) cos_q(x-ct)_q + (c - 1) cos_q(x+ct)_q
  MPoly c_poly = MPoly::variable("c");
  MPoly cos_minus = named_wave("cos_q", -1, c, order).body;
  MPoly cos_plus = named_wave("cos_q", 1, c, order).body;
  MPoly expected = (c_poly + MPoly::constant(1)) * cos_minus + (c_poly - MPoly::constant(1)) * cos_plus;
  MPoly diff = MPoly::constant(2) * c_poly * u.body - expected;
  CHECK(truncated_xt(diff, order - 2).is_zero());
  CHECK(diff.is_zero());
}

TEST_CASE("dalembert: errors") {
  CHECK_THROWS_AS(Speed::exact(0), QError);
  CHECK_THROWS_AS(dalembert_solve({MPoly::variable("y"), MPoly({"x"}), {}, {}}, Speed::symbolic()), QError);
  CHECK_THROWS_AS(dalembert_solve({MPoly::monomial({"x", "c"}, {1, 1}, 1), MPoly({"x"}), {}, {}}, Speed::exact(2)),
                  QError);
}

TEST_CASE("zero initial velocity gives the average of the two traveling profiles") {
  Speed c = Speed::symbolic();
  MPoly f = x_poly({3, -1, 4, 1, -5, 9});
  WaveSolution u = dalembert_solve({f, MPoly({"x"}), {}, {}}, c);
  CHECK(u.body == CoefExpr::rational(mpq_class(1, 2)) * (q_binomial_substitute(f, 1, c) + q_binomial_substitute(f, -1, c)));
}

TEST_CASE("random polynomial initial value problems") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 40; ++trial) {
    MPoly f = testing::random_rational_poly(rng, 8, "x");
    MPoly g = testing::random_rational_poly(rng, 8, "x");
    mpq_class c_val = testing::random_rational(rng);
    if (c_val == 0) c_val = 1;
    WaveSolution u = dalembert_solve({f, g, {}, {}}, Speed::exact(CoefExpr::rational(c_val)));
    CHECK(u.body.evaluate_at("t", 0) == f);
    CHECK(q_derivative(u.body, "t", QDirection::InverseQ).evaluate_at("t", 0) == g);
    CHECK(qwave_residual(u).is_zero());
  }
}

TEST_CASE("s = 1 gives the classical D'Alembert solution") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    MPoly f = testing::random_rational_poly(rng, 6, "x");
    MPoly g = testing::random_rational_poly(rng, 6, "x");
    CoefExpr c_val = CoefExpr::rational(mpq_class(trial + 1, 3));
    WaveSolution u = dalembert_solve({f, g, {}, {}}, Speed::exact(c_val));
    CHECK(specialize_s(u.body, GaussianRational(1)) == classical_dalembert(f, g, c_val));
  }
}

TEST_CASE("named waves") {
  Speed c = Speed::symbolic();
  MPoly gauss = named_profile("q-gaussian", 4);
  CHECK(gauss == x_poly({1, 0, -1, 0}) + MPoly::monomial({"x"}, {4}, CoefExpr::rational(mpq_class(1, 2))));
  WaveSolution w = named_wave("q-gaussian", -1, c, 4);
  CHECK(w.body.evaluate_at("t", 0) == gauss);
  CHECK(w.provenance == Provenance::NamedSeries);
  MPoly second = w.body.filter([&](const Exponents& e) { return xt_degree(w.body, e) == 2; });
  CHECK(second == -traveling_power(2, -1, c));

  MPoly cos4 = named_wave("cos_q", 1, c, 4).body;
  MPoly expected = MPoly::constant(1) - CoefExpr(q_factorial(2)).inverse() * traveling_power(2, 1, c) +
                   CoefExpr(q_factorial(4)).inverse() * traveling_power(4, 1, c);
  CHECK(cos4 == expected);
  // Each truncated named wave satisfies the wave equation up to its degree headroom.
  for (const char* name : {"q-gaussian", "cos_q", "sin_q"}) CHECK(qwave_residual(named_wave(name, -1, c, 10)).is_zero());
  CHECK_THROWS_AS(named_profile("tan_q", 4), QError);
}

TEST_CASE("zeros of (x - ct)_q^n sit at q^k c t and do not translate") {
  for (int n = 3; n <= 5; ++n) {
    MPoly b = traveling_power(n, -1, Speed::symbolic());
    for (int k = 0; k < n; ++k) {
      // x = q^k c t is a root for every c and t.
      MPoly at = b.substitute("x", MPoly::monomial({"t", "c"}, {1, 1}, CoefExpr(LaurentPoly::q_power(k))));
      CHECK(at.is_zero());
    }
    // Gaps between consecutive zeros are (q^(k+1) - q^k) c t: they scale with t, so for q != 1
    // the zero set at t = 2 is not a translate of the one at t = 1.
    for (int k = 0; k + 1 < n; ++k) {
      CoefExpr gap = CoefExpr(LaurentPoly::q_power(k + 1)) - CoefExpr(LaurentPoly::q_power(k));
      CoefExpr gap_t1 = gap;
      CoefExpr gap_t2 = CoefExpr(2) * gap;
      CHECK(!(gap_t1 == gap_t2));
      CHECK((gap_t2 - gap_t1).eval(mpq_class(2)) != GaussianRational(0));
    }
  }
}

TEST_CASE("grid parsing") {
  GridRange g = parse_grid(" -2:2:0.5");
  CHECK(g.points().size() == 9);
  CHECK(g.points().front() == -2.0);
  CHECK(g.points().back() == doctest::Approx(2.0));
  CHECK(parse_grid("0:1:0.1").points().size() == 11);
  CHECK_THROWS_AS(parse_grid("0:1"), QError);
  CHECK_THROWS_AS(parse_grid("0:1:0"), QError);
  CHECK_THROWS_AS(parse_grid("a:1:0.1"), QError);
  CHECK_THROWS_AS(parse_grid("1:0:0.1"), QError);
}

TEST_CASE("sampling (x - ct)_q^2 at q = 2, c = 1") {
  WaveSolution u = traveling_wave(2, -1, Speed::symbolic());
  for (double t : {1.0, 2.0}) {
    auto rows = sample_grid(u, 2.0, 1.0, parse_grid("-1:6:0.01"), {t, t, 1.0});
    std::vector<double> xs, us;
    for (const auto& r : rows) {
      xs.push_back(r.x);
      us.push_back(r.u);
      CHECK(r.valid);
    }
    auto brackets = sign_change_brackets(xs, us);
    REQUIRE(brackets.size() == 2);
    CHECK(brackets[0].first <= t + 1e-9);
    CHECK(brackets[0].second >= t - 1e-9);
    CHECK(brackets[0].second - brackets[0].first <= 0.01 + 1e-9);
    CHECK(brackets[1].first <= 2 * t + 1e-9);
    CHECK(brackets[1].second >= 2 * t - 1e-9);
    double area = trapezoid(xs, us, brackets[0].first, brackets[1].second);
    CHECK(std::abs(area + std::pow(t, 3) / 6) < 1e-3);
  }
}

TEST_CASE("sampling: t = 0 row reproduces f, row order and validity") {
  Speed c = Speed::symbolic();
  WaveSolution u = dalembert_solve({x_poly({1, 2, 3}), x_poly({0, 1}), {}, {}}, c);
  auto rows = sample_grid(u, 0.5, 1.5, parse_grid("-1:1:0.5"), parse_grid("0:1:0.5"));
  REQUIRE(rows.size() == 15);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].x == doctest::Approx(-1.0 + 0.5 * static_cast<double>(k / 3)));
    CHECK(rows[k].t == doctest::Approx(0.5 * static_cast<double>(k % 3)));
    if (rows[k].t == 0.0) CHECK(rows[k].u == doctest::Approx(1 + 2 * rows[k].x + 3 * rows[k].x * rows[k].x));
  }
  CHECK_THROWS_AS(sample_grid(u, 0.0, 1.0, parse_grid("0:1:1"), parse_grid("0:1:1")), QError);

  WaveSolution series = named_wave("q-gaussian", -1, c, 6);
  auto near = sample_grid(series, 0.5, 1.0, parse_grid("0:0:1"), parse_grid("0:0:1"));
  CHECK(near[0].valid);
  auto far = sample_grid(series, 0.5, 1.0, parse_grid("3:3:1"), parse_grid("0:0:1"));
  CHECK(!far[0].valid);

  std::string csv = to_csv(rows);
  CHECK(csv.rfind("x,t,u,valid\n-1,0,", 0) == 0);
}
