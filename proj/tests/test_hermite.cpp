#include <thread>
#include <vector>

#include "doctest.h"
#include "qcalc/error.hpp"
#include "qcalc/hermite.hpp"
#include "qcalc/poly_ops.hpp"
#include "qcalc/q_core.hpp"

using namespace qcalc;

namespace {

const CoefExpr q = CoefExpr::q();
const CoefExpr two = CoefExpr(q_int(2));
const CoefExpr three = CoefExpr(q_int(3));
const CoefExpr four = CoefExpr(q_int(4));

MPoly x_pow(int n, const CoefExpr& c = 1, const std::string& var = "x") { return MPoly::monomial({var}, {n}, c); }

MPoly negate_var(const MPoly& p, const std::string& var = "x") {
  return p.substitute(var, x_pow(1, -1, var));
}

// H_{n+1} = [2] x H_n - [n] H_{n-1}(q x) - [n] q^((n+1)/2) H_{n-1}(sqrt(q) x), from H_0 and H_1.
std::vector<MPoly> hermite_by_sqrt_q_recurrence(int n_max) {
  std::vector<MPoly> h{MPoly::constant(1, {"x"}), x_pow(1, two)};
  for (int n = 1; n + 1 <= n_max; ++n) {
    CoefExpr qn(q_int(n));
    const MPoly& prev = h[static_cast<std::size_t>(n) - 1];
    MPoly next = x_pow(1, two) * h[static_cast<std::size_t>(n)] - qn * scale_substitute(prev, "x", 2) -
                 qn * CoefExpr(LaurentPoly::s_power(n + 1)) * scale_substitute(prev, "x", 1);
    h.push_back(next);
  }
  return h;
}

}  // namespace

TEST_CASE("hermite_classical") {
  CHECK(hermite_classical(0) == MPoly::constant(1, {"x"}));
  CHECK(hermite_classical(1) == x_pow(1, 2));
  CHECK(hermite_classical(3) == x_pow(3, 8) - x_pow(1, 12));
  MPoly at = hermite_classical(2).substitute("x", MPoly::monomial({"xi"}, {1}, CoefExpr::i() / CoefExpr(2)));
  CHECK(at == -x_pow(2, 1, "xi") - MPoly::constant(2, {"xi"}));
  CHECK_THROWS_AS(hermite_classical(-1), QError);
}

TEST_CASE("q_hermite matches the printed low-degree polynomials") {
  CHECK(q_hermite(0) == MPoly::constant(1, {"x"}));
  CHECK(q_hermite(1) == x_pow(1, two));
  CHECK(q_hermite(2) == x_pow(2, two * two) - MPoly::constant(two, {"x"}));
  CHECK(q_hermite(3) == x_pow(3, pow(two, 3)) - x_pow(1, two * two * three));
  CoefExpr two_q2(q_int(2, 2));
  CHECK(q_hermite(4) == x_pow(4, pow(two, 4)) - x_pow(2, two * two * three * four) +
                            MPoly::constant(two * three * two_q2, {"x"}));
  // Stored coefficients are Laurent polynomials.
  MPoly h9 = q_hermite(9);
  for (const auto& [e, c] : h9.terms()) CHECK(c.is_laurent());
}

TEST_CASE("q_hermite_dual") {
  CHECK(q_hermite_dual(0) == MPoly::constant(1, {"w"}));
  CHECK(q_hermite_dual(1) == x_pow(1, 1 + q, "w"));
  CHECK(q_hermite_dual(2) == x_pow(2, (1 + q) * (1 + q), "w") - MPoly::constant((1 + q) / q, {"w"}));
}

TEST_CASE("q_hermite_special_values") {
  CHECK(q_hermite_special_value(2) == -(1 + q));
  CHECK(q_hermite_special_value(3).is_zero());
  CHECK(q_hermite_special_value(4) == two * three * CoefExpr(q_int(2, 2)));
  CHECK(CoefExpr(q_int(4)) == two * CoefExpr(q_int(2, 2)));
  for (int n = 0; n <= 5; ++n) {
    CoefExpr expected = CoefExpr(q_factorial(2 * n)) / CoefExpr(q_factorial(n));
    if (n % 2 == 1) expected = -expected;
    CHECK(q_hermite_special_value(2 * n) == expected);
    CHECK(q_hermite_special_value(2 * n + 1).is_zero());
  }
}

TEST_CASE("degree, leading coefficient and parity") {
  for (int n = 0; n <= 10; ++n) {
    MPoly h = q_hermite(n);
    CHECK(h.degree_in("x") == n);
    CHECK(h.coeff(n) == pow(two, n));
    CHECK(hermite_classical(n).coeff(n) == CoefExpr(1L << n));
    CoefExpr sign = n % 2 == 0 ? 1 : -1;
    CHECK(negate_var(h) == sign * h);
    CHECK(negate_var(hermite_classical(n)) == sign * hermite_classical(n));
  }
}

TEST_CASE("D_q recurrence") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(q_derivative(q_hermite(n), "x") == two * CoefExpr(q_int(n)) * q_hermite(n - 1));
  }
}

TEST_CASE("sqrt(q) recurrence reproduces the closed form") {
  auto h = hermite_by_sqrt_q_recurrence(10);
  for (int n = 0; n <= 10; ++n) {
    CHECK(h[static_cast<std::size_t>(n)] == q_hermite(n));
    // Half-integer powers of s cancel.
    for (const auto& [e, c] : h[static_cast<std::size_t>(n)].terms()) CHECK(!c.to_laurent().has_odd_exponent());
  }
}

TEST_CASE("q -> 1 limit") {
  for (int n = 0; n <= 10; ++n) CHECK(specialize_s(q_hermite(n), GaussianRational(1)) == hermite_classical(n));
}

TEST_CASE("inverse-q family") {
  for (int n = 0; n <= 6; ++n) {
    MPoly inv = q_hermite_inverse(n);
    CHECK(inv.coeff(n) == pow(CoefExpr(q_int(2, -1)), n));
    CHECK(inv.map_coefficients([](const CoefExpr& c) { return c.substitute_inverse_q(); }) == q_hermite(n));
  }
}

TEST_CASE("generating function e_q(-t^2) e_q([2] t x)") {
  const int order = 10;
  MPoly left({"t", "x"});
  for (int k = 0; 2 * k <= order; ++k) {
    left.add_term({2 * k, 0}, CoefExpr(k % 2 == 0 ? 1 : -1) / CoefExpr(q_factorial(k)));
  }
  MPoly right({"t", "x"});
  for (int m = 0; m <= order; ++m) right.add_term({m, m}, pow(two, m) / CoefExpr(q_factorial(m)));
  MPoly product = (left * right).truncated_in("t", order);
  for (int n = 0; n <= order; ++n) {
    MPoly slice({"x"});
    for (const auto& [e, c] : product.terms()) {
      if (e[0] == n) slice.add_term({e[1]}, c);
    }
    CHECK(slice == q_hermite(n) * CoefExpr(q_factorial(n)).inverse());
  }
}

TEST_CASE("concurrent cache access") {
  std::vector<std::thread> workers;
  std::vector<MPoly> results(8);
  for (int k = 0; k < 8; ++k) {
    workers.emplace_back([k, &results] { results[static_cast<std::size_t>(k)] = q_hermite(12 - k % 3); });
  }
  for (auto& t : workers) t.join();
  for (int k = 0; k < 8; ++k) CHECK(results[static_cast<std::size_t>(k)] == q_hermite(12 - k % 3));
}
