#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcalc/mpoly.hpp"
#include "qcalc/trunc_series.hpp"

namespace qcalc {

enum class VerdictStatus { Verified, Failed };

struct ParamRange {
  std::string param;  ///< "n" or "order"
  int min = 0;
  int max = 0;
};

/// Outcome of one exhaustive identity check. `residual` holds LHS - RHS at the
/// first failing parameter value and is absent when the identity holds.
struct Verdict {
  std::string id;
  ParamRange range;
  VerdictStatus status = VerdictStatus::Verified;
  std::optional<int> failing_value;
  std::optional<std::string> failing_form;
  std::optional<MPoly> residual;
  double elapsed_ms = 0.0;

  bool verified() const { return status == VerdictStatus::Verified; }
};

// Sides of the identities, exposed for cross-layer checks.

/// 2^-n sum_k C(n,k) i^k H_{n-k}(z) H_k(w).
MPoly hermite_binomial_rhs(int n);
/// [2]^-n sum_k [n,k] i^k q^(k(k-1)/2) H_{n-k}(z;q) H_k(qw;1/q).
MPoly q_hermite_binomial_rhs(int n);
/// (x + c t)_q^n with c rational, or with c as the polynomial variable "c" when absent.
MPoly traveling_binomial(int n, const std::optional<mpq_class>& c, int sign = 1);
/// [2]^-n sum_k [n,k] i^k q^(k(k-1)/2) H_{n-k}(x;q) H_k(-iqct;1/q).
MPoly traveling_hermite_rhs(int n, const std::optional<mpq_class>& c);

/// sum_{m <= order} coef^m / [m]_{q^base}! op^m(p).
MPoly apply_exp_operator(const MPoly& p, const std::function<MPoly(const MPoly&)>& op, const CoefExpr& coef,
                         int base, int order);

Verdict verify_hermite_binomial(int n_max);
/// The xi-identity and its three reductions (xi -> -2iz, xi = x, xi = iy).
Verdict verify_xi_identity(int n_max);
Verdict verify_q_hermite_binomial(int n_max);
/// e_q(x) e_q(-x) = e_{q^2}((1-q)/(1+q) x^2) to x-order `order`, symbolically and at each q sample.
Verdict verify_exp_product(int order, const std::vector<mpq_class>& q_samples = {});
/// e_q(x) e_{1/q}(y) = sum (x+y)_q^n/[n]! and e_q(-t^2) e_{1/q}(t^2) = 1 to total order `order`.
Verdict verify_exp_factorization(int order);
Verdict verify_double_q_analytic(int n_max);
/// Nested q-Laplacians, the exponential q-Laplacian operator (plain and factorized) and
/// H_n(x;q) = [2]^n e_q(-(D_q)^2/[2]^2) x^n, for n <= n_max.
Verdict verify_q_laplacian_identity(int n_max, int order);
Verdict verify_traveling_hermite_expansion(int n_max, const std::optional<mpq_class>& c = std::nullopt);
/// e_q(1) e_q(-1) = sum H_n(1/[2];q)/[n]!, both sides graded by t in e_q(-t^2) e_q(t).
Verdict verify_q_euler_expansion(int order);

/// Identity ids accepted by `run_verification`, sorted.
const std::vector<std::string>& identity_ids();

struct VerifyOptions {
  int n_max = 10;
  int order = 20;
  std::vector<mpq_class> q_samples;
  std::optional<mpq_class> c;
};

/// Runs one identity by id, or every identity for "all" (concurrently; results sorted by id).
/// Throws InvalidArgument for an unknown id.
std::vector<Verdict> run_verification(const std::string& id, const VerifyOptions& options);

}  // namespace qcalc
