#include "qcalc/hermite.hpp"

#include "qcalc/error.hpp"
#include "qcalc/poly_ops.hpp"
#include "qcalc/q_core.hpp"

namespace qcalc {

namespace {

void require_degree(int n) {
  if (n < 0) throw QError(ErrorKind::Unsupported, "Hermite polynomial of negative degree");
}

HermiteFamily& family(HermiteKind kind) {
  static HermiteFamily classical(HermiteKind::Classical);
  static HermiteFamily q_kind(HermiteKind::Q);
  static HermiteFamily inverse(HermiteKind::InverseQ);
  switch (kind) {
    case HermiteKind::Classical:
      return classical;
    case HermiteKind::Q:
      return q_kind;
    case HermiteKind::InverseQ:
      return inverse;
  }
  throw QError(ErrorKind::Internal, "unknown Hermite kind");
}

}  // namespace

MPoly HermiteFamily::get(int n, const std::string& var) {
  require_degree(n);
  std::lock_guard lock(mutex_);
  while (static_cast<int>(cache_.size()) <= n) cache_.push_back(build(static_cast<int>(cache_.size())));
  return cache_[static_cast<std::size_t>(n)].renamed("x", var);
}

MPoly HermiteFamily::build(int n) const {
  MPoly out({"x"});
  switch (kind_) {
    case HermiteKind::Classical: {
      if (n == 0) return MPoly::constant(1, {"x"});
      if (n == 1) return MPoly::monomial({"x"}, {1}, 2);
      // cache_ already holds n-1 and n-2 (built in order under the lock).
      const MPoly& prev = cache_[static_cast<std::size_t>(n) - 1];
      const MPoly& prev2 = cache_[static_cast<std::size_t>(n) - 2];
      return MPoly::monomial({"x"}, {1}, 2) * prev - CoefExpr(2L * (n - 1)) * prev2;
    }
    case HermiteKind::Q: {
      CoefExpr two(q_int(2));
      CoefExpr n_fact(q_factorial(n));
      for (int k = 0; 2 * k <= n; ++k) {
        int m = n - 2 * k;
        CoefExpr c = n_fact * pow(two, m) / CoefExpr(q_factorial(k) * q_factorial(m));
        if (k % 2 == 1) c = -c;
        // The quotient is a polynomial in q; store it as one.
        out.add_term({m}, CoefExpr(c.to_laurent()));
      }
      return out;
    }
    case HermiteKind::InverseQ:
      return family(HermiteKind::Q).get(n).map_coefficients([](const CoefExpr& c) { return c.substitute_inverse_q(); });
  }
  throw QError(ErrorKind::Internal, "unknown Hermite kind");
}

MPoly hermite_classical(int n, const std::string& var) { return family(HermiteKind::Classical).get(n, var); }

MPoly q_hermite(int n, const std::string& var) { return family(HermiteKind::Q).get(n, var); }

MPoly q_hermite_inverse(int k, const std::string& var) { return family(HermiteKind::InverseQ).get(k, var); }

MPoly q_hermite_dual(int k, const std::string& var) {
  return scale_substitute(q_hermite_inverse(k, var), var, 2);
}

CoefExpr q_hermite_special_value(int n) { return q_hermite(n).coeff(0); }

}  // namespace qcalc
