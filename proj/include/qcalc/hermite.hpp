#pragma once

#include <deque>
#include <mutex>
#include <string>

#include "qcalc/coef_expr.hpp"
#include "qcalc/mpoly.hpp"

namespace qcalc {

enum class HermiteKind {
  Classical,  ///< H_n(x), leading coefficient 2^n
  Q,          ///< H_n(x;q), leading coefficient [2]_q^n
  InverseQ,   ///< H_n(x;1/q)
};

/// Degree-indexed cache of one Hermite family. Entries are built on demand and
/// never change afterwards; concurrent readers are safe.
class HermiteFamily {
 public:
  explicit HermiteFamily(HermiteKind kind) : kind_(kind) {}

  HermiteKind kind() const { return kind_; }
  /// H_n in the variable `var`.
  MPoly get(int n, const std::string& var = "x");

 private:
  MPoly build(int n) const;

  HermiteKind kind_;
  std::mutex mutex_;
  std::deque<MPoly> cache_;
};

/// H_n(x) from H_{n+1} = 2x H_n - 2n H_{n-1}.
MPoly hermite_classical(int n, const std::string& var = "x");

/// H_n(x;q) = [n]! sum_{k <= n/2} (-1)^k [2]^(n-2k) x^(n-2k) / ([k]! [n-2k]!),
/// the t^n/[n]! coefficient of e_q(-t^2) e_q([2] t x).
MPoly q_hermite(int n, const std::string& var = "x");

/// H_k(x;1/q): q_hermite with q -> 1/q in every coefficient.
MPoly q_hermite_inverse(int k, const std::string& var = "x");

/// H_k(q w; 1/q).
MPoly q_hermite_dual(int k, const std::string& var = "w");

/// H_n(0;q).
CoefExpr q_hermite_special_value(int n);

}  // namespace qcalc
