#include "qcalc/q_core.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "qcalc/error.hpp"

namespace qcalc {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) {
    throw QError(ErrorKind::Unsupported, std::string(what) + " of a negative integer is not supported");
  }
}

LaurentPoly apply_base(const LaurentPoly& p, int base) {
  if (base == 0) throw QError(ErrorKind::InvalidArgument, "q-number base exponent must be nonzero");
  return base == 1 ? p : p.stretch(base);
}

}  // namespace

LaurentPoly q_int(int n, int base) {
  require_nonnegative(n, "q-integer");
  LaurentPoly p;
  for (int j = 0; j < n; ++j) p += LaurentPoly::q_power(j);
  return apply_base(p, base);
}

LaurentPoly q_factorial(int n, int base) {
  require_nonnegative(n, "q-factorial");
  LaurentPoly p(1);
  for (int j = 2; j <= n; ++j) p *= q_int(j);
  return apply_base(p, base);
}

LaurentPoly gauss_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw QError(ErrorKind::OutOfRange, "Gaussian binomial needs 0 <= k <= n, got n=" + std::to_string(n) +
                                            ", k=" + std::to_string(k));
  }
  static std::mutex mutex;
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  // Pascal row by row: [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<LaurentPoly> row{LaurentPoly(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<LaurentPoly> next(static_cast<std::size_t>(m) + 1);
    next[0] = LaurentPoly(1);
    next[static_cast<std::size_t>(m)] = LaurentPoly(1);
    for (int j = 1; j < m; ++j) {
      next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j) - 1] +
                                          row[static_cast<std::size_t>(j)].shifted(2 * j);
    }
    row = std::move(next);
  }
  std::lock_guard lock(mutex);
  for (int j = 0; j <= n; ++j) cache.emplace(std::make_pair(n, j), row[static_cast<std::size_t>(j)]);
  return row[static_cast<std::size_t>(k)];
}

TruncSeries q_exp_series(ExpKind kind, int order, const std::string& var, int base) {
  if (order < 0) throw QError(ErrorKind::InvalidArgument, "series order must be >= 0");
  MPoly body({var});
  for (int n = 0; n <= order; ++n) {
    LaurentPoly num = kind == ExpKind::Big ? LaurentPoly::q_power(n * (n - 1) / 2) : LaurentPoly(1);
    body.add_term({n}, CoefExpr(apply_base(num, base), q_factorial(n, base)));
  }
  return {body, order};
}

TruncSeries q_trig_series(TrigKind kind, int order, const std::string& var) {
  if (order < 0) throw QError(ErrorKind::InvalidArgument, "series order must be >= 0");
  MPoly body({var});
  int first = kind == TrigKind::Cos ? 0 : 1;
  for (int n = first, m = 0; n <= order; n += 2, ++m) {
    long sign = m % 2 == 0 ? 1 : -1;
    body.add_term({n}, CoefExpr(LaurentPoly(sign), q_factorial(n)));
  }
  return {body, order};
}

CoefExpr q_euler_number(int order) {
  if (order < 0) throw QError(ErrorKind::InvalidArgument, "order must be >= 0");
  CoefExpr sum;
  for (int n = 0; n <= order; ++n) sum += CoefExpr(LaurentPoly(1), q_factorial(n));
  return sum;
}

}  // namespace qcalc
