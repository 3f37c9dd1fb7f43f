#include "qcalc/trunc_series.hpp"

#include <algorithm>

#include "qcalc/error.hpp"

namespace qcalc {

TruncSeries::TruncSeries(MPoly body, int order) : body_(body.truncated(order)), order_(order) {
  if (order < 0) throw QError(ErrorKind::InvalidArgument, "series order must be >= 0");
}

CoefExpr TruncSeries::coeff(int n) const {
  if (n > order_) throw QError(ErrorKind::OutOfRange, "coefficient above series order requested");
  return body_.coeff(n);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  order_ = std::min(order_, o.order_);
  body_ = (body_ + o.body_).truncated(order_);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) { return *this += -o; }

TruncSeries& TruncSeries::operator*=(const CoefExpr& c) {
  body_ *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  int order = std::min(a.order_, b.order_);
  // Products of in-range monomials above `order` are discarded, so truncate first.
  MPoly x = a.body_.truncated(order);
  MPoly y = b.body_.truncated(order);
  std::vector<std::string> vars = x.vars();
  for (const auto& v : y.vars()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  x = x.with_vars(vars);
  y = y.with_vars(vars);
  MPoly out(vars);
  for (const auto& [ea, ca] : x.terms()) {
    int da = 0;
    for (int e : ea) da += e;
    for (const auto& [eb, cb] : y.terms()) {
      int db = 0;
      for (int e : eb) db += e;
      if (da + db > order) continue;
      Exponents e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return {out, order};
}

TruncSeries TruncSeries::truncated(int order) const {
  if (order > order_) throw QError(ErrorKind::InvalidArgument, "cannot raise series order");
  return {body_, order};
}

bool TruncSeries::agrees_with(const TruncSeries& o, int degree) const {
  if (degree > std::min(order_, o.order_)) {
    throw QError(ErrorKind::InvalidArgument, "comparison degree exceeds series order");
  }
  return body_.truncated(degree) == o.body_.truncated(degree);
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
  return os << s.body() << " + O(deg " << s.order() + 1 << ")";
}

}  // namespace qcalc
