#include "qcalc/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qcalc/error.hpp"

namespace qcalc {

namespace {

std::vector<std::string> merged_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

MPoly::MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  auto sorted = vars_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw QError(ErrorKind::InvalidArgument, "duplicate variable name");
  }
}

MPoly MPoly::constant(const CoefExpr& c, std::vector<std::string> vars) {
  MPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MPoly MPoly::variable(const std::string& name) { return monomial({name}, {1}, 1); }

MPoly MPoly::monomial(std::vector<std::string> vars, Exponents exps, const CoefExpr& c) {
  MPoly p(std::move(vars));
  if (exps.size() != p.vars_.size()) throw QError(ErrorKind::InvalidArgument, "exponent vector length mismatch");
  p.add_term(exps, c);
  return p;
}

bool MPoly::has_var(const std::string& name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

std::size_t MPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw QError(ErrorKind::InvalidArgument, "variable '" + name + "' not present");
  return static_cast<std::size_t>(it - vars_.begin());
}

int MPoly::degree_in(const std::string& name) const {
  if (!has_var(name)) return is_zero() ? -1 : 0;
  std::size_t k = var_index(name);
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
  return d;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

CoefExpr MPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? CoefExpr() : it->second;
}

CoefExpr MPoly::coeff(int n) const {
  if (vars_.size() > 1) throw QError(ErrorKind::InvalidArgument, "univariate coefficient access on multivariate polynomial");
  if (vars_.empty()) return n == 0 ? coeff(Exponents{}) : CoefExpr();
  return coeff(Exponents{n});
}

void MPoly::add_term(const Exponents& exps, const CoefExpr& c) {
  if (c.is_zero()) return;
  if (exps.size() != vars_.size()) throw QError(ErrorKind::InvalidArgument, "exponent vector length mismatch");
  for (int e : exps) {
    if (e < 0) throw QError(ErrorKind::Unsupported, "negative exponent in polynomial");
  }
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  MPoly out(vars);
  std::vector<std::size_t> pos(vars_.size());
  std::vector<bool> present(vars_.size(), false);
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    auto it = std::find(vars.begin(), vars.end(), vars_[k]);
    if (it != vars.end()) {
      pos[k] = static_cast<std::size_t>(it - vars.begin());
      present[k] = true;
    }
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!present[k]) throw QError(ErrorKind::InvalidArgument, "variable '" + vars_[k] + "' in use but dropped");
      ne[pos[k]] = e[k];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

MPoly MPoly::compacted() const {
  std::vector<std::string> used;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    bool any = std::any_of(terms_.begin(), terms_.end(), [k](const auto& t) { return t.first[k] != 0; });
    if (any) used.push_back(vars_[k]);
  }
  return with_vars(used);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.vars_ != vars_) {
    auto vars = merged_vars(vars_, o.vars_);
    *this = with_vars(vars);
    MPoly aligned = o.with_vars(vars);
    for (const auto& [e, c] : aligned.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  auto vars = merged_vars(a.vars_, b.vars_);
  MPoly x = a.with_vars(vars);
  MPoly y = b.with_vars(vars);
  MPoly out(vars);
  Exponents e(vars.size());
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const CoefExpr& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  auto vars = merged_vars(a.vars_, b.vars_);
  return a.with_vars(vars).terms_ == b.with_vars(vars).terms_;
}

MPoly MPoly::map_coefficients(const std::function<CoefExpr(const CoefExpr&)>& fn) const {
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
  return out;
}

MPoly MPoly::filter(const std::function<bool(const Exponents&)>& keep) const {
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (keep(e)) out.terms_.emplace(e, c);
  }
  return out;
}

MPoly MPoly::truncated(int max_degree) const {
  return filter([max_degree](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0) <= max_degree; });
}

MPoly MPoly::truncated_in(const std::string& var, int max_degree) const {
  if (!has_var(var)) return *this;
  std::size_t k = var_index(var);
  return filter([k, max_degree](const Exponents& e) { return e[k] <= max_degree; });
}

MPoly MPoly::substitute(const std::string& var, const MPoly& replacement) const {
  if (!has_var(var)) return *this;
  std::size_t k = var_index(var);
  std::vector<std::string> rest = vars_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));

  // Split into slices by degree in `var`.
  std::map<int, MPoly> slices;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne.erase(ne.begin() + static_cast<std::ptrdiff_t>(k));
    auto [it, inserted] = slices.try_emplace(e[k], MPoly(rest));
    it->second.add_term(ne, c);
  }

  MPoly out = MPoly(rest).with_vars(merged_vars(rest, replacement.vars_));
  MPoly power = MPoly::constant(1, out.vars_);
  int current = 0;
  for (const auto& [deg, slice] : slices) {
    while (current < deg) {
      power *= replacement;
      ++current;
    }
    out += slice * power;
  }
  return out;
}

MPoly MPoly::evaluate_at(const std::string& var, const CoefExpr& value) const {
  return substitute(var, MPoly::constant(value));
}

MPoly MPoly::renamed(const std::string& from, const std::string& to) const {
  if (from == to) return *this;
  if (has_var(to)) throw QError(ErrorKind::InvalidArgument, "variable '" + to + "' already present");
  MPoly out = *this;
  out.vars_[var_index(from)] = to;
  return out;
}

std::complex<double> MPoly::eval_numeric(double q_value, const std::vector<std::complex<double>>& point) const {
  if (point.size() != vars_.size()) throw QError(ErrorKind::InvalidArgument, "evaluation point has wrong dimension");
  std::complex<double> sum{};
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = c.eval_numeric(q_value);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] != 0) term *= std::pow(point[k], e[k]);
    }
    sum += term;
  }
  return sum;
}

std::string MPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool constant_term = std::all_of(e.begin(), e.end(), [](int d) { return d == 0; });
    bool need_star = false;
    if (constant_term || !c.is_one()) {
      os << "(" << c << ")";
      need_star = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << (need_star ? "*" : "") << vars_[k];
      need_star = true;
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

MPoly pow(const MPoly& base, unsigned exponent) {
  MPoly result = MPoly::constant(1, base.vars());
  for (unsigned k = 0; k < exponent; ++k) result *= base;
  return result;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

}  // namespace qcalc
