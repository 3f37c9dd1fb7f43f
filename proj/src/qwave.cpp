#include "qcalc/qwave.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <map>
#include <sstream>
#include <thread>

#include "qcalc/error.hpp"
#include "qcalc/poly_ops.hpp"
#include "qcalc/q_core.hpp"

namespace qcalc {

namespace {

const std::string kX = "x";
const std::string kT = "t";
const std::string kC = "c";

int exponent_of(const MPoly& p, const Exponents& e, const std::string& var) {
  return p.has_var(var) ? e[p.var_index(var)] : 0;
}

void require_data_vars(const MPoly& p, const char* what) {
  for (const auto& v : p.vars()) {
    if (v != kX && v != kC) throw QError(ErrorKind::InvalidArgument, std::string(what) + " must be a polynomial in x");
  }
}

MPoly t_derivative_at_zero(const MPoly& u) {
  return q_derivative(u, kT, QDirection::InverseQ).evaluate_at(kT, 0);
}

}  // namespace

Speed Speed::exact(const CoefExpr& c) {
  if (c.is_zero()) throw QError(ErrorKind::InvalidArgument, "wave speed c must be nonzero");
  Speed s;
  s.value_ = c;
  return s;
}

MPoly Speed::as_poly() const {
  if (value_) return MPoly::constant(*value_);
  return MPoly::variable(kC);
}

MPoly Speed::divide(const MPoly& p) const {
  if (value_) return p * value_->inverse();
  if (p.is_zero()) return p;
  if (!p.has_var(kC)) throw QError(ErrorKind::Internal, "polynomial is not divisible by c");
  std::size_t k = p.var_index(kC);
  MPoly out(p.vars());
  for (const auto& [e, coef] : p.terms()) {
    if (e[k] == 0) throw QError(ErrorKind::Internal, "polynomial is not divisible by c");
    Exponents lowered = e;
    --lowered[k];
    out.add_term(lowered, coef);
  }
  return out;
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Dalembert:
      return "dalembert";
    case Provenance::DirectBinomial:
      return "direct-binomial";
    case Provenance::NamedSeries:
      return "named-series";
  }
  throw QError(ErrorKind::Internal, "unknown provenance");
}

Provenance provenance_from_name(const std::string& name) {
  for (auto p : {Provenance::Dalembert, Provenance::DirectBinomial, Provenance::NamedSeries}) {
    if (provenance_name(p) == name) return p;
  }
  throw QError(ErrorKind::Parse, "unknown provenance '" + name + "'");
}

int xt_degree(const MPoly& p, const Exponents& e) { return exponent_of(p, e, kX) + exponent_of(p, e, kT); }

MPoly truncated_xt(const MPoly& p, int max_degree) {
  return p.filter([&](const Exponents& e) { return xt_degree(p, e) <= max_degree; });
}

MPoly traveling_power(int n, int sign, const Speed& c) {
  CoefExpr s = sign >= 0 ? 1 : -1;
  if (c.value()) return q_binomial_power(kX, s * *c.value(), kT, n);
  return q_binomial_power(kX, s, kT, n).substitute(kT, MPoly::monomial({kT, kC}, {1, 1}, 1));
}

MPoly q_binomial_substitute(const MPoly& p, int sign, const Speed& c) {
  if (!p.has_var(kX)) return p;
  std::size_t k = p.var_index(kX);
  // Group by x-degree: p = sum_n a_n x^n with a_n free of x.
  std::map<int, MPoly> slices;
  for (const auto& [e, coef] : p.terms()) {
    Exponents rest = e;
    rest[k] = 0;
    auto [it, inserted] = slices.try_emplace(e[k], MPoly(p.vars()));
    it->second.add_term(rest, coef);
  }
  CoefExpr step = sign >= 0 ? 1 : -1;
  MPoly ct = c.value() ? MPoly::monomial({kT}, {1}, *c.value()) : MPoly::monomial({kT, kC}, {1, 1}, 1);
  ct *= step;

  MPoly out(p.vars());
  MPoly power = MPoly::constant(1, {kX});
  int current = 0;
  for (const auto& [deg, slice] : slices) {
    while (current < deg) {
      // (x + ct)_q^(m+1) = (x + ct)_q^m (x + q^m ct)
      power *= MPoly::variable(kX) + ct * CoefExpr(LaurentPoly::q_power(current));
      ++current;
    }
    out += slice * power;
  }
  return out;
}

MPoly qwave_operator(const MPoly& u, const Speed& c) {
  MPoly tt = q_derivative(q_derivative(u, kT, QDirection::InverseQ), kT, QDirection::InverseQ);
  MPoly xx = q_derivative(q_derivative(u, kX), kX);
  MPoly c_poly = c.as_poly();
  return tt - c_poly * c_poly * xx;
}

MPoly qwave_operator(const WaveSolution& u) { return qwave_operator(u.body, u.c); }

MPoly qwave_residual(const WaveSolution& u) {
  MPoly r = qwave_operator(u);
  if (u.order) r = truncated_xt(r, *u.order - 2);
  return r;
}

MPoly one_directional_residual(int n, int sign, int op_sign, const Speed& c) {
  MPoly b = traveling_power(n, sign, c);
  MPoly dt = q_derivative(b, kT, QDirection::InverseQ);
  MPoly dx = q_derivative(b, kX);
  CoefExpr s = op_sign >= 0 ? 1 : -1;
  return dt + s * (c.as_poly() * dx);
}

Verdict one_directional_check(int n_max, int sign, const Speed& c) {
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  v.id = sign >= 0 ? "one-directional+" : "one-directional-";
  v.range = {"n", 0, n_max};
  for (int n = 0; n <= n_max; ++n) {
    MPoly r = one_directional_residual(n, sign, -sign, c);
    if (!r.is_zero()) {
      v.status = VerdictStatus::Failed;
      v.failing_value = n;
      v.residual = r;
      break;
    }
  }
  v.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

WaveSolution dalembert_solve(const InitialData& data, const Speed& c) {
  require_data_vars(data.f, "f");
  require_data_vars(data.g, "g");
  if (c.value() && c.value()->is_zero()) throw QError(ErrorKind::InvalidArgument, "wave speed c must be nonzero");
  if (!c.is_symbolic() && (data.f.has_var(kC) || data.g.has_var(kC))) {
    throw QError(ErrorKind::InvalidArgument, "initial data mentions symbolic c but the speed is numeric");
  }

  std::optional<int> order;
  if (data.f_order) order = *data.f_order;
  if (data.g_order) order = std::min(order.value_or(*data.g_order + 1), *data.g_order + 1);

  MPoly antiderivative = jackson_antiderivative(data.g, kX);
  MPoly average = (q_binomial_substitute(data.f, 1, c) + q_binomial_substitute(data.f, -1, c)) *
                  CoefExpr::rational(mpq_class(1, 2));
  MPoly spread = c.divide(q_binomial_substitute(antiderivative, 1, c) - q_binomial_substitute(antiderivative, -1, c)) *
                 CoefExpr::rational(mpq_class(1, 2));

  WaveSolution u;
  u.body = average + spread;
  if (order) u.body = truncated_xt(u.body, *order);
  u.c = c;
  u.order = order;
  u.provenance = Provenance::Dalembert;

  MPoly f = order ? truncated_xt(data.f, *order) : data.f;
  MPoly g = order ? truncated_xt(data.g, *order - 1) : data.g;
  MPoly at_zero = u.body.evaluate_at(kT, 0);
  MPoly velocity = t_derivative_at_zero(u.body);
  if (order) velocity = truncated_xt(velocity, *order - 1);
  if (!(at_zero == f)) throw QError(ErrorKind::Internal, "solution does not reproduce u(x,0) = f");
  if (!(velocity == g)) throw QError(ErrorKind::Internal, "solution does not reproduce the initial velocity g");
  if (!qwave_residual(u).is_zero()) throw QError(ErrorKind::Internal, "solution has a nonzero wave residual");
  return u;
}

MPoly named_profile(const std::string& name, int order) {
  if (order < 0) throw QError(ErrorKind::InvalidArgument, "series order must be >= 0");
  if (name == "cos_q") return q_trig_series(TrigKind::Cos, order, kX).body();
  if (name == "sin_q") return q_trig_series(TrigKind::Sin, order, kX).body();
  if (name == "q-gaussian") {
    MPoly out({kX});
    mpz_class factorial = 1;
    for (int n = 0; 2 * n <= order; ++n) {
      if (n > 0) factorial *= n;
      mpq_class coef(n % 2 == 0 ? mpz_class(1) : mpz_class(-1), factorial);
      out.add_term({2 * n}, CoefExpr::rational(coef));
    }
    return out;
  }
  throw QError(ErrorKind::InvalidArgument, "unknown profile '" + name + "'");
}

WaveSolution named_wave(const std::string& name, int sign, const Speed& c, int order) {
  WaveSolution u;
  u.body = q_binomial_substitute(named_profile(name, order), sign, c);
  u.c = c;
  u.order = order;
  u.provenance = Provenance::NamedSeries;
  return u;
}

WaveSolution traveling_wave(int n, int sign, const Speed& c) {
  WaveSolution u;
  u.body = traveling_power(n, sign, c);
  u.c = c;
  u.provenance = Provenance::DirectBinomial;
  return u;
}

std::vector<double> GridRange::points() const {
  std::vector<double> out;
  auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  for (long k = 0; k < count; ++k) out.push_back(start + static_cast<double>(k) * step);
  return out;
}

GridRange parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw QError(ErrorKind::Parse, "malformed grid '" + text + "', expected start:stop:step");
    }
  }
  if (parts.size() != 3) throw QError(ErrorKind::Parse, "malformed grid '" + text + "', expected start:stop:step");
  if (!(parts[2] > 0)) throw QError(ErrorKind::Parse, "grid step must be positive");
  if (parts[1] < parts[0]) throw QError(ErrorKind::Parse, "grid stop is below its start");
  return {parts[0], parts[1], parts[2]};
}

std::vector<SampleRow> sample_grid(const WaveSolution& u, double q_value, double c_value, const GridRange& x_grid,
                                   const GridRange& t_grid) {
  if (!(q_value > 0)) throw QError(ErrorKind::InvalidArgument, "numeric q must be positive");
  const auto xs = x_grid.points();
  const auto ts = t_grid.points();
  const auto& vars = u.body.vars();
  for (const auto& v : vars) {
    if (v != kX && v != kT && v != kC) throw QError(ErrorKind::InvalidArgument, "unexpected variable '" + v + "'");
  }
  MPoly top(vars);
  if (u.order) top = u.body.filter([&](const Exponents& e) { return xt_degree(u.body, e) == *u.order; });

  auto point = [&](double x, double t) {
    std::vector<std::complex<double>> p;
    for (const auto& v : vars) p.emplace_back(v == kX ? x : v == kT ? t : c_value);
    return p;
  };
  auto row_block = [&](double x) {
    std::vector<SampleRow> rows;
    for (double t : ts) {
      auto p = point(x, t);
      SampleRow row{x, t, u.body.eval_numeric(q_value, p).real(), true};
      if (u.order) {
        double tail = std::abs(top.eval_numeric(q_value, p));
        row.valid = tail <= 1e-8 * std::max(1.0, std::abs(row.u));
      }
      rows.push_back(row);
    }
    return rows;
  };

  // Rows are evaluated in parallel chunks; collection order stays x-major.
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<SampleRow> out;
  out.reserve(xs.size() * ts.size());
  for (std::size_t base = 0; base < xs.size(); base += workers) {
    std::vector<std::future<std::vector<SampleRow>>> running;
    for (std::size_t k = base; k < std::min(xs.size(), base + workers); ++k) {
      running.push_back(std::async(std::launch::async, row_block, xs[k]));
    }
    for (auto& f : running) {
      auto rows = f.get();
      out.insert(out.end(), rows.begin(), rows.end());
    }
  }
  return out;
}

std::string to_csv(const std::vector<SampleRow>& rows) {
  std::string out = "x,t,u,valid\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%s\n", r.x, r.t, r.u, r.valid ? "true" : "false");
    out += buf;
  }
  return out;
}

std::vector<std::pair<double, double>> sign_change_brackets(const std::vector<double>& xs,
                                                            const std::vector<double>& us) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (us[k] == 0.0) {
      out.emplace_back(xs[k], xs[k]);
    } else if (k + 1 < xs.size() && us[k] * us[k + 1] < 0) {
      out.emplace_back(xs[k], xs[k + 1]);
    }
  }
  return out;
}

double trapezoid(const std::vector<double>& xs, const std::vector<double>& us, double a, double b) {
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    if (xs[k] >= a && xs[k + 1] <= b) sum += 0.5 * (us[k] + us[k + 1]) * (xs[k + 1] - xs[k]);
  }
  return sum;
}

}  // namespace qcalc
