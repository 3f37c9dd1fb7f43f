#include "qcalc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "qcalc/error.hpp"
#include "qcalc/hermite.hpp"
#include "qcalc/identities.hpp"
#include "qcalc/json_io.hpp"
#include "qcalc/poly_ops.hpp"
#include "qcalc/q_core.hpp"
#include "qcalc/qwave.hpp"

namespace qcalc {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

/// "a0,a1,..." low degree first.
MPoly coefficient_list(const std::string& text) {
  MPoly p({"x"});
  int d = 0;
  for (const auto& item : split(text, ',')) p.add_term({d++}, CoefExpr::rational(parse_rational(item)));
  return p;
}

Speed parse_speed(const std::string& text) {
  if (text == "symbolic" || text == "c") return Speed::symbolic();
  mpq_class c = parse_rational(text);
  if (c == 0) throw QError(ErrorKind::InvalidArgument, "wave speed c must be nonzero");
  return Speed::exact(CoefExpr::rational(c));
}

/// Named initial data, including "neg-2q-cx" = -[2]_q c x.
MPoly named_data(const std::string& name, const Speed& c, int order, std::optional<int>& data_order) {
  if (name == "neg-2q-cx") {
    MPoly cx = c.as_poly() * MPoly::variable("x");
    return cx * -CoefExpr(q_int(2));
  }
  data_order = order;
  return named_profile(name, order);
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw QError(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

struct Options {
  std::string output = "-";

  std::string identity;
  int n_max = 10;
  int order = 20;
  std::optional<unsigned> seed;
  std::string q_samples;
  std::string verify_c;

  std::string f, g, f_named, g_named;
  std::string c = "symbolic";
  int series_order = 20;
  bool check = false;

  std::string input = "-";
  double q_value = 0.0;
  double c_value = 1.0;
  std::string x_grid, t_grid;

  int n = 0;
  std::string kind = "q";
  std::string binomial = "x-ct";
};

int cmd_verify(const Options& o, std::ostream& out) {
  const auto& ids = identity_ids();
  if (o.identity != "all" && std::find(ids.begin(), ids.end(), o.identity) == ids.end()) {
    throw QError(ErrorKind::InvalidArgument, "unknown identity '" + o.identity + "'");
  }
  VerifyOptions opts;
  opts.n_max = o.n_max;
  opts.order = o.order;
  if (!o.q_samples.empty()) {
    for (const auto& item : split(o.q_samples, ',')) opts.q_samples.push_back(parse_rational(item));
  }
  if (o.seed) {
    std::mt19937 rng(*o.seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    while (opts.q_samples.size() < 4) {
      mpq_class v(num(rng), den(rng));
      v.canonicalize();
      if (v != 0 && v != -1) opts.q_samples.push_back(v);
    }
  }
  if (!o.verify_c.empty()) {
    mpq_class c = parse_rational(o.verify_c);
    if (c == 0) throw QError(ErrorKind::InvalidArgument, "c must be nonzero");
    opts.c = c;
  }
  auto verdicts = run_verification(o.identity, opts);
  Json arr = Json::array();
  bool all_ok = true;
  for (const auto& v : verdicts) {
    arr.push_back(to_json(v));
    all_ok = all_ok && v.verified();
  }
  out << arr.dump(2) << '\n';
  return all_ok ? kExitOk : kExitViolated;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.f.empty() == o.f_named.empty()) throw QError(ErrorKind::InvalidArgument, "give exactly one of --f, --f-named");
  if (o.g.empty() == o.g_named.empty()) throw QError(ErrorKind::InvalidArgument, "give exactly one of --g, --g-named");
  Speed c = parse_speed(o.c);
  InitialData data;
  data.f = o.f.empty() ? named_data(o.f_named, c, o.series_order, data.f_order) : coefficient_list(o.f);
  data.g = o.g.empty() ? named_data(o.g_named, c, o.series_order, data.g_order) : coefficient_list(o.g);
  WaveSolution u = dalembert_solve(data, c);
  if (o.check) {
    MPoly residual = qwave_residual(u);
    if (!residual.is_zero()) {
      err << "wave residual is nonzero: " << residual.to_string() << '\n';
      return kExitViolated;
    }
  }
  out << to_json(u).dump(2) << '\n';
  return kExitOk;
}

int cmd_sample(const Options& o, std::istream& in, std::ostream& out) {
  if (!(o.q_value > 0)) throw QError(ErrorKind::InvalidArgument, "--q must be positive");
  WaveSolution u = wave_from_json(parse_json(read_input(o.input, in)));
  out << to_csv(sample_grid(u, o.q_value, o.c_value, parse_grid(o.x_grid), parse_grid(o.t_grid)));
  return kExitOk;
}

int cmd_hermite(const Options& o, std::ostream& out) {
  if (o.n < 0) throw QError(ErrorKind::InvalidArgument, "--n must be >= 0");
  MPoly h;
  if (o.kind == "q") {
    h = q_hermite(o.n);
  } else if (o.kind == "classical") {
    h = hermite_classical(o.n);
  } else if (o.kind == "inverse") {
    h = q_hermite_inverse(o.n);
  } else if (o.kind == "dual") {
    h = q_hermite_dual(o.n);
  } else {
    throw QError(ErrorKind::InvalidArgument, "unknown kind '" + o.kind + "'");
  }
  out << to_json(h).dump(2) << '\n';
  return kExitOk;
}

int cmd_expand(const Options& o, std::ostream& out) {
  if (o.n < 0) throw QError(ErrorKind::InvalidArgument, "--n must be >= 0");
  MPoly p;
  if (o.binomial == "x-ct" || o.binomial == "x+ct") {
    p = traveling_power(o.n, o.binomial[1] == '+' ? 1 : -1, Speed::symbolic());
  } else if (o.binomial == "z+iw" || o.binomial == "z-iw") {
    CoefExpr b = o.binomial[1] == '+' ? CoefExpr::i() : -CoefExpr::i();
    p = q_binomial_power("z", b, "w", o.n);
  } else {
    throw QError(ErrorKind::InvalidArgument, "binomial must be one of x-ct, x+ct, z+iw, z-iw");
  }
  out << to_json(p).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact q-calculus: identity verification, q-Hermite polynomials and the q-wave equation", "qcalc"};
  app.require_subcommand(1);
  app.add_option("-o,--output", o.output, "Write results to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Verify an identity exactly over a parameter range");
  verify->add_option("--identity", o.identity, "Identity id, or 'all'")->required();
  verify->add_option("--n-max", o.n_max, "Largest n checked")->check(CLI::NonNegativeNumber);
  verify->add_option("--order", o.order, "Series truncation order")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed, "Seed for random exact q samples");
  verify->add_option("--q-samples", o.q_samples, "Comma-separated rational q values to spot-check");
  verify->add_option("--c", o.verify_c, "Rational wave speed for traveling-hermite (default symbolic)");

  auto* solve = app.add_subcommand("solve", "Solve the q-wave initial value problem");
  solve->add_option("--f", o.f, "u(x,0) coefficients, low degree first");
  solve->add_option("--g", o.g, "Initial velocity coefficients, low degree first");
  solve->add_option("--f-named", o.f_named, "Named u(x,0): cos_q, sin_q, q-gaussian");
  solve->add_option("--g-named", o.g_named, "Named velocity: cos_q, sin_q, q-gaussian, neg-2q-cx");
  solve->add_option("--c", o.c, "Rational wave speed, or 'symbolic'");
  solve->add_option("--order", o.series_order, "Truncation order for named series")->check(CLI::NonNegativeNumber);
  solve->add_flag("--check", o.check, "Refuse to emit a solution with nonzero wave residual");

  auto* sample = app.add_subcommand("sample", "Sample a wave solution on a grid as CSV");
  sample->add_option("--input", o.input, "Wave solution JSON file ('-' for stdin)");
  sample->add_option("--q", o.q_value, "Numeric q > 0")->required();
  sample->add_option("--c", o.c_value, "Numeric c for a symbolic speed");
  sample->add_option("--x", o.x_grid, "x grid start:stop:step")->required();
  sample->add_option("--t", o.t_grid, "t grid start:stop:step")->required();

  auto* hermite = app.add_subcommand("hermite", "Print a Hermite polynomial as JSON");
  hermite->add_option("--n", o.n, "Degree")->required();
  hermite->add_option("--kind", o.kind, "q, classical, inverse or dual");

  auto* expand = app.add_subcommand("expand", "Print a q-binomial power as JSON");
  expand->add_option("--binomial", o.binomial, "x-ct, x+ct, z+iw or z-iw");
  expand->add_option("--n", o.n, "Power")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*verify) {
      code = cmd_verify(o, buffer);
    } else if (*solve) {
      code = cmd_solve(o, buffer, err);
    } else if (*sample) {
      code = cmd_sample(o, in, buffer);
    } else if (*hermite) {
      code = cmd_hermite(o, buffer);
    } else {
      code = cmd_expand(o, buffer);
    }
  } catch (const QError& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::Internal) return kExitViolated;
    if (*verify && e.kind() == ErrorKind::InvalidArgument) err << app.get_subcommand("verify")->help();
    return kExitUsage;
  }

  if (o.output == "-") {
    out << buffer.str();
  } else {
    std::ofstream file(o.output);
    if (!file) {
      err << "error: cannot write '" << o.output << "'\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace qcalc
