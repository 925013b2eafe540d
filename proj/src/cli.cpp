#include "hardy/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "hardy/dual.hpp"
#include "hardy/errors.hpp"
#include "hardy/io.hpp"
#include "hardy/opa.hpp"
#include "hardy/orthogonality.hpp"
#include "hardy/projection.hpp"
#include "hardy/roots.hpp"

namespace hardy {

namespace {

struct Report {
  json body = json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int status = kExitOk;
  std::string reason;
};

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num(int v) { return std::to_string(v); }
std::string flag(bool b) { return b ? "true" : "false"; }

// JSON has no infinity; unbounded values are written as null.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double need_p(const RunConfig& cfg) {
  if (!cfg.p) throw InvalidArgument("--p is required for " + cfg.command);
  if (!(*cfg.p > 1.0) || !std::isfinite(*cfg.p)) throw InvalidArgument("--p must lie in (1, inf)");
  return *cfg.p;
}

double need_q(const RunConfig& cfg) {
  if (cfg.q) return *cfg.q;
  if (cfg.p) return *cfg.p / (*cfg.p - 1.0);
  throw InvalidArgument("--q (or --p) is required for " + cfg.command);
}

SolverOptions solver_options(const RunConfig& cfg) {
  SolverOptions opts;
  opts.grid_size = cfg.grid;
  if (cfg.tol) opts.tol = *cfg.tol;
  if (cfg.max_iter) opts.max_iter = *cfg.max_iter;
  opts.validate();
  return opts;
}

json input_json(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InvalidArgument("--input is required for " + cfg.command);
  return load_json_input(cfg.input);
}

FunctionSpec input_spec(const RunConfig& cfg) {
  if (cfg.input.empty() && !cfg.zeros.empty()) return FunctionSpec::blaschke_product(parse_zero_list(cfg.zeros));
  return spec_from_json(input_json(cfg));
}

std::vector<cplx> input_zeros(const RunConfig& cfg) {
  if (!cfg.zeros.empty()) return parse_zero_list(cfg.zeros);
  const json j = input_json(cfg);
  if (j.is_array()) return complex_list_from_json(j);
  const auto f = spec_from_json(j);
  if (!f.blaschke || f.blaschke->zeros().empty()) throw InvalidArgument("input has no Blaschke zeros");
  return f.blaschke->zeros();
}

json bound_json(const BoundCheck& b) {
  return {{"name", b.name}, {"lhs", finite_or_null(b.lhs)}, {"rhs", b.rhs}, {"slack", finite_or_null(b.slack)},
          {"satisfied", b.satisfied}};
}

Report cmd_opa(const RunConfig& cfg) {
  const double p = need_p(cfg);
  const int n = cfg.degree.value_or(0);
  const auto f = input_spec(cfg);
  const auto res = solve_opa(f, n, p, solver_options(cfg));
  Report r;
  r.body = {{"p", p},
            {"degree", n},
            {"grid", cfg.grid},
            {"coefficients", to_json(res.coefficients)},
            {"error", res.error},
            {"error_p", std::pow(res.error, p)},
            {"certificate", res.certificate},
            {"iterations", res.iterations},
            {"converged", res.converged},
            {"condition_estimate", res.condition_estimate},
            {"warnings", res.warnings}};
  r.header = {"k", "coef_re", "coef_im", "error", "certificate", "converged"};
  for (std::size_t k = 0; k < res.coefficients.size(); ++k) {
    r.rows.push_back({std::to_string(k), num(res.coefficients[k].real()), num(res.coefficients[k].imag()),
                      num(res.error), num(res.certificate), flag(res.converged)});
  }
  if (!res.converged) {
    r.status = kExitNoConvergence;
    r.reason = "certificate " + num(res.certificate) + " above tolerance after " + num(res.iterations) + " iterations";
  }
  return r;
}

Report cmd_project(const RunConfig& cfg) {
  const double p = need_p(cfg);
  const auto f = input_spec(cfg);
  const auto res = project_one(f, p, make_grid(cfg.grid));
  Report r;
  r.body = {{"p", p},
            {"grid", cfg.grid},
            {"distance", res.distance},
            {"distance_formula", distance_formula(f, p)},
            {"j_at_zero", to_json(res.j_at_zero)},
            {"norm_mismatch", res.norm_mismatch},
            {"certificate", res.certificate},
            {"certificate_terms", res.certificate_terms}};
  r.header = {"p", "distance", "j_at_zero_re", "j_at_zero_im", "norm_mismatch", "certificate"};
  r.rows.push_back({num(p), num(res.distance), num(res.j_at_zero.real()), num(res.j_at_zero.imag()),
                    num(res.norm_mismatch), num(res.certificate)});
  return r;
}

Report cmd_extremal(const RunConfig& cfg) {
  const double p = need_p(cfg);
  const auto zeros = input_zeros(cfg);
  const auto grid = make_grid(cfg.grid);
  const auto res = finite_blaschke_extremal(zeros, p, grid);
  constexpr int kCheckTerms = 20;
  double worst = 0.0;
  for (const double v : res.consistency_residuals) worst = std::max(worst, v);
  Report r;
  r.body = {{"p", p},
            {"zeros", to_json(zeros)},
            {"c", res.c},
            {"d", res.d},
            {"w", to_json(res.w)},
            {"outer_poly", to_json(res.outer_poly_coeffs)},
            {"consistency_residuals", res.consistency_residuals},
            {"max_consistency_residual", worst},
            {"coefficient_residual", res.coefficient_residual},
            {"identity_residual", res.identity_residual},
            {"orthogonality_terms", kCheckTerms + 1},
            {"orthogonality_residual", spicyham_check(res, zeros, p, grid, kCheckTerms)}};
  r.header = {"k", "w_re", "w_im", "c", "d", "max_consistency_residual"};
  if (res.w.empty()) r.rows.push_back({"", "", "", num(res.c), num(res.d), num(worst)});
  for (std::size_t k = 0; k < res.w.size(); ++k) {
    r.rows.push_back({std::to_string(k), num(res.w[k].real()), num(res.w[k].imag()), num(res.c), num(res.d),
                      num(worst)});
  }
  return r;
}

Report cmd_distance(const RunConfig& cfg) {
  const double p = need_p(cfg);
  const auto f = input_spec(cfg);
  const double d = distance_formula(f, p);
  Report r;
  r.body = {{"p", p}, {"distance", d}, {"j_at_zero", to_json(inner_value_at_zero(f))}};
  r.header = {"n", "error", "certificate", "converged", "distance"};
  if (!cfg.degree) {
    r.rows.push_back({"", "", "", "", num(d)});
    return r;
  }
  const auto seq = opa_error_sequence(f, p, *cfg.degree, solver_options(cfg));
  json entries = json::array();
  bool all = true;
  for (const auto& e : seq) {
    entries.push_back({{"n", e.degree}, {"error", e.error}, {"certificate", e.certificate}, {"converged", e.converged}});
    r.rows.push_back({num(e.degree), num(e.error), num(e.certificate), flag(e.converged), num(d)});
    all = all && e.converged;
  }
  r.body["sequence"] = entries;
  if (!all) {
    r.status = kExitNoConvergence;
    r.reason = "approximant sequence did not converge at every degree";
  }
  return r;
}

Report cmd_dual(const RunConfig& cfg) {
  const double q = need_q(cfg);
  const auto zeros = input_zeros(cfg);
  DualOptions opts;
  opts.grid_size = cfg.grid;
  if (cfg.tol) opts.tol = *cfg.tol;
  if (cfg.max_iter) opts.max_iter = *cfg.max_iter;
  const DualProblem prob{zeros, q, cfg.degree.value_or(24)};
  const auto res = dual_sup(prob, opts);
  const double exact = dual_exact(zeros, q);
  Report r;
  r.body = {{"q", q},
            {"p", q / (q - 1.0)},
            {"zeros", to_json(zeros)},
            {"search_degree", prob.search_degree},
            {"value", res.value},
            {"exact", exact},
            {"gap", exact - res.value},
            {"maximizer", to_json(res.maximizer)},
            {"converged", res.converged},
            {"iterations", res.iterations},
            {"gradient_norm", res.gradient_norm}};
  r.header = {"q", "value", "exact", "gap", "converged"};
  r.rows.push_back({num(q), num(res.value), num(exact), num(exact - res.value), flag(res.converged)});
  if (!res.converged) {
    r.status = kExitNoConvergence;
    r.reason = "dual ascent stopped with gradient norm " + num(res.gradient_norm);
  }
  return r;
}

Report cmd_roots(const RunConfig& cfg) {
  const double p = need_p(cfg);
  const int n = cfg.degree.value_or(0);
  const auto f = input_spec(cfg);
  const auto opts = solver_options(cfg);
  const auto opa = solve_opa(f, n, p, opts);
  const auto rep = root_report(opa.coefficients);

  json bounds = json::array();
  bounds.push_back(bound_json(check_product_bound(f, opa, p)));
  bounds.push_back(bound_json(check_centner_bound(opa, p)));
  const double f0 = std::abs(value_at_zero(f));
  if (f0 > 0.0 && p < 2.0) {
    const double b = bound_p_less_2(f, p);
    bounds.push_back(bound_json({"p_less_2", rep.product_modulus, b, rep.product_modulus - b,
                                 rep.product_modulus - b >= -kBoundTol}));
  }
  if (f0 > 0.0 && p > 2.0) {
    const double b = bound_p_greater_2(f, p, cfg.grid);
    bounds.push_back(bound_json({"p_greater_2", rep.product_modulus, b, rep.product_modulus - b,
                                 rep.product_modulus - b >= -kBoundTol}));
  }
  if (n == 0) {
    const auto z = lemma_0opa_bound(f, p, cfg.grid);
    if (!z.degenerate) {
      const double achieved = std::pow(opa.error, z.r);
      bounds.push_back(bound_json({"zero_degree", achieved, z.bound_on_error_to_the_r,
                                   z.bound_on_error_to_the_r - achieved,
                                   achieved <= z.bound_on_error_to_the_r + kBoundTol}));
    }
  }

  Report r;
  r.body = {{"p", p},
            {"degree", n},
            {"coefficients", to_json(opa.coefficients)},
            {"error", opa.error},
            {"converged", opa.converged},
            {"roots", to_json(rep.roots)},
            {"in_disk", to_json(rep.in_disk)},
            {"boundary", to_json(rep.boundary)},
            {"product_modulus", rep.product_modulus},
            {"min_modulus", finite_or_null(rep.min_modulus)},
            {"bounds", bounds}};
  r.header = {"k", "root_re", "root_im", "modulus", "in_disk"};
  for (std::size_t k = 0; k < rep.roots.size(); ++k) {
    const double m = std::abs(rep.roots[k]);
    r.rows.push_back({std::to_string(k), num(rep.roots[k].real()), num(rep.roots[k].imag()), num(m),
                      flag(m < 1.0 - kDiskMargin)});
  }
  bool all = true;
  for (const auto& b : bounds) all = all && b["satisfied"].get<bool>();
  if (!all) {
    r.status = kExitConsistency;
    r.reason = "a root bound is violated";
  } else if (!opa.converged) {
    r.status = kExitNoConvergence;
    r.reason = "approximant did not converge";
  }
  return r;
}

Report cmd_pythag(const RunConfig& cfg) {
  const double p = need_p(cfg);
  const json j = input_json(cfg);
  FunctionSpec f = FunctionSpec::polynomial({1.0});
  FunctionSpec g;
  if (j.is_object() && j.contains("g")) {
    g = spec_from_json(j["g"]);
    if (j.contains("f")) f = spec_from_json(j["f"]);
  } else {
    g = spec_from_json(j);
  }
  const auto grid = make_grid(cfg.grid);
  const auto rep = pythagorean_report(sample(f, grid), sample(g, grid), p);
  Report r;
  json ineq = json::array();
  r.header = {"name", "lhs", "rhs", "slack", "holds"};
  for (const auto& c : rep.inequalities) {
    ineq.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"slack", c.slack}, {"holds", c.holds}});
    r.rows.push_back({c.name, num(c.lhs), num(c.rhs), num(c.slack), flag(c.holds)});
  }
  r.body = {{"p", p}, {"orthogonal", rep.orthogonal}, {"residual", rep.residual}, {"inequalities", ineq}};
  return r;
}

std::vector<FunctionSpec> random_family(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> modulus(0.05, 0.9);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::uniform_int_distribution<int> size(1, 3);
  std::vector<FunctionSpec> out;
  for (int k = 0; k < count; ++k) {
    std::vector<cplx> zeros;
    const int m = size(rng);
    for (int i = 0; i < m; ++i) zeros.push_back(std::polar(modulus(rng), angle(rng)));
    out.push_back(FunctionSpec::blaschke_product(zeros));
  }
  return out;
}

Report cmd_scan(const RunConfig& cfg) {
  const double p = need_p(cfg);
  const json j = input_json(cfg);
  FunctionSpec f;
  std::vector<FunctionSpec> family;
  if (j.is_object() && j.contains("f")) {
    f = spec_from_json(j["f"]);
    if (j.contains("family")) {
      if (!j["family"].is_array()) throw InvalidArgument("family must be an array of specs");
      for (const auto& m : j["family"]) family.push_back(spec_from_json(m));
    }
  } else {
    f = spec_from_json(j);
  }
  if (family.empty() && !cfg.zeros.empty()) {
    for (const auto& a : parse_zero_list(cfg.zeros)) family.push_back(FunctionSpec::blaschke_product({a}));
  }
  if (family.empty()) family = random_family(cfg.seed, 20);

  const auto rep = conjecture_scan(f, family, p, solver_options(cfg));
  Report r;
  json entries = json::array();
  r.header = {"index", "lhs", "rhs", "margin", "counterexample"};
  for (const auto& e : rep.entries) {
    entries.push_back({{"index", e.index}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"margin", e.margin},
                       {"counterexample", e.counterexample}, {"inner", to_json(family[e.index])}});
    r.rows.push_back({std::to_string(e.index), num(e.lhs), num(e.rhs), num(e.margin), flag(e.counterexample)});
  }
  r.body = {{"p", p},
            {"seed", cfg.seed},
            {"best_constant", to_json(rep.best_constant)},
            {"entries", entries},
            {"any_counterexample", rep.any_counterexample}};
  return r;
}

Report cmd_escape(const RunConfig& cfg) {
  const double p = need_p(cfg);
  const auto f = input_spec(cfg);
  const int n_max = cfg.degree.value_or(12);
  const auto rep = escape_tracker(f, p, n_max, cfg.radii, solver_options(cfg));
  Report r;
  json mins = json::array();
  for (const auto& [n, v] : rep.min_modulus) mins.push_back({{"n", n}, {"min_modulus", finite_or_null(v)}});
  json esc = json::array();
  for (const auto& [radius, n] : rep.escape_degree) {
    esc.push_back({{"radius", radius}, {"escaped_from", n < 0 ? json(nullptr) : json(n)}});
  }
  json traj = json::array();
  r.header = {"n", "p", "root_re", "root_im", "modulus", "in_disk"};
  for (const auto& t : rep.trajectory) {
    traj.push_back({{"n", t.n}, {"root", to_json(t.root)}, {"modulus", t.modulus}, {"in_disk", t.in_disk}});
    r.rows.push_back({num(t.n), num(t.p), num(t.root.real()), num(t.root.imag()), num(t.modulus), flag(t.in_disk)});
  }
  r.body = {{"p", p}, {"n_max", n_max}, {"min_modulus", mins}, {"escape", esc}, {"trajectory", traj},
            {"all_converged", rep.all_converged}};
  if (!rep.all_converged) {
    r.status = kExitNoConvergence;
    r.reason = "approximant did not converge at every degree";
  }
  return r;
}

Report cmd_truncation(const RunConfig& cfg) {
  const double p = need_p(cfg);
  Report r;
  std::vector<TruncationRow> rows;
  if (cfg.family == "multiplicity") {
    std::vector<int> ns;
    for (int n = 2; n <= cfg.degree.value_or(10); ++n) ns.push_back(n);
    const auto rep = multiplicity_family_experiment(p, ns);
    rows = rep.rows;
    r.body["strictly_decreasing"] = rep.strictly_decreasing;
  } else if (cfg.family.empty()) {
    const auto zeros = input_zeros(cfg);
    std::vector<int> ns;
    for (int n = 0; n <= static_cast<int>(zeros.size()); ++n) ns.push_back(n);
    rows = truncation_distance_experiment([&](int k) { return zeros.at(static_cast<std::size_t>(k - 1)); }, p, ns);
  } else {
    throw InvalidArgument("unknown family '" + cfg.family + "'");
  }
  json out = json::array();
  r.header = {"n", "j_at_zero_modulus", "distance"};
  for (const auto& row : rows) {
    out.push_back({{"n", row.n}, {"j_at_zero_modulus", row.j_at_zero_modulus}, {"distance", row.distance}});
    r.rows.push_back({num(row.n), num(row.j_at_zero_modulus), num(row.distance)});
  }
  r.body["p"] = p;
  r.body["rows"] = out;
  return r;
}

const std::map<std::string, std::function<Report(const RunConfig&)>>& commands() {
  static const std::map<std::string, std::function<Report(const RunConfig&)>> table{
      {"opa", cmd_opa},         {"project", cmd_project},       {"extremal-fbp", cmd_extremal},
      {"distance", cmd_distance}, {"dual", cmd_dual},            {"roots", cmd_roots},
      {"pythag", cmd_pythag},   {"scan-conjecture", cmd_scan},  {"escape", cmd_escape},
      {"truncation", cmd_truncation}};
  return table;
}

void write_report(const Report& r, const RunConfig& cfg, std::ostream& os) {
  if (cfg.format == OutputFormat::Json) {
    json body = r.body;
    body["command"] = cfg.command;
    os << body.dump(2) << '\n';
    return;
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "," : "") << cells[k];
    os << '\n';
  };
  line(r.header);
  for (const auto& row : r.rows) line(row);
}

void error_line(std::ostream& err, int code, const std::string& kind, const std::string& reason) {
  err << "error code=" << code << " kind=" << kind << " reason=" << json(reason).dump() << '\n';
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto it = commands().find(cfg.command);
  if (it == commands().end()) {
    error_line(err, kExitInvalid, "invalid_argument", "unknown command '" + cfg.command + "'");
    return kExitInvalid;
  }
  Report report;
  try {
    if (cfg.grid < kMinGridSize) throw InvalidArgument("--grid must be at least " + std::to_string(kMinGridSize));
    report = it->second(cfg);
  } catch (const InvalidArgument& e) {
    error_line(err, kExitInvalid, "invalid_argument", e.what());
    return kExitInvalid;
  } catch (const BranchViolation& e) {
    error_line(err, kExitInvalid, "branch_violation", e.what());
    return kExitInvalid;
  } catch (const DomainError& e) {
    error_line(err, kExitInvalid, "domain_error", e.what());
    return kExitInvalid;
  } catch (const OuternessViolation& e) {
    error_line(err, kExitConsistency, "outerness_violation", e.what());
    return kExitConsistency;
  } catch (const ConsistencyError& e) {
    error_line(err, kExitConsistency, "consistency_error", e.what());
    return kExitConsistency;
  } catch (const std::exception& e) {
    error_line(err, kExitConsistency, "internal_error", e.what());
    return kExitConsistency;
  }

  if (cfg.out.empty()) {
    write_report(report, cfg, out);
  } else {
    std::ofstream file(cfg.out);
    if (!file) {
      error_line(err, kExitInvalid, "invalid_argument", "cannot write " + cfg.out);
      return kExitInvalid;
    }
    write_report(report, cfg, file);
  }
  if (report.status != kExitOk) {
    error_line(err, report.status, report.status == kExitNoConvergence ? "no_convergence" : "consistency_error",
               report.reason);
  }
  return report.status;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical experiments on approximation in Hardy spaces H^p of the disk", "hardy_opa"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  double p = 0.0, q = 0.0, tol = 0.0;
  int degree = 0, max_iter = 0;
  std::string format = "json";
  auto* p_opt = app.add_option("--p", p, "Exponent p in (1, inf)");
  auto* q_opt = app.add_option("--q", q, "Dual exponent q (dual only; defaults to p/(p-1))");
  auto* n_opt = app.add_option("--degree", degree, "Approximant degree, n_max, or dual search degree");
  auto* grid_opt = app.add_option("--grid", cfg.grid, "Quadrature nodes on the circle (default 4096)");
  auto* tol_opt = app.add_option("--tol", tol, "Solver tolerance (default 1e-10)");
  auto* it_opt = app.add_option("--max-iter", max_iter, "Iteration cap (default 500)");
  app.add_option("--input", cfg.input, "Function spec as a JSON file path or inline JSON");
  app.add_option("--zeros", cfg.zeros, "Comma list of real zeros");
  app.add_option("--family", cfg.family, "Experiment family (truncation: multiplicity)");
  app.add_option("--radii", cfg.radii, "Radii for escape tracking")->delimiter(',');
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "Write the report to this path");
  app.add_option("--seed", cfg.seed, "Seed for randomly generated families");

  for (const auto& [name, fn] : commands()) {
    app.add_subcommand(name, "Run the " + name + " experiment");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    error_line(err, kExitInvalid, "usage", e.what());
    return kExitInvalid;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (p_opt->count()) cfg.p = p;
  if (q_opt->count()) cfg.q = q;
  if (n_opt->count()) cfg.degree = degree;
  if (tol_opt->count()) cfg.tol = tol;
  if (it_opt->count()) cfg.max_iter = max_iter;
  cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  if (!grid_opt->count()) {
    if (const char* env = std::getenv("HARDY_OPA_GRID")) {
      try {
        std::size_t used = 0;
        const long v = std::stol(env, &used);
        if (used != std::string(env).size() || v <= 0) throw std::invalid_argument(env);
        cfg.grid = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        error_line(err, kExitInvalid, "invalid_argument", std::string("bad HARDY_OPA_GRID value '") + env + "'");
        return kExitInvalid;
      }
    }
  }
  return run(cfg, out, err);
}

}  // namespace hardy
