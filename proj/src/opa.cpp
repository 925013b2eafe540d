#include "hardy/opa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double kIllConditioned = 1e12;

void require_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw InvalidArgument("exponent p must lie in (1, inf), got " + std::to_string(p));
  }
}

void require_degree(int degree) {
  if (degree < 0) throw InvalidArgument("degree must be nonnegative, got " + std::to_string(degree));
}

bool vanishes_identically(const BoundarySamples& fs) {
  return std::all_of(fs.values().begin(), fs.values().end(), [](cplx v) { return v == 0.0; });
}

// max_j |G_j| from a gradient laid out as (-p Re G_j, p Im G_j).
double certificate_from_gradient(const Eigen::VectorXd& grad, double p) {
  double m = 0.0;
  for (Eigen::Index j = 0; j + 1 < grad.size(); j += 2) m = std::max(m, std::hypot(grad[j], grad[j + 1]));
  return m / p;
}

struct P2Solution {
  Coefficients coefficients;
  double condition;
};

P2Solution p2_solve(const BoundarySamples& fs, int degree) {
  std::vector<cplx> mod2(fs.size());
  for (std::size_t k = 0; k < fs.size(); ++k) mod2[k] = std::norm(fs[k]);
  const BoundarySamples mod2s(fs.grid(), std::move(mod2));
  const auto toeplitz = fourier_coefficients(mod2s, -degree, degree);
  const auto rhs_coeffs = fourier_coefficients(fs, -degree, 0);

  const Eigen::Index m = degree + 1;
  Eigen::MatrixXcd gram(m, m);
  Eigen::VectorXcd rhs(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) gram(j, k) = toeplitz[static_cast<std::size_t>(j - k + degree)];
    // mean conj(z^j f) = conj(fourier coefficient of f at -j)
    rhs[j] = std::conj(rhs_coeffs[static_cast<std::size_t>(degree - j)]);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  const double cond = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();

  Eigen::VectorXcd sol = gram.ldlt().solve(rhs);
  Coefficients c(sol.data(), sol.data() + sol.size());
  return {std::move(c), cond};
}

Eigen::MatrixXd inverse_hessian(const OpaObjective& obj, const Eigen::VectorXd& x) {
  const Eigen::MatrixXd h = obj.hessian(x);
  Eigen::LDLT<Eigen::MatrixXd> ldlt(h);
  const Eigen::Index n = h.rows();
  if (ldlt.info() == Eigen::Success && (ldlt.vectorD().array() > 0.0).all()) {
    return ldlt.solve(Eigen::MatrixXd::Identity(n, n));
  }
  const double scale = std::max(h.diagonal().cwiseAbs().maxCoeff(), 1e-12);
  return Eigen::MatrixXd::Identity(n, n) / scale;
}

struct StageOutcome {
  bool converged;
  double certificate;
};

// BFGS on one smoothing level. The inverse Hessian estimate is seeded with the
// exact inverse Hessian and reseeded whenever the line search fails.
StageOutcome minimize_stage(const OpaObjective& obj, Eigen::VectorXd& x, double stage_tol,
                            const LineSearchOptions& ls, int& iterations, int max_iter) {
  Eigen::VectorXd g(obj.dimension());
  double fx = obj.value_and_gradient(x, g);
  Eigen::MatrixXd hinv = inverse_hessian(obj, x);
  bool fresh = true;
  double cert = certificate_from_gradient(g, obj.p());

  Eigen::VectorXd xn(x.size());
  Eigen::VectorXd gn(x.size());
  while (cert > stage_tol) {
    if (iterations >= max_iter) return {false, cert};
    ++iterations;

    Eigen::VectorXd d = -hinv * g;
    double slope = g.dot(d);
    if (!(slope < 0.0)) {
      hinv = inverse_hessian(obj, x);
      fresh = true;
      d = -hinv * g;
      slope = g.dot(d);
      if (!(slope < 0.0)) {
        d = -g;
        slope = -g.squaredNorm();
      }
    }

    double t = 1.0;
    bool accepted = false;
    double fn = fx;
    for (int step = 0; step < ls.max_steps; ++step, t *= ls.shrink) {
      xn = x + t * d;
      fn = obj.value_and_gradient(xn, gn);
      if (!std::isfinite(fn)) continue;
      if (fn <= fx + ls.armijo * t * slope) {
        accepted = true;
        break;
      }
      // Near the minimizer F changes below its own rounding; accept steps that
      // shrink the certificate instead.
      if (std::abs(fn - fx) <= 1e-13 * std::max(1.0, std::abs(fx)) &&
          certificate_from_gradient(gn, obj.p()) < cert) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (fresh) return {false, cert};
      hinv = inverse_hessian(obj, x);
      fresh = true;
      continue;
    }

    const Eigen::VectorXd s = xn - x;
    const Eigen::VectorXd y = gn - g;
    const double sy = s.dot(y);
    if (sy > 1e-14 * s.norm() * y.norm()) {
      const double rho = 1.0 / sy;
      const Eigen::VectorXd hy = hinv * y;
      hinv += ((sy + y.dot(hy)) * rho * rho) * (s * s.transpose()) -
              rho * (hy * s.transpose() + s * hy.transpose());
    }
    fresh = false;
    x = xn;
    g = gn;
    fx = fn;
    cert = certificate_from_gradient(g, obj.p());
  }
  return {true, cert};
}

Coefficients padded(const Coefficients& c, int degree) {
  Coefficients out(static_cast<std::size_t>(degree + 1), 0.0);
  for (std::size_t k = 0; k < std::min(c.size(), out.size()); ++k) out[k] = c[k];
  return out;
}

}  // namespace

void SolverOptions::validate() const {
  if (!(tol > 0.0)) throw InvalidArgument("solver tolerance must be positive");
  if (max_iter < 1) throw InvalidArgument("max_iter must be at least 1");
  if (grid_size < kMinGridSize) throw InvalidArgument("grid size below minimum");
  if (smoothing_eps.empty() || smoothing_eps.back() != 0.0) {
    throw InvalidArgument("smoothing schedule must end at 0");
  }
  for (std::size_t k = 0; k + 1 < smoothing_eps.size(); ++k) {
    if (!(smoothing_eps[k] > smoothing_eps[k + 1])) {
      throw InvalidArgument("smoothing schedule must be strictly decreasing");
    }
  }
}

OpaObjective::OpaObjective(const BoundarySamples& f, int degree, double p, double smoothing)
    : grid_(f.grid()), degree_(degree), p_(p), eps_(smoothing) {
  require_p(p);
  require_degree(degree);
  const auto n = static_cast<Eigen::Index>(f.size());
  basis_.resize(n, degree + 1);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (int j = 0; j <= degree; ++j) {
      basis_(k, j) = grid_.node_power(static_cast<std::size_t>(k), j) * f[static_cast<std::size_t>(k)];
    }
  }
}

Eigen::VectorXd OpaObjective::to_real(const Coefficients& c, int degree) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(2 * (degree + 1));
  for (std::size_t j = 0; j < std::min(c.size(), static_cast<std::size_t>(degree + 1)); ++j) {
    x[2 * static_cast<Eigen::Index>(j)] = c[j].real();
    x[2 * static_cast<Eigen::Index>(j) + 1] = c[j].imag();
  }
  return x;
}

Coefficients OpaObjective::to_complex(const Eigen::VectorXd& x) {
  Coefficients c(static_cast<std::size_t>(x.size() / 2));
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] = {x[2 * static_cast<Eigen::Index>(j)], x[2 * static_cast<Eigen::Index>(j) + 1]};
  }
  return c;
}

Eigen::VectorXcd OpaObjective::residual_vector(const Eigen::VectorXd& x) const {
  Eigen::VectorXcd c(degree_ + 1);
  for (int j = 0; j <= degree_; ++j) c[j] = {x[2 * j], x[2 * j + 1]};
  Eigen::VectorXcd r = -(basis_ * c);
  r.array() += 1.0;
  return r;
}

BoundarySamples OpaObjective::residual(const Eigen::VectorXd& x) const {
  const Eigen::VectorXcd r = residual_vector(x);
  return BoundarySamples(grid_, std::vector<cplx>(r.data(), r.data() + r.size()));
}

double OpaObjective::value(const Eigen::VectorXd& x) const {
  const Eigen::VectorXcd r = residual_vector(x);
  const double eps2 = eps_ * eps_;
  double acc = 0.0;
  for (Eigen::Index k = 0; k < r.size(); ++k) acc += std::pow(std::norm(r[k]) + eps2, 0.5 * p_);
  return acc / static_cast<double>(r.size());
}

double OpaObjective::value_and_gradient(const Eigen::VectorXd& x, Eigen::VectorXd& grad) const {
  const Eigen::VectorXcd r = residual_vector(x);
  const double eps2 = eps_ * eps_;
  const auto n = static_cast<double>(r.size());
  double acc = 0.0;
  // w_k = s_k^(p/2 - 1) conj(r_k), G_j = mean w_k basis(k, j)
  Eigen::VectorXcd w(r.size());
  for (Eigen::Index k = 0; k < r.size(); ++k) {
    const double s = std::norm(r[k]) + eps2;
    acc += std::pow(s, 0.5 * p_);
    w[k] = s == 0.0 ? cplx(0.0) : std::pow(s, 0.5 * p_ - 1.0) * std::conj(r[k]);
  }
  const Eigen::VectorXcd gsum = basis_.transpose() * w / n;
  grad.resize(dimension());
  for (int j = 0; j <= degree_; ++j) {
    grad[2 * j] = -p_ * gsum[j].real();
    grad[2 * j + 1] = p_ * gsum[j].imag();
  }
  return acc / n;
}

Eigen::MatrixXd OpaObjective::hessian(const Eigen::VectorXd& x) const {
  // Along coordinate a the residual moves by -w_a with w = basis_j (real part)
  // or i * basis_j (imaginary part). The second derivative of (|r|^2+eps^2)^(p/2) is
  //   p s^(p/2-1) Re(conj(w_a) w_b) + p (p-2) s^(p/2-2) Re(conj(r) w_a) Re(conj(r) w_b).
  const Eigen::VectorXcd r = residual_vector(x);
  const Eigen::Index n = r.size();
  const Eigen::Index dim = dimension();
  const double eps2 = eps_ * eps_;

  Eigen::MatrixXd re(n, dim), im(n, dim), proj(n, dim);
  Eigen::VectorXd alpha(n), beta(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double s = std::norm(r[k]) + eps2;
    alpha[k] = s == 0.0 ? 0.0 : p_ * std::pow(s, 0.5 * p_ - 1.0) / static_cast<double>(n);
    beta[k] = s == 0.0 ? 0.0 : p_ * (p_ - 2.0) * std::pow(s, 0.5 * p_ - 2.0) / static_cast<double>(n);
    for (int j = 0; j <= degree_; ++j) {
      const cplx b = basis_(k, j);
      const cplx ib = cplx(0.0, 1.0) * b;
      re(k, 2 * j) = b.real();
      im(k, 2 * j) = b.imag();
      re(k, 2 * j + 1) = ib.real();
      im(k, 2 * j + 1) = ib.imag();
      proj(k, 2 * j) = (std::conj(r[k]) * b).real();
      proj(k, 2 * j + 1) = (std::conj(r[k]) * ib).real();
    }
  }
  Eigen::MatrixXd h = re.transpose() * alpha.asDiagonal() * re;
  h.noalias() += im.transpose() * alpha.asDiagonal() * im;
  h.noalias() += proj.transpose() * beta.asDiagonal() * proj;
  return 0.5 * (h + h.transpose());
}

double OpaObjective::certificate(const Eigen::VectorXd& x) const {
  OpaObjective plain = *this;
  plain.eps_ = 0.0;
  Eigen::VectorXd g;
  plain.value_and_gradient(x, g);
  return certificate_from_gradient(g, p_);
}

OpaResult solve_opa_p2(const FunctionSpec& f, int degree, std::size_t grid_size) {
  require_degree(degree);
  const auto grid = make_grid(grid_size);
  const auto fs = sample(f, grid);
  if (vanishes_identically(fs)) throw InvalidArgument("f vanishes identically");

  auto sol = p2_solve(fs, degree);
  OpaResult result;
  result.condition_estimate = sol.condition;
  if (sol.condition > kIllConditioned) {
    result.warnings.push_back("ill-conditioned gram matrix (condition estimate " +
                              std::to_string(sol.condition) + ")");
  }
  const OpaObjective obj(fs, degree, 2.0);
  const Eigen::VectorXd x = OpaObjective::to_real(sol.coefficients, degree);
  result.coefficients = std::move(sol.coefficients);
  result.error = lp_norm(obj.residual(x), 2.0);
  result.certificate = obj.certificate(x);
  result.converged = true;
  return result;
}

OpaResult solve_opa(const FunctionSpec& f, int degree, double p, const SolverOptions& opts) {
  require_p(p);
  require_degree(degree);
  opts.validate();
  const auto grid = make_grid(opts.grid_size);
  const auto fs = sample(f, grid);
  if (vanishes_identically(fs)) throw InvalidArgument("f vanishes identically");

  OpaObjective obj(fs, degree, p);
  OpaResult result;

  if (value_at_zero(f) == 0.0) {
    // Subharmonicity makes q = 0 optimal.
    const Eigen::VectorXd x = Eigen::VectorXd::Zero(obj.dimension());
    result.coefficients = Coefficients(static_cast<std::size_t>(degree + 1), 0.0);
    result.error = lp_norm(obj.residual(x), p);
    result.certificate = obj.certificate(x);
    result.converged = true;
    return result;
  }

  Eigen::VectorXd x;
  if (opts.initial) {
    x = OpaObjective::to_real(padded(*opts.initial, degree), degree);
  } else {
    auto sol = p2_solve(fs, degree);
    result.condition_estimate = sol.condition;
    if (sol.condition > kIllConditioned) {
      result.warnings.push_back("ill-conditioned gram matrix (condition estimate " +
                                std::to_string(sol.condition) + ")");
    }
    x = OpaObjective::to_real(sol.coefficients, degree);
  }

  std::vector<double> schedule{0.0};
  if (p < 2.0) schedule = opts.smoothing_eps;

  int iterations = 0;
  StageOutcome outcome{false, std::numeric_limits<double>::infinity()};
  for (const double eps : schedule) {
    obj.set_smoothing(eps);
    const double stage_tol = eps == 0.0 ? opts.tol : std::max(opts.tol, 1e-3 * eps);
    outcome = minimize_stage(obj, x, stage_tol, opts.line_search, iterations, opts.max_iter);
  }

  obj.set_smoothing(0.0);
  result.coefficients = OpaObjective::to_complex(x);
  result.error = lp_norm(obj.residual(x), p);
  result.certificate = obj.certificate(x);
  result.iterations = iterations;
  result.converged = outcome.converged && result.certificate <= opts.tol;
  return result;
}

std::vector<OpaSequenceEntry> opa_error_sequence(const FunctionSpec& f, double p, int n_max,
                                                 const SolverOptions& opts) {
  require_p(p);
  require_degree(n_max);
  opts.validate();
  const auto grid = make_grid(opts.grid_size);
  const auto fs = sample(f, grid);

  std::vector<OpaSequenceEntry> out;
  std::optional<Coefficients> previous;
  for (int n = 0; n <= n_max; ++n) {
    SolverOptions local = opts;
    if (previous && value_at_zero(f) != 0.0) {
      const OpaObjective obj(fs, n, p);
      const auto warm = OpaObjective::to_real(padded(*previous, n), n);
      const auto cold = OpaObjective::to_real(p2_solve(fs, n).coefficients, n);
      local.initial = obj.value(warm) <= obj.value(cold) ? padded(*previous, n)
                                                         : OpaObjective::to_complex(cold);
    }
    const auto res = solve_opa(f, n, p, local);
    out.push_back({n, res.error, res.certificate, res.converged});
    previous = res.coefficients;
  }
  return out;
}

ConjectureReport conjecture_scan(const FunctionSpec& f, const std::vector<FunctionSpec>& inner_family,
                                 double p, const SolverOptions& opts) {
  require_p(p);
  if (value_at_zero(f) == 0.0) throw InvalidArgument("conjecture scan requires f(0) != 0");
  const auto grid = make_grid(opts.grid_size);
  const auto fs = sample(f, grid);
  const auto one = BoundarySamples::constant(grid, 1.0);

  const auto best = solve_opa(f, 0, p, opts);
  ConjectureReport report;
  report.p = p;
  report.best_constant = best.coefficients;

  for (std::size_t i = 0; i < inner_family.size(); ++i) {
    const auto& j = inner_family[i];
    const bool unimodular_const = j.outer_poly.size() == 1 && std::abs(std::abs(j.outer_poly[0]) - 1.0) < 1e-14;
    if (!unimodular_const || !j.has_nontrivial_inner()) {
      throw InvalidArgument("family member " + std::to_string(i) + " is not a non-constant inner function");
    }
    if (inner_value_at_zero(j) == 0.0) {
      throw InvalidArgument("family member " + std::to_string(i) + " vanishes at the origin");
    }
    const double lhs = lp_norm(one - sample(j, grid) * fs, p);
    ConjectureEntry e{i, lhs, best.error, lhs - best.error, lhs - best.error < 0.0};
    report.any_counterexample = report.any_counterexample || e.counterexample;
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace hardy
