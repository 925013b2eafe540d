#include "hardy/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/orthogonality.hpp"
#include "hardy/polynomial.hpp"

namespace hardy {

namespace {

// Parlett-Reinsch balancing with radix 2; leaves eigenvalues unchanged.
void balance(Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double row = 0.0;
      double col = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        col += std::abs(a(j, i));
        row += std::abs(a(i, j));
      }
      if (col == 0.0 || row == 0.0) continue;
      double g = row / radix;
      double f = 1.0;
      const double s = col + row;
      while (col < g) {
        f *= radix;
        col *= radix * radix;
      }
      g = row * radix;
      while (col > g) {
        f /= radix;
        col /= radix * radix;
      }
      if ((col + row) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

double ensure_j0(const FunctionSpec& f) {
  const double j0 = std::abs(inner_value_at_zero(f));
  if (j0 == 0.0) throw InvalidArgument("inner part vanishes at the origin");
  return j0;
}

}  // namespace

std::vector<cplx> poly_roots(const Coefficients& coeffs) {
  const Coefficients c = poly_trim(coeffs);
  if (c.empty()) throw InvalidArgument("zero polynomial has no well-defined roots");
  if (c.size() == 1) throw InvalidArgument("constant polynomial has no roots");

  const Eigen::Index n = static_cast<Eigen::Index>(c.size()) - 1;
  if (n == 1) return {-c[0] / c[1]};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  balance(companion);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw ConsistencyError("companion eigenvalue iteration failed");

  std::vector<cplx> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  for (auto& r : roots) {
    const cplx v = poly_eval(c, r);
    const cplx dv = poly_derivative_eval(c, r);
    if (dv == 0.0) continue;
    const cplx polished = r - v / dv;
    if (std::isfinite(polished.real()) && std::isfinite(polished.imag()) &&
        std::abs(poly_eval(c, polished)) < std::abs(v)) {
      r = polished;
    }
  }
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
  return roots;
}

RootReport root_report(const Coefficients& coeffs) {
  RootReport rep;
  const Coefficients c = poly_trim(coeffs, 1e-14);
  if (c.size() < 2) return rep;
  rep.roots = poly_roots(c);
  for (const auto& r : rep.roots) {
    const double m = std::abs(r);
    if (m < 1.0 - kDiskMargin) {
      rep.in_disk.push_back(r);
      rep.product_modulus *= m;
      rep.min_modulus = std::min(rep.min_modulus, m);
    } else if (m <= 1.0 + kDiskMargin) {
      rep.boundary.push_back(r);
    }
  }
  return rep;
}

BoundCheck check_product_bound(const FunctionSpec& f, const OpaResult& opa, double p) {
  const double j0 = ensure_j0(f);
  const auto rep = root_report(opa.coefficients);
  const double inner = std::max(0.0, 1.0 - std::pow(opa.error, p));
  const double rhs = std::sqrt(inner) / j0;
  const double slack = rep.product_modulus - rhs;
  return {"product", rep.product_modulus, rhs, slack, slack >= -kBoundTol};
}

BoundCheck check_centner_bound(const OpaResult& opa, double p) {
  const auto rep = root_report(opa.coefficients);
  const double rhs = std::sqrt(std::max(0.0, 1.0 - std::pow(opa.error, p)));
  if (rep.in_disk.empty()) return {"centner", rep.min_modulus, rhs, rep.min_modulus, true};
  const double slack = rep.min_modulus - rhs;
  return {"centner", rep.min_modulus, rhs, slack, slack >= -kBoundTol};
}

double bound_p_less_2(const FunctionSpec& f, double p) {
  if (!(p > 1.0 && p < 2.0)) throw InvalidArgument("bound_p_less_2 requires 1 < p < 2");
  const cplx f0 = value_at_zero(f);
  if (f0 == 0.0) throw InvalidArgument("bound requires f(0) != 0");
  const double j0 = ensure_j0(f);
  // Inner factors are unimodular on the circle, so ||f||_2 is the H^2 norm of the polynomial.
  const double h2 = poly_h2_norm(f.outer_poly);
  const double ratio = std::norm(f0) / (h2 * h2);
  const double base = std::max(0.0, 1.0 - ratio);
  return std::sqrt(std::max(0.0, 1.0 - std::pow(base, 0.5 * p))) / j0;
}

double bound_p_greater_2(const FunctionSpec& f, double p, std::size_t grid_size) {
  if (!(p > 2.0) || !std::isfinite(p)) throw InvalidArgument("bound_p_greater_2 requires 2 < p < inf");
  const cplx f0 = value_at_zero(f);
  if (f0 == 0.0) throw InvalidArgument("bound requires f(0) != 0");
  const double j0 = ensure_j0(f);
  const auto grid = make_grid(grid_size);
  const auto fs = sample(f, grid);
  const double dev = lp_norm(fs - BoundarySamples::constant(grid, f0), p);
  const double a = (p - 1.0) * dev * dev / std::norm(f0);
  const double frac = a / (1.0 + a);
  return std::sqrt(std::max(0.0, 1.0 - std::pow(frac, 0.5 * p))) / j0;
}

ZeroOpaBound lemma_0opa_bound(const FunctionSpec& f, double p, std::size_t grid_size) {
  const auto params = pythagorean_params(PythagoreanRegime::Upper, p);
  ZeroOpaBound out{false, params.r, params.K, 0.0, 0.0};
  const cplx f0 = value_at_zero(f);
  if (f0 == 0.0) {
    out.degenerate = true;
    out.A = std::numeric_limits<double>::quiet_NaN();
    out.bound_on_error_to_the_r = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const auto grid = make_grid(grid_size);
  const auto fs = sample(f, grid);
  // |z| = 1 on the circle, so ||(f - f(0))/(z f(0))||_p = ||f - f(0)||_p / |f(0)|.
  const double dev = lp_norm(fs - BoundarySamples::constant(grid, f0), p) / std::abs(f0);
  const double r = params.r;
  out.A = params.K * std::pow(dev, r);
  const double b = std::pow(out.A, 1.0 / (r - 1.0));
  out.bound_on_error_to_the_r = (std::pow(out.A, r / (r - 1.0)) + out.A) / std::pow(1.0 + b, r);
  return out;
}

EscapeReport escape_tracker(const FunctionSpec& f, double p, int n_max, const std::vector<double>& radii,
                            const SolverOptions& opts) {
  if (value_at_zero(f) == 0.0) throw InvalidArgument("escape tracking requires f(0) != 0");
  if (n_max < 0) throw InvalidArgument("n_max must be nonnegative");
  EscapeReport rep;
  std::optional<Coefficients> previous;
  for (int n = 0; n <= n_max; ++n) {
    SolverOptions local = opts;
    if (previous) {
      Coefficients init = *previous;
      init.resize(static_cast<std::size_t>(n + 1), 0.0);
      local.initial = init;
    }
    const auto opa = solve_opa(f, n, p, local);
    rep.all_converged = rep.all_converged && opa.converged;
    previous = opa.coefficients;

    const auto roots = root_report(opa.coefficients);
    rep.min_modulus.emplace_back(n, roots.min_modulus);
    for (const auto& w : roots.roots) {
      rep.trajectory.push_back({n, p, w, std::abs(w), std::abs(w) < 1.0 - kDiskMargin});
    }
  }
  for (const double radius : radii) {
    int escaped = -1;
    for (int k = static_cast<int>(rep.min_modulus.size()) - 1; k >= 0; --k) {
      if (rep.min_modulus[static_cast<std::size_t>(k)].second <= radius) break;
      escaped = rep.min_modulus[static_cast<std::size_t>(k)].first;
    }
    rep.escape_degree.emplace_back(radius, escaped);
  }
  return rep;
}

}  // namespace hardy
