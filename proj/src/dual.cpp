#include "hardy/dual.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

void require_q(double q) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw InvalidArgument("exponent q must lie in (1, inf), got " + std::to_string(q));
  }
}

double conjugate_exponent(double q) { return q / (q - 1.0); }

void require_distinct(const std::vector<cplx>& zeros) {
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    for (std::size_t j = i + 1; j < zeros.size(); ++j) {
      if (std::abs(zeros[i] - zeros[j]) <= 1e-14) {
        throw InvalidArgument("residue formula needs distinct zeros");
      }
    }
  }
}

// Scale-invariant objective log|L(c)| - (1/q) log mean |g_c|^q and its
// gradient in the sense c -> c + t * grad.
struct DualObjective {
  Eigen::MatrixXcd basis;  // basis(k, j) = zeta_k^j
  Eigen::VectorXcd ell;    // L(c) = ell . c
  double q;

  double value(const Eigen::VectorXcd& c, Eigen::VectorXcd* grad) const {
    const Eigen::VectorXcd g = basis * c;
    const cplx l = (ell.transpose() * c)(0);
    const double n = static_cast<double>(g.size());
    double mean_q = 0.0;
    Eigen::VectorXcd w(g.size());
    for (Eigen::Index k = 0; k < g.size(); ++k) {
      const double m = std::abs(g(k));
      mean_q += std::pow(m, q);
      w(k) = m == 0.0 ? cplx{} : std::pow(m, q - 2.0) * g(k);
    }
    mean_q /= n;
    const double al = std::abs(l);
    if (al == 0.0 || mean_q == 0.0) {
      if (grad) *grad = Eigen::VectorXcd::Zero(c.size());
      return -std::numeric_limits<double>::infinity();
    }
    if (grad) {
      const Eigen::VectorXcd pulled = basis.adjoint() * w / n;
      *grad = l * ell.conjugate() / (al * al) - pulled / mean_q;
    }
    return std::log(al) - std::log(mean_q) / q;
  }

  double norm_q(const Eigen::VectorXcd& c) const {
    const Eigen::VectorXcd g = basis * c;
    double s = 0.0;
    for (Eigen::Index k = 0; k < g.size(); ++k) s += std::pow(std::abs(g(k)), q);
    return std::pow(s / static_cast<double>(g.size()), 1.0 / q);
  }
};

}  // namespace

void DualProblem::validate() const {
  require_q(q);
  if (zeros.empty()) throw InvalidArgument("dual problem needs at least one zero");
  for (const auto& a : zeros) {
    const double m = std::abs(a);
    if (!(m > 0.0 && m < 1.0)) throw InvalidArgument("zeros must satisfy 0 < |a| < 1");
  }
  if (search_degree < static_cast<int>(zeros.size())) {
    throw InvalidArgument("search degree must be at least the number of zeros");
  }
}

cplx residue_sum(const std::vector<cplx>& zeros, const std::function<cplx(cplx)>& g) {
  require_distinct(zeros);
  cplx total = 0.0;
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    const cplx aj = zeros[j];
    cplx num = g(aj);
    cplx den = 1.0;
    for (std::size_t k = 0; k < zeros.size(); ++k) {
      num *= 1.0 - std::conj(zeros[k]) * aj;
      if (k != j) den *= zeros[k] - aj;
    }
    total += num / den;
  }
  return total;
}

cplx residue_sum(const DualProblem& prob, const FunctionSpec& g) {
  prob.validate();
  return residue_sum(prob.zeros, [&](cplx z) { return eval_spec(g, z); });
}

cplx contour_functional(const std::vector<cplx>& zeros, const BoundarySamples& g) {
  const BlaschkeProduct j(zeros);
  const auto jc = BoundarySamples::from_function(g.grid(), [&](cplx z) { return std::conj(j(z)); });
  return cauchy_functional(g, jc);
}

DualResult dual_sup(const DualProblem& prob, const DualOptions& opts) {
  prob.validate();
  const auto grid = make_grid(opts.grid_size);
  const int m = prob.search_degree;
  if (2 * (m + 2) >= static_cast<int>(grid.size())) {
    throw InvalidArgument("search degree too large for the grid");
  }

  const BlaschkeProduct blaschke(prob.zeros);
  const auto js = BoundarySamples::from_function(grid, [&](cplx z) { return blaschke(z); });
  const auto jhat = fourier_coefficients(js, 1, m + 1, FourierMethod::Fast);

  DualObjective obj{Eigen::MatrixXcd(grid.size(), m + 1), Eigen::VectorXcd(m + 1), prob.q};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    for (int j = 0; j <= m; ++j) obj.basis(static_cast<Eigen::Index>(k), j) = grid.node_power(k, j);
  }
  for (int j = 0; j <= m; ++j) obj.ell(j) = std::conj(jhat[static_cast<std::size_t>(j)]);

  // The q = 2 maximizer.
  Eigen::VectorXcd c = obj.ell.conjugate() * opts.initial_phase;
  c /= obj.norm_q(c);

  Eigen::VectorXcd grad;
  double val = obj.value(c, &grad);
  Eigen::VectorXcd prev_c, prev_grad;
  double step = 1.0;
  int it = 0;
  bool converged = false;
  constexpr double armijo = 1e-4;
  constexpr int max_halvings = 60;
  for (; it < opts.max_iter; ++it) {
    if (grad.norm() <= opts.tol) {
      converged = true;
      break;
    }
    if (it > 0) {
      // Barzilai-Borwein step for ascent.
      const Eigen::VectorXcd s = c - prev_c;
      const Eigen::VectorXcd y = grad - prev_grad;
      const double sy = -s.dot(y).real();
      if (sy > 0.0) step = s.squaredNorm() / sy;
    }
    const double g2 = grad.squaredNorm();
    Eigen::VectorXcd trial_grad;
    Eigen::VectorXcd trial;
    double trial_val = val;
    bool accepted = false;
    for (int k = 0; k < max_halvings; ++k) {
      trial = c + step * grad;
      trial_val = obj.value(trial, &trial_grad);
      if (trial_val >= val + armijo * step * g2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    const double scale = obj.norm_q(trial);
    prev_c = c;
    prev_grad = grad;
    // The objective is scale invariant; renormalizing rescales the gradient inversely.
    c = trial / scale;
    grad = trial_grad * scale;
    val = trial_val;
  }
  // A failed line search with a gradient this small means log-values no longer
  // resolve the remaining ascent.
  constexpr double kRoundingFloor = 1e-6;
  if (!converged && it < opts.max_iter && grad.norm() <= std::max(opts.tol, kRoundingFloor)) converged = true;

  const double nq = obj.norm_q(c);
  c /= nq;
  const double value = std::abs((obj.ell.transpose() * c)(0));
  return {value, Coefficients(c.data(), c.data() + c.size()), converged, it, grad.norm()};
}

double dual_exact(const std::vector<cplx>& zeros, double q) {
  require_q(q);
  double prod = 1.0;
  for (const auto& a : zeros) prod *= std::norm(a);
  return std::pow(1.0 - prod, 1.0 / conjugate_exponent(q));
}

BoundarySamples single_zero_extremal(cplx a, double q, const CircleGrid& grid) {
  require_q(q);
  const double m = std::abs(a);
  if (!(m < 1.0)) throw InvalidArgument("zero must lie in the open disk");
  const double log_c = std::log(1.0 - m * m);
  // 1 - conj(a) z stays in Re > 0, so its principal logarithm is analytic on the disk.
  return BoundarySamples::from_function(grid, [&](cplx z) {
    return std::exp((log_c - 2.0 * std::log(1.0 - std::conj(a) * z)) / q);
  });
}

StrictInequalityResult verify_strict_inequality(const std::vector<cplx>& zeros1,
                                                const std::vector<cplx>& zeros2, double q,
                                                int search_degree, const DualOptions& opts) {
  require_q(q);
  if (zeros1.empty() || zeros2.empty()) throw InvalidArgument("both zero lists must be nonempty");
  std::vector<cplx> combined = zeros1;
  combined.insert(combined.end(), zeros2.begin(), zeros2.end());

  const auto lhs = dual_sup({zeros1, q, search_degree}, opts);
  const auto rhs = dual_sup({combined, q, search_degree}, opts);

  double j1 = 1.0;
  double j2 = 1.0;
  for (const auto& a : zeros1) j1 *= std::norm(a);
  for (const auto& a : zeros2) j2 *= std::norm(a);

  StrictInequalityResult out{};
  out.lhs = lhs.value;
  out.rhs = rhs.value;
  out.margin = rhs.value - lhs.value;
  out.margin_min = 10.0 * opts.tol;
  out.holds = out.margin > out.margin_min;
  out.lhs_exact = dual_exact(zeros1, q);
  out.rhs_exact = dual_exact(combined, q);
  out.exact_margin = j1 * (1.0 - j2);
  out.lhs_converged = lhs.converged;
  out.rhs_converged = rhs.converged;
  return out;
}

TwoFactorGap two_factor_gap(cplx a, cplx b, double q, int search_degree, const DualOptions& opts) {
  require_q(q);
  if (std::abs(a - b) <= 1e-14) throw InvalidArgument("two_factor_gap needs a != b");
  const double p = conjugate_exponent(q);
  TwoFactorGap out{};
  out.lhs = std::pow(1.0 - std::norm(a), 1.0 / p);
  out.rhs_estimate = dual_sup({{a, b}, q, search_degree}, opts).value;
  out.rhs_exact = dual_exact({a, b}, q);
  out.gap = out.rhs_estimate - out.lhs;
  out.holds = out.gap > 10.0 * opts.tol;
  return out;
}

}  // namespace hardy
