#pragma once

// Optimal polynomial approximants: the degree-n polynomial q minimizing
// ||1 - q f||_p on the circle grid.
//
// At p = 2 the minimizer solves a Hermitian Toeplitz system. For other p the
// convex objective F(c) = mean |1 - q_c f|^p is minimized over the real
// coordinates (Re c_0, Im c_0, Re c_1, ...) by BFGS with backtracking, warm
// started from the p = 2 solution. For p < 2 the objective is smoothed as
// (|r|^2 + eps^2)^(p/2) along a decreasing eps schedule ending at 0.
//
// Termination is on the Birkhoff-James certificate
//   max_k |mean |r|^(p-2) conj(r) z^k f|,  r = 1 - q f,
// which vanishes exactly at the minimizer.

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "hardy/functions.hpp"
#include "hardy/grid.hpp"

namespace hardy {

struct LineSearchOptions {
  double armijo = 1e-4;
  double shrink = 0.5;
  int max_steps = 60;
};

struct SolverOptions {
  std::size_t grid_size = kDefaultGridSize;
  double tol = 1e-10;
  int max_iter = 500;
  std::vector<double> smoothing_eps{1e-2, 1e-4, 1e-6, 0.0};
  LineSearchOptions line_search;
  /// Starting coefficients; defaults to the p = 2 solution. Shorter vectors are zero-padded.
  std::optional<Coefficients> initial;

  /// Throws InvalidArgument on tol <= 0, max_iter < 1, or a smoothing schedule
  /// that is not strictly decreasing to 0.
  void validate() const;
};

struct OpaResult {
  Coefficients coefficients;
  double error = 1.0;
  double certificate = 0.0;
  int iterations = 0;
  bool converged = false;
  double condition_estimate = 1.0;
  std::vector<std::string> warnings;
};

/// F(c) and its derivatives in the real coordinatization of c.
class OpaObjective {
 public:
  OpaObjective(const BoundarySamples& f, int degree, double p, double smoothing = 0.0);

  int degree() const { return degree_; }
  Eigen::Index dimension() const { return 2 * (degree_ + 1); }
  double p() const { return p_; }
  double smoothing() const { return eps_; }
  void set_smoothing(double eps) { eps_ = eps; }

  double value(const Eigen::VectorXd& x) const;
  double value_and_gradient(const Eigen::VectorXd& x, Eigen::VectorXd& grad) const;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const;

  /// Samples of 1 - q f.
  BoundarySamples residual(const Eigen::VectorXd& x) const;
  /// Unsmoothed Birkhoff-James certificate at x.
  double certificate(const Eigen::VectorXd& x) const;

  static Eigen::VectorXd to_real(const Coefficients& c, int degree);
  static Coefficients to_complex(const Eigen::VectorXd& x);

 private:
  Eigen::VectorXcd residual_vector(const Eigen::VectorXd& x) const;

  CircleGrid grid_;
  int degree_;
  double p_;
  double eps_;
  // basis_(k, j) = zeta_k^j f(zeta_k)
  Eigen::MatrixXcd basis_;
};

/// Closed-form p = 2 approximant on a grid of the given size.
/// Throws InvalidArgument when f vanishes identically or degree < 0.
OpaResult solve_opa_p2(const FunctionSpec& f, int degree, std::size_t grid_size = kDefaultGridSize);

/// Throws InvalidArgument for p outside (1, inf) or degree < 0. Exhausting
/// max_iter returns the best iterate with converged = false.
OpaResult solve_opa(const FunctionSpec& f, int degree, double p, const SolverOptions& opts = {});

struct OpaSequenceEntry {
  int degree;
  double error;
  double certificate;
  bool converged;
};

/// Approximants for n = 0..n_max, each warm started from the better of the
/// previous solution and the p = 2 solution.
std::vector<OpaSequenceEntry> opa_error_sequence(const FunctionSpec& f, double p, int n_max,
                                                 const SolverOptions& opts = {});

struct ConjectureEntry {
  std::size_t index;
  double lhs;  ///< ||1 - J f||_p
  double rhs;  ///< min over c of ||1 - c f||_p
  double margin;
  bool counterexample;
};

struct ConjectureReport {
  double p;
  Coefficients best_constant;
  std::vector<ConjectureEntry> entries;
  bool any_counterexample = false;
};

/// Compares ||1 - J f||_p against the best constant multiple of f for every
/// non-constant inner J in the family. Throws InvalidArgument for a family
/// member that is not a non-constant inner function.
ConjectureReport conjecture_scan(const FunctionSpec& f, const std::vector<FunctionSpec>& inner_family,
                                 double p, const SolverOptions& opts = {});

}  // namespace hardy
