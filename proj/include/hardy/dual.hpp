#pragma once

// The dual extremal problem: for an inner function J,
//   sup { |(1/2 pi i) \oint g conj(J) dzeta| : ||g||_q <= 1 }
// equals the distance (1 - |J(0)|^2)^(1/p) with 1/p + 1/q = 1.

#include <functional>
#include <vector>

#include "hardy/functions.hpp"
#include "hardy/grid.hpp"

namespace hardy {

struct DualProblem {
  std::vector<cplx> zeros;
  double q = 2.0;
  /// Degree of the polynomial ansatz for the maximizer.
  int search_degree = 24;

  /// Throws InvalidArgument for q outside (1, inf), an empty zero list, zeros
  /// outside 0 < |a| < 1, or search_degree below the number of zeros.
  void validate() const;
};

/// sum_j g(a_j) prod_k (1 - conj(a_k) a_j) / prod_{k != j} (a_k - a_j).
/// Throws InvalidArgument when two zeros coincide.
cplx residue_sum(const std::vector<cplx>& zeros, const std::function<cplx(cplx)>& g);
cplx residue_sum(const DualProblem& prob, const FunctionSpec& g);

/// cauchy_functional(g, conj(J)) for the Blaschke product with these zeros.
cplx contour_functional(const std::vector<cplx>& zeros, const BoundarySamples& g);

struct DualOptions {
  std::size_t grid_size = kDefaultGridSize;
  /// Stop once the coefficient gradient of log|L(g)| - log||g||_q is this small.
  double tol = 1e-8;
  int max_iter = 5000;
  /// Unimodular phase applied to the starting coefficients.
  cplx initial_phase = 1.0;
};

struct DualResult {
  double value;
  Coefficients maximizer;
  bool converged;
  int iterations;
  double gradient_norm;
};

/// Ascent over polynomials g of degree search_degree, renormalized to
/// ||g||_q = 1 after every step. The value is a lower bound on the supremum up
/// to quadrature error. A line search that stalls with gradient norm below
/// 1e-6 counts as converged. Non-convergence returns the best iterate.
DualResult dual_sup(const DualProblem& prob, const DualOptions& opts = {});

/// (1 - prod |a_k|^2)^(1/p), the exact supremum.
double dual_exact(const std::vector<cplx>& zeros, double q);

/// ((1 - |a|^2) / (1 - conj(a) z)^2)^(1/q): unit L^q norm, attains the
/// supremum for a single zero a.
BoundarySamples single_zero_extremal(cplx a, double q, const CircleGrid& grid);

struct StrictInequalityResult {
  double lhs;
  double rhs;
  double margin;
  double margin_min;
  bool holds;
  double lhs_exact;
  double rhs_exact;
  /// |J_1(0)|^2 (1 - |J_2(0)|^2), the exact gap between the p-th powers.
  double exact_margin;
  bool lhs_converged;
  bool rhs_converged;
};

/// lhs from zeros1 alone, rhs from zeros1 followed by zeros2. holds requires
/// rhs - lhs > 10 * opts.tol. Throws InvalidArgument for q = 1 or empty lists.
StrictInequalityResult verify_strict_inequality(const std::vector<cplx>& zeros1,
                                                const std::vector<cplx>& zeros2, double q,
                                                int search_degree = 24, const DualOptions& opts = {});

struct TwoFactorGap {
  double lhs;           ///< (1 - |a|^2)^(1/p)
  double rhs_estimate;  ///< dual_sup on {a, b}
  double rhs_exact;     ///< (1 - |ab|^2)^(1/p)
  double gap;
  bool holds;
};

/// Throws InvalidArgument when a = b.
TwoFactorGap two_factor_gap(cplx a, cplx b, double q, int search_degree = 24,
                            const DualOptions& opts = {});

}  // namespace hardy
