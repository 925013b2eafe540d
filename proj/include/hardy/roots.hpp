#pragma once

// Polynomial roots and the lower bounds on the roots of optimal polynomial
// approximants inside the unit disk.

#include <limits>
#include <string>
#include <vector>

#include "hardy/functions.hpp"
#include "hardy/opa.hpp"

namespace hardy {

/// Roots with |w| < 1 - kDiskMargin count as inside the disk; roots within
/// kDiskMargin of the circle are boundary-ambiguous and excluded from bounds.
inline constexpr double kDiskMargin = 1e-12;

/// Absolute slack tolerated before a bound is reported as violated.
inline constexpr double kBoundTol = 1e-9;

/// All complex roots with multiplicity: eigenvalues of the balanced companion
/// matrix, each followed by one Newton step. Trailing zero coefficients are
/// dropped first. Throws InvalidArgument for the zero polynomial or a constant.
std::vector<cplx> poly_roots(const Coefficients& coeffs);

struct BoundCheck {
  std::string name;
  double lhs;
  double rhs;
  double slack;
  bool satisfied;
};

struct RootReport {
  std::vector<cplx> roots;
  std::vector<cplx> in_disk;
  std::vector<cplx> boundary;
  /// |w_1 ... w_k| over in-disk roots, 1 if there are none.
  double product_modulus = 1.0;
  /// min |w| over in-disk roots, +inf if there are none.
  double min_modulus = std::numeric_limits<double>::infinity();
  std::vector<BoundCheck> bounds;
};

/// Roots of an approximant. Coefficients below 1e-14 of the largest are
/// trimmed from the top, which only discards roots of enormous modulus.
RootReport root_report(const Coefficients& coeffs);

/// |w_1...w_k| >= (1 - ||1 - q f||_p^p)^(1/2) / |J(0)|.
/// Throws InvalidArgument when J(0) = 0.
BoundCheck check_product_bound(const FunctionSpec& f, const OpaResult& opa, double p);

/// min |w| over in-disk roots >= (1 - ||1 - q f||_p^p)^(1/2); vacuous without in-disk roots.
BoundCheck check_centner_bound(const OpaResult& opa, double p);

/// (1 - [1 - |f(0)|^2/||f||_2^2]^(p/2))^(1/2) / |J(0)| for 1 < p < 2.
double bound_p_less_2(const FunctionSpec& f, double p);

/// (1/|J(0)|) (1 - (A/(1+A))^(p/2))^(1/2) with A = (p-1)||f - f(0)||_p^2/|f(0)|^2, p > 2.
double bound_p_greater_2(const FunctionSpec& f, double p, std::size_t grid_size = kDefaultGridSize);

struct ZeroOpaBound {
  bool degenerate;  ///< f(0) = 0: the best constant is 0 and the error is 1.
  double r;
  double K;
  double A;
  /// Upper bound on ||1 - q_0 f||_p^r.
  double bound_on_error_to_the_r;
};

/// A^(r/(r-1))/(1 + A^(1/(r-1)))^r + A/(1 + A^(1/(r-1)))^r with
/// A = K ||(f - f(0))/(z f(0))||_p^r and (r, K) the upper Pythagorean parameters.
ZeroOpaBound lemma_0opa_bound(const FunctionSpec& f, double p, std::size_t grid_size = kDefaultGridSize);

struct TrajectoryRow {
  int n;
  double p;
  cplx root;
  double modulus;
  bool in_disk;
};

struct EscapeReport {
  /// min in-disk root modulus per degree n = 1..n_max (+inf when none).
  std::vector<std::pair<int, double>> min_modulus;
  /// For each radius: first n after which no computed root has modulus <= radius,
  /// or -1 when roots inside that radius persist up to n_max.
  std::vector<std::pair<double, int>> escape_degree;
  std::vector<TrajectoryRow> trajectory;
  bool all_converged = true;
};

EscapeReport escape_tracker(const FunctionSpec& f, double p, int n_max, const std::vector<double>& radii,
                            const SolverOptions& opts = {});

}  // namespace hardy
