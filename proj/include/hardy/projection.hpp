#pragma once

// Metric projection of the constant 1 onto the shift-invariant subspace [f]_p.
//
// With J the inner part of f and Jhat = conj(J(0)) J, the projection is
//   g* = 1 - (1 - Jhat)^(2/p),
// and the distance from 1 to [f]_p equals (1 - |J(0)|^2)^(1/p).

#include <vector>

#include "hardy/functions.hpp"
#include "hardy/grid.hpp"

namespace hardy {

struct ProjectionResult {
  BoundarySamples gstar;
  /// 1 - g*, i.e. (1 - Jhat)^(2/p).
  BoundarySamples residual;
  double distance;
  cplx j_at_zero;
  /// |lp_norm(residual, p) - distance|.
  double norm_mismatch;
  /// max over k = 0..certificate_terms-1 of bj_residual(residual, z^k J, p).
  double certificate;
  int certificate_terms;
};

/// Throws InvalidArgument when f(0) = 0, p is outside (1, inf), or the
/// polynomial factor of f vanishes in the open disk; throws ConsistencyError
/// when the computed residual violates the distance or orthogonality identity
/// beyond the quadrature tolerance of the grid.
ProjectionResult project_one(const FunctionSpec& f, double p, const CircleGrid& grid,
                             int certificate_terms = 33);

/// (1 - |J(0)|^2)^(1/p); 0 for a trivial inner part, 1 when f(0) = 0 through
/// the polynomial factor.
double distance_formula(const FunctionSpec& f, double p);

struct ExtremalFbpResult {
  double c;
  std::vector<cplx> w;
  int d;
  /// prod(1 - conj(a_k) z) - (-1)^N conj(a_1...a_N) prod(z - a_k), trimmed to degree d.
  Coefficients outer_poly_coeffs;
  /// |1 - c prod(1 - conj(w_k) a_j) / prod(1 - conj(a_k) a_j)| per zero a_j.
  std::vector<double> consistency_residuals;
  /// max coefficient gap between the polynomial above and c prod(1 - conj(w_k) z).
  double coefficient_residual;
  BoundarySamples one_minus_jh;
  /// max pointwise gap between one_minus_jh and (1 - conj(J(0)) J)^(2/p).
  double identity_residual;
};

/// Extremal residual 1 - J h* for the finite Blaschke product with the given
/// zeros (rotation 1). Throws OuternessViolation when the reduced polynomial
/// has a root inside the open disk and ConsistencyError when the consistency
/// conditions fail beyond 1e-9.
ExtremalFbpResult finite_blaschke_extremal(const std::vector<cplx>& zeros, double p,
                                           const CircleGrid& grid);

/// max over n = 0..m_max of |mean (1 - J h*)^<p-1> J z^n|.
double spicyham_check(const ExtremalFbpResult& result, const std::vector<cplx>& zeros, double p,
                      const CircleGrid& grid, int m_max);

struct TruncationRow {
  int n;
  double j_at_zero_modulus;
  double distance;
};

/// Distances for the truncations J_n of a Blaschke sequence.
std::vector<TruncationRow> truncation_distance_experiment(const ZeroGenerator& zeros, double p,
                                                          const std::vector<int>& n_list);

struct MultiplicityFamilyReport {
  std::vector<TruncationRow> rows;
  /// Whether |B_n(0)| > |B_{n+1}(0)| held for every consecutive pair.
  bool strictly_decreasing;
};

/// B_n with an n-fold zero at 1 - 1/n, for each n in n_list (n >= 2).
MultiplicityFamilyReport multiplicity_family_experiment(double p, const std::vector<int>& n_list);

}  // namespace hardy
