#pragma once

// Birkhoff-James orthogonality in L^p of the circle and the Pythagorean
// inequalities that accompany it.

#include <string>
#include <vector>

#include "hardy/grid.hpp"

namespace hardy {

inline constexpr double kOrthogonalityTol = 1e-10;

enum class PythagoreanRegime { Lower, Upper };

struct PythagoreanParams {
  PythagoreanRegime regime;
  double p;
  double r;
  double K;
};

/// (r, K) for the requested regime:
///   p in (1,2]: upper -> (p, 1/(2^(p-1)-1)), lower -> (2, p-1)
///   p in [2,oo): lower -> (p, 1/(2^(p-1)-1)), upper -> (2, p-1)
PythagoreanParams pythagorean_params(PythagoreanRegime regime, double p);

/// |f|^(s-1) conj(f), zero wherever f vanishes.
BoundarySamples power_dual(const BoundarySamples& f, double s);

/// |mean |f|^(p-2) conj(f) g|; zero exactly when f is orthogonal to g.
double bj_residual(const BoundarySamples& f, const BoundarySamples& g, double p);

/// The signed pairing mean |f|^(p-2) conj(f) g behind bj_residual.
cplx bj_pairing(const BoundarySamples& f, const BoundarySamples& g, double p);

struct InequalityCheck {
  std::string name;
  double lhs;
  double rhs;
  /// Nonnegative iff the inequality holds (rhs - lhs for "<=", lhs - rhs for ">=").
  double slack;
  bool holds;
};

struct PythagoreanReport {
  bool orthogonal;
  double residual;
  double p;
  std::vector<InequalityCheck> inequalities;
};

/// For f orthogonal to g, evaluates (upper1, lower1) when p <= 2 and
/// (lower2, upper2) when p > 2. Non-orthogonal inputs produce a report with
/// orthogonal = false and no inequalities.
PythagoreanReport pythagorean_report(const BoundarySamples& f, const BoundarySamples& g, double p,
                                     double tol = kOrthogonalityTol);

}  // namespace hardy
