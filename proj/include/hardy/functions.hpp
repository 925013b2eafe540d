#pragma once

// Finite descriptions of H^p functions: f = B * S * P with a finite Blaschke
// product B, a finite product S of atomic singular inner factors, and a
// polynomial P playing the role of the outer factor.

#include <functional>
#include <optional>
#include <vector>

#include "hardy/grid.hpp"
#include "hardy/polynomial.hpp"

namespace hardy {

/// rotation * prod_k (z - a_k) / (1 - conj(a_k) z); repeated zeros encode multiplicity.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  /// Throws InvalidArgument unless every zero satisfies 0 < |a| < 1 and |rotation| = 1.
  explicit BlaschkeProduct(std::vector<cplx> zeros, cplx rotation = 1.0);

  const std::vector<cplx>& zeros() const { return zeros_; }
  cplx rotation() const { return rotation_; }
  std::size_t degree() const { return zeros_.size(); }

  cplx operator()(cplx z) const;
  /// rotation * prod (-a_k).
  cplx at_zero() const;

 private:
  std::vector<cplx> zeros_;
  cplx rotation_ = 1.0;
};

/// exp(-mass * (point + z) / (point - z)).
struct SingularAtom {
  double mass = 1.0;
  cplx point = 1.0;

  /// Throws InvalidArgument unless mass > 0 and |point| = 1.
  void validate() const;
  cplx operator()(cplx z) const;
};

struct FunctionSpec {
  std::optional<BlaschkeProduct> blaschke;
  std::vector<SingularAtom> atoms;
  Coefficients outer_poly{1.0};

  static FunctionSpec polynomial(Coefficients coeffs);
  static FunctionSpec blaschke_product(std::vector<cplx> zeros, cplx rotation = 1.0);
  static FunctionSpec atom(double mass, cplx point = 1.0);

  /// True when the spec has Blaschke zeros or atoms (a non-constant inner part).
  bool has_nontrivial_inner() const;
  /// The inner part alone (outer_poly replaced by [1]).
  FunctionSpec inner_part() const;
};

/// Product of all factors at z, |z| <= 1. Throws DomainError at an atom's point.
cplx eval_spec(const FunctionSpec& f, cplx z);

/// Samples on the grid. Atom factors are evaluated with an exactly imaginary
/// exponent on the circle, so inner parts are unimodular to rounding.
BoundarySamples sample(const FunctionSpec& f, const CircleGrid& grid);

/// f(0) in closed form.
cplx value_at_zero(const FunctionSpec& f);

/// J(0) for the inner part J = Blaschke * atoms (1 when the inner part is trivial).
cplx inner_value_at_zero(const FunctionSpec& f);

/// Pointwise exp(exponent * Log(base)) on the principal branch. The base and
/// base_at_zero must lie in Re > 0 and exponent in (0, 2); otherwise throws
/// BranchViolation (values) or InvalidArgument (exponent).
BoundarySamples fractional_power(const BoundarySamples& base, cplx base_at_zero, double exponent);

/// Produces the k-th zero of a Blaschke sequence, k = 1, 2, ...
using ZeroGenerator = std::function<cplx(int)>;

/// First n factors in the normalized form (|a|/a)(a - z)/(1 - conj(a) z),
/// represented with the rotation prod(-|a_k|/a_k) so that J_n(0) = prod |a_k| > 0.
BlaschkeProduct truncate_blaschke(const ZeroGenerator& zeros, int n);

}  // namespace hardy
