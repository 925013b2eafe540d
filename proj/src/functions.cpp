#include "hardy/functions.hpp"

#include <cmath>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double kUnimodularTol = 1e-14;
constexpr double kAtomCollisionTol = 1e-14;

std::string show(cplx z) {
  return "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, cplx rotation)
    : zeros_(std::move(zeros)), rotation_(rotation) {
  for (const auto& a : zeros_) {
    const double m = std::abs(a);
    if (!(m > 0.0 && m < 1.0)) {
      throw InvalidArgument("blaschke zero " + show(a) + " must satisfy 0 < |a| < 1");
    }
  }
  if (std::abs(std::abs(rotation_) - 1.0) > kUnimodularTol) {
    throw InvalidArgument("blaschke rotation " + show(rotation_) + " is not unimodular");
  }
}

cplx BlaschkeProduct::operator()(cplx z) const {
  cplx acc = rotation_;
  for (const auto& a : zeros_) acc *= (z - a) / (1.0 - std::conj(a) * z);
  return acc;
}

cplx BlaschkeProduct::at_zero() const {
  cplx acc = rotation_;
  for (const auto& a : zeros_) acc *= -a;
  return acc;
}

void SingularAtom::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw InvalidArgument("atom mass must be positive, got " + std::to_string(mass));
  }
  if (std::abs(std::abs(point) - 1.0) > kUnimodularTol) {
    throw InvalidArgument("atom point " + show(point) + " is not on the unit circle");
  }
}

cplx SingularAtom::operator()(cplx z) const {
  if (std::abs(point - z) <= kAtomCollisionTol) {
    throw DomainError("evaluation at atom point " + show(point));
  }
  return std::exp(-mass * (point + z) / (point - z));
}

FunctionSpec FunctionSpec::polynomial(Coefficients coeffs) {
  FunctionSpec f;
  f.outer_poly = std::move(coeffs);
  return f;
}

FunctionSpec FunctionSpec::blaschke_product(std::vector<cplx> zeros, cplx rotation) {
  FunctionSpec f;
  f.blaschke = BlaschkeProduct(std::move(zeros), rotation);
  return f;
}

FunctionSpec FunctionSpec::atom(double mass, cplx point) {
  FunctionSpec f;
  SingularAtom a{mass, point};
  a.validate();
  f.atoms.push_back(a);
  return f;
}

bool FunctionSpec::has_nontrivial_inner() const {
  return (blaschke && blaschke->degree() > 0) || !atoms.empty();
}

FunctionSpec FunctionSpec::inner_part() const {
  FunctionSpec j = *this;
  j.outer_poly = {1.0};
  return j;
}

cplx eval_spec(const FunctionSpec& f, cplx z) {
  cplx acc = poly_eval(f.outer_poly, z);
  if (f.blaschke) acc *= (*f.blaschke)(z);
  for (const auto& atom : f.atoms) acc *= atom(z);
  return acc;
}

BoundarySamples sample(const FunctionSpec& f, const CircleGrid& grid) {
  std::vector<cplx> v(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const cplx z = grid.node(k);
    cplx acc = poly_eval(f.outer_poly, z);
    if (f.blaschke) acc *= (*f.blaschke)(z);
    for (const auto& atom : f.atoms) {
      if (std::abs(atom.point - z) <= kAtomCollisionTol) {
        throw DomainError("grid node " + std::to_string(k) + " collides with atom point " +
                          show(atom.point));
      }
      // On the circle (xi + z)/(xi - z) = -i cot((arg xi - arg z)/2).
      const double half = 0.5 * (std::arg(atom.point) - grid.angle(k));
      acc *= std::polar(1.0, atom.mass * std::cos(half) / std::sin(half));
    }
    v[k] = acc;
  }
  return BoundarySamples(grid, std::move(v));
}

cplx value_at_zero(const FunctionSpec& f) {
  cplx acc = f.outer_poly.empty() ? cplx(0.0) : f.outer_poly.front();
  return acc * inner_value_at_zero(f);
}

cplx inner_value_at_zero(const FunctionSpec& f) {
  cplx acc = f.blaschke ? f.blaschke->at_zero() : cplx(1.0);
  for (const auto& atom : f.atoms) acc *= std::exp(-atom.mass);
  return acc;
}

BoundarySamples fractional_power(const BoundarySamples& base, cplx base_at_zero, double exponent) {
  if (!(exponent > 0.0 && exponent < 2.0)) {
    throw InvalidArgument("fractional exponent must lie in (0, 2), got " + std::to_string(exponent));
  }
  if (!(base_at_zero.real() > 0.0)) {
    throw BranchViolation("value at 0 " + show(base_at_zero) + " is not in the right half-plane");
  }
  std::vector<cplx> v(base.size());
  for (std::size_t k = 0; k < base.size(); ++k) {
    const cplx b = base[k];
    if (!(b.real() > 0.0)) {
      throw BranchViolation("sample " + std::to_string(k) + " " + show(b) +
                            " is not in the right half-plane");
    }
    v[k] = std::exp(exponent * std::log(b));
  }
  return BoundarySamples(base.grid(), std::move(v));
}

BlaschkeProduct truncate_blaschke(const ZeroGenerator& zeros, int n) {
  if (n < 0) throw InvalidArgument("truncation length must be nonnegative");
  std::vector<cplx> a;
  a.reserve(static_cast<std::size_t>(n));
  cplx rotation = 1.0;
  for (int k = 1; k <= n; ++k) {
    const cplx ak = zeros(k);
    const double m = std::abs(ak);
    if (!(m > 0.0 && m < 1.0)) {
      throw InvalidArgument("generated zero " + show(ak) + " at index " + std::to_string(k) +
                            " must satisfy 0 < |a| < 1");
    }
    // (|a|/a)(a - z) = -(|a|/a)(z - a)
    rotation *= -m / ak;
    a.push_back(ak);
  }
  rotation /= std::abs(rotation);
  return BlaschkeProduct(std::move(a), rotation);
}

}  // namespace hardy
