#include "hardy/orthogonality.hpp"

#include <cmath>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

// Equality cases (p = 2, Parseval) land on rounding noise.
constexpr double kSlackTol = 1e-12;

void require_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw InvalidArgument("exponent p must lie in (1, inf), got " + std::to_string(p));
  }
}

InequalityCheck check_le(std::string name, double lhs, double rhs) {
  const double slack = rhs - lhs;
  return {std::move(name), lhs, rhs, slack, slack >= -kSlackTol * std::max(1.0, std::abs(rhs))};
}

InequalityCheck check_ge(std::string name, double lhs, double rhs) {
  const double slack = lhs - rhs;
  return {std::move(name), lhs, rhs, slack, slack >= -kSlackTol * std::max(1.0, std::abs(rhs))};
}

}  // namespace

PythagoreanParams pythagorean_params(PythagoreanRegime regime, double p) {
  require_p(p);
  const double k_power = 1.0 / (std::pow(2.0, p - 1.0) - 1.0);
  const bool power_side = (p <= 2.0) == (regime == PythagoreanRegime::Upper);
  if (power_side) return {regime, p, p, k_power};
  return {regime, p, 2.0, p - 1.0};
}

BoundarySamples power_dual(const BoundarySamples& f, double s) {
  if (!(s > 0.0)) throw InvalidArgument("power_dual exponent must be positive");
  std::vector<cplx> v(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double m = std::abs(f[k]);
    v[k] = m == 0.0 ? cplx(0.0) : std::pow(m, s - 1.0) * std::conj(f[k]);
  }
  return BoundarySamples(f.grid(), std::move(v));
}

cplx bj_pairing(const BoundarySamples& f, const BoundarySamples& g, double p) {
  require_p(p);
  require_same_grid(f, g);
  const auto fd = power_dual(f, p - 1.0);
  cplx acc = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) acc += fd[k] * g[k];
  return acc * f.grid().weight();
}

double bj_residual(const BoundarySamples& f, const BoundarySamples& g, double p) {
  return std::abs(bj_pairing(f, g, p));
}

PythagoreanReport pythagorean_report(const BoundarySamples& f, const BoundarySamples& g, double p,
                                     double tol) {
  PythagoreanReport report{false, bj_residual(f, g, p), p, {}};
  if (report.residual > tol) return report;
  report.orthogonal = true;

  const double nf = lp_norm(f, p);
  const double ng = lp_norm(g, p);
  const double nsum = lp_norm(f + g, p);
  const double k_power = 1.0 / (std::pow(2.0, p - 1.0) - 1.0);

  if (p <= 2.0) {
    report.inequalities.push_back(
        check_le("upper1", std::pow(nsum, p), std::pow(nf, p) + k_power * std::pow(ng, p)));
    report.inequalities.push_back(
        check_ge("lower1", nsum * nsum, nf * nf + (p - 1.0) * ng * ng));
  } else {
    report.inequalities.push_back(
        check_ge("lower2", std::pow(nsum, p), std::pow(nf, p) + k_power * std::pow(ng, p)));
    report.inequalities.push_back(
        check_le("upper2", nsum * nsum, nf * nf + (p - 1.0) * ng * ng));
  }
  return report;
}

}  // namespace hardy
