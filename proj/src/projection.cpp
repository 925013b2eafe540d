#include "hardy/projection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/orthogonality.hpp"
#include "hardy/polynomial.hpp"
#include "hardy/roots.hpp"

namespace hardy {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kCertificateTol = 1e-9;
// Uniform quadrature of an atomic singular inner factor aliases at the
// 1e-5..1e-4 level on practical grids; identities are only checked that far.
constexpr double kAtomQuadratureTol = 5e-3;
constexpr double kConsistencyTol = 1e-9;

void require_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw InvalidArgument("exponent p must lie in (1, inf), got " + std::to_string(p));
  }
}

void require_outer_polynomial(const Coefficients& poly) {
  const auto rep = root_report(poly);
  if (!rep.in_disk.empty()) {
    throw InvalidArgument("polynomial factor vanishes inside the disk (|root| = " +
                          std::to_string(std::abs(rep.in_disk.front())) + ")");
  }
}

}  // namespace

ProjectionResult project_one(const FunctionSpec& f, double p, const CircleGrid& grid,
                             int certificate_terms) {
  require_p(p);
  if (value_at_zero(f) == 0.0) throw InvalidArgument("projection requires f(0) != 0");
  require_outer_polynomial(f.outer_poly);

  const cplx j0 = inner_value_at_zero(f);
  const auto j = sample(f.inner_part(), grid);
  const auto one = BoundarySamples::constant(grid, 1.0);

  if (!f.has_nontrivial_inner()) {
    // Outer f: [f]_p is all of H^p and 1 projects onto itself.
    const auto zero = BoundarySamples::constant(grid, 0.0);
    return {one, zero, 0.0, j0, 0.0, 0.0, certificate_terms};
  }

  const double j0_sq = std::norm(j0);
  const auto base = one - j * std::conj(j0);
  const auto residual = fractional_power(base, 1.0 - j0_sq, 2.0 / p);
  const double distance = std::pow(1.0 - j0_sq, 1.0 / p);

  double certificate = 0.0;
  for (int k = 0; k < certificate_terms; ++k) {
    certificate = std::max(certificate, bj_residual(residual, j.shifted(k), p));
  }
  const double mismatch = std::abs(lp_norm(residual, p) - distance);

  const bool atoms = !f.atoms.empty();
  const double norm_tol = atoms ? kAtomQuadratureTol : kNormTol;
  const double cert_tol = atoms ? kAtomQuadratureTol : kCertificateTol;
  if (mismatch > norm_tol || certificate > cert_tol) {
    throw ConsistencyError("projection identities fail on a " + std::to_string(grid.size()) +
                           "-node grid (norm mismatch " + std::to_string(mismatch) +
                           ", certificate " + std::to_string(certificate) + "); refine the grid");
  }
  return {one - residual, residual, distance, j0, mismatch, certificate, certificate_terms};
}

double distance_formula(const FunctionSpec& f, double p) {
  require_p(p);
  if (!f.outer_poly.empty() && f.outer_poly.front() == 0.0) return 1.0;
  if (!f.has_nontrivial_inner()) return 0.0;
  return std::pow(1.0 - std::norm(inner_value_at_zero(f)), 1.0 / p);
}

ExtremalFbpResult finite_blaschke_extremal(const std::vector<cplx>& zeros, double p,
                                           const CircleGrid& grid) {
  require_p(p);
  if (zeros.empty()) throw InvalidArgument("extremal construction needs at least one zero");
  const BlaschkeProduct blaschke(zeros);

  cplx prod = 1.0;
  for (const auto& a : zeros) prod *= a;
  const double n_sign = zeros.size() % 2 == 0 ? 1.0 : -1.0;

  Coefficients left{1.0};
  for (const auto& a : zeros) {
    const cplx factor[2] = {1.0, -std::conj(a)};
    left = poly_mul(left, factor);
  }
  Coefficients right = poly_from_roots(zeros, n_sign * std::conj(prod));
  // The degree-N terms cancel exactly; trim the rounding left behind.
  const Coefficients full = poly_sub(left, right);
  Coefficients reduced = poly_trim(full, 1e-13);
  if (reduced.empty()) throw ConsistencyError("reduced polynomial vanished");

  ExtremalFbpResult out{1.0 - std::norm(prod), {}, static_cast<int>(reduced.size()) - 1, {}, {}, 0.0,
                        BoundarySamples::constant(grid, 0.0), 0.0};

  if (out.d >= 1) {
    for (const auto& root : poly_roots(reduced)) {
      if (std::abs(root) < 1.0 - kDiskMargin) {
        throw OuternessViolation("reduced polynomial has a root of modulus " +
                                 std::to_string(std::abs(root)) + " inside the disk");
      }
      out.w.push_back(1.0 / std::conj(root));
    }
  }
  out.outer_poly_coeffs = reduced;

  // c prod (1 - conj(w_k) z) against the reduced polynomial, coefficient-wise.
  Coefficients rebuilt{out.c};
  for (const auto& w : out.w) {
    const cplx factor[2] = {1.0, -std::conj(w)};
    rebuilt = poly_mul(rebuilt, factor);
  }
  const auto gap = poly_sub(full, rebuilt);
  out.coefficient_residual = 0.0;
  for (const auto& g : gap) out.coefficient_residual = std::max(out.coefficient_residual, std::abs(g));

  for (const auto& aj : zeros) {
    cplx num = out.c;
    for (const auto& w : out.w) num *= 1.0 - std::conj(w) * aj;
    cplx den = 1.0;
    for (const auto& ak : zeros) den *= 1.0 - std::conj(ak) * aj;
    out.consistency_residuals.push_back(std::abs(1.0 - num / den));
  }
  const double worst = std::max(
      out.coefficient_residual,
      *std::max_element(out.consistency_residuals.begin(), out.consistency_residuals.end()));
  if (worst > kConsistencyTol) {
    throw ConsistencyError("consistency conditions fail with residual " + std::to_string(worst));
  }

  const auto base = BoundarySamples::from_function(grid, [&](cplx z) {
    cplx v = out.c;
    for (const auto& w : out.w) v *= 1.0 - std::conj(w) * z;
    for (const auto& a : zeros) v /= 1.0 - std::conj(a) * z;
    return v;
  });
  out.one_minus_jh = fractional_power(base, out.c, 2.0 / p);

  const cplx j0 = blaschke.at_zero();
  const auto jhat_base = BoundarySamples::from_function(
      grid, [&](cplx z) { return 1.0 - std::conj(j0) * blaschke(z); });
  const auto reference = fractional_power(jhat_base, 1.0 - std::norm(j0), 2.0 / p);
  out.identity_residual = out.one_minus_jh.max_abs_diff(reference);
  if (out.identity_residual > kConsistencyTol) {
    throw ConsistencyError("extremal residual disagrees with (1 - conj(J(0))J)^(2/p) by " +
                           std::to_string(out.identity_residual));
  }
  return out;
}

double spicyham_check(const ExtremalFbpResult& result, const std::vector<cplx>& zeros, double p,
                      const CircleGrid& grid, int m_max) {
  require_p(p);
  const BlaschkeProduct blaschke(zeros);
  const auto j = BoundarySamples::from_function(grid, [&](cplx z) { return blaschke(z); });
  const auto weighted = power_dual(result.one_minus_jh, p - 1.0) * j;
  double worst = 0.0;
  for (int n = 0; n <= m_max; ++n) worst = std::max(worst, std::abs(fourier_coefficient(weighted, -n)));
  return worst;
}

std::vector<TruncationRow> truncation_distance_experiment(const ZeroGenerator& zeros, double p,
                                                          const std::vector<int>& n_list) {
  require_p(p);
  std::vector<TruncationRow> rows;
  for (const int n : n_list) {
    const auto jn = truncate_blaschke(zeros, n);
    const double m = std::abs(jn.at_zero());
    rows.push_back({n, m, std::pow(std::max(0.0, 1.0 - m * m), 1.0 / p)});
  }
  return rows;
}

MultiplicityFamilyReport multiplicity_family_experiment(double p, const std::vector<int>& n_list) {
  require_p(p);
  MultiplicityFamilyReport rep{{}, true};
  for (const int n : n_list) {
    if (n < 2) throw InvalidArgument("multiplicity family needs n >= 2");
    const double a = 1.0 - 1.0 / static_cast<double>(n);
    const BlaschkeProduct bn(std::vector<cplx>(static_cast<std::size_t>(n), a));
    const double m = std::abs(bn.at_zero());
    rep.rows.push_back({n, m, std::pow(1.0 - m * m, 1.0 / p)});
  }
  for (std::size_t k = 0; k + 1 < rep.rows.size(); ++k) {
    if (!(rep.rows[k].j_at_zero_modulus > rep.rows[k + 1].j_at_zero_modulus)) rep.strictly_decreasing = false;
  }
  return rep;
}

}  // namespace hardy
