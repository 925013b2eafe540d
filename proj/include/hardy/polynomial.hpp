#pragma once

// Dense complex polynomials stored as ascending coefficient lists.

#include <span>
#include <vector>

#include "hardy/grid.hpp"

namespace hardy {

using Coefficients = std::vector<cplx>;

cplx poly_eval(std::span<const cplx> coeffs, cplx z);
cplx poly_derivative_eval(std::span<const cplx> coeffs, cplx z);
Coefficients poly_mul(std::span<const cplx> a, std::span<const cplx> b);
Coefficients poly_sub(std::span<const cplx> a, std::span<const cplx> b);

/// lead * prod (z - r_k).
Coefficients poly_from_roots(std::span<const cplx> roots, cplx lead = 1.0);

/// Drops trailing coefficients with modulus <= rel_tol * max modulus.
Coefficients poly_trim(std::span<const cplx> coeffs, double rel_tol = 0.0);

/// sqrt(sum |c_k|^2): the H^2 norm of the polynomial.
double poly_h2_norm(std::span<const cplx> coeffs);

BoundarySamples poly_samples(std::span<const cplx> coeffs, const CircleGrid& grid);

}  // namespace hardy
