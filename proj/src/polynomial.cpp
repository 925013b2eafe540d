#include "hardy/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace hardy {

cplx poly_eval(std::span<const cplx> coeffs, cplx z) {
  cplx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

cplx poly_derivative_eval(std::span<const cplx> coeffs, cplx z) {
  cplx acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * coeffs[k];
  return acc;
}

Coefficients poly_mul(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.empty() || b.empty()) return {};
  Coefficients out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Coefficients poly_sub(std::span<const cplx> a, std::span<const cplx> b) {
  Coefficients out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Coefficients poly_from_roots(std::span<const cplx> roots, cplx lead) {
  Coefficients out{lead};
  for (const auto& r : roots) {
    const cplx factor[2] = {-r, 1.0};
    out = poly_mul(out, factor);
  }
  return out;
}

Coefficients poly_trim(std::span<const cplx> coeffs, double rel_tol) {
  double scale = 0.0;
  for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
  std::size_t n = coeffs.size();
  while (n > 0 && std::abs(coeffs[n - 1]) <= rel_tol * scale) --n;
  return Coefficients(coeffs.begin(), coeffs.begin() + static_cast<long>(n));
}

double poly_h2_norm(std::span<const cplx> coeffs) {
  double acc = 0.0;
  for (const auto& c : coeffs) acc += std::norm(c);
  return std::sqrt(acc);
}

BoundarySamples poly_samples(std::span<const cplx> coeffs, const CircleGrid& grid) {
  return BoundarySamples::from_function(grid, [&](cplx z) { return poly_eval(coeffs, z); });
}

}  // namespace hardy
