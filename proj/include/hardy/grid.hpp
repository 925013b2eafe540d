#pragma once

// Uniform quadrature on the unit circle.
//
// Nodes sit at the midpoints theta_k = 2*pi*(k + 1/2)/N, so no node ever
// coincides with z = 1. All integrals are taken against normalized Lebesgue
// measure, i.e. every node carries weight 1/N.

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace hardy {

using cplx = std::complex<double>;

inline constexpr std::size_t kMinGridSize = 16;
inline constexpr std::size_t kDefaultGridSize = 4096;

class CircleGrid {
 public:
  /// Throws InvalidArgument when size < kMinGridSize.
  explicit CircleGrid(std::size_t size);

  std::size_t size() const { return nodes_->size(); }
  double weight() const { return 1.0 / static_cast<double>(size()); }
  std::span<const cplx> nodes() const { return *nodes_; }
  const cplx& node(std::size_t k) const { return (*nodes_)[k]; }
  double angle(std::size_t k) const;

  /// zeta_k^n computed from the exact integer phase (2k+1)n mod 2N.
  cplx node_power(std::size_t k, long n) const;

  /// Grids are identified by size: two grids of equal size have equal nodes.
  bool operator==(const CircleGrid& other) const { return size() == other.size(); }

 private:
  std::shared_ptr<const std::vector<cplx>> nodes_;
};

CircleGrid make_grid(std::size_t size);

/// Function values at the nodes of a grid.
class BoundarySamples {
 public:
  BoundarySamples(CircleGrid grid, std::vector<cplx> values);

  /// Samples of the function z -> fn(z).
  template <typename Fn>
  static BoundarySamples from_function(const CircleGrid& grid, Fn&& fn) {
    std::vector<cplx> v(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) v[k] = fn(grid.node(k));
    return BoundarySamples(grid, std::move(v));
  }
  static BoundarySamples constant(const CircleGrid& grid, cplx value);
  /// Samples of z^n.
  static BoundarySamples monomial(const CircleGrid& grid, long n);

  const CircleGrid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  std::span<const cplx> values() const { return values_; }
  const cplx& operator[](std::size_t k) const { return values_[k]; }

  BoundarySamples operator+(const BoundarySamples& o) const;
  BoundarySamples operator-(const BoundarySamples& o) const;
  /// Pointwise product.
  BoundarySamples operator*(const BoundarySamples& o) const;
  BoundarySamples operator*(cplx c) const;
  BoundarySamples conj() const;
  /// Pointwise multiplication by z^n.
  BoundarySamples shifted(long n) const;

  double max_abs_diff(const BoundarySamples& o) const;

 private:
  CircleGrid grid_;
  std::vector<cplx> values_;
};

/// Throws InvalidArgument unless both samples live on the same grid.
void require_same_grid(const BoundarySamples& a, const BoundarySamples& b);

/// (mean |f|^p)^(1/p), p in (1, inf).
double lp_norm(const BoundarySamples& f, double p);

/// mean f * conj(g).
cplx dual_pair(const BoundarySamples& f, const BoundarySamples& g);

/// Discrete (1/2 pi i) \oint g psi dzeta = mean g * psi * zeta.
cplx cauchy_functional(const BoundarySamples& g, const BoundarySamples& psi);

/// mean f * zeta^(-n); requires |n| < N/2.
cplx fourier_coefficient(const BoundarySamples& f, long n);

enum class FourierMethod { Direct, Fast };

/// Coefficients for n = first, ..., last (inclusive), each |n| < N/2.
/// The fast path runs one FFT; it agrees with direct summation to ~1e-15.
std::vector<cplx> fourier_coefficients(const BoundarySamples& f, long first, long last,
                                       FourierMethod method = FourierMethod::Direct);

}  // namespace hardy
