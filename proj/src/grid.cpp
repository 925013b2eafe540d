#include "hardy/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

// exp(i*pi*m/N) for an integer phase index m, reduced into [0, 2N).
cplx half_step_phase(long m, std::size_t n_nodes) {
  const long two_n = 2 * static_cast<long>(n_nodes);
  long r = m % two_n;
  if (r < 0) r += two_n;
  return std::polar(1.0, std::numbers::pi * static_cast<double>(r) / static_cast<double>(n_nodes));
}

void require_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw InvalidArgument("exponent p must lie in (1, inf), got " + std::to_string(p));
  }
}

}  // namespace

CircleGrid::CircleGrid(std::size_t size) {
  if (size < kMinGridSize) {
    throw InvalidArgument("grid size must be at least " + std::to_string(kMinGridSize) +
                          ", got " + std::to_string(size));
  }
  auto nodes = std::make_shared<std::vector<cplx>>(size);
  for (std::size_t k = 0; k < size; ++k) {
    (*nodes)[k] = half_step_phase(static_cast<long>(2 * k + 1), size);
  }
  nodes_ = std::move(nodes);
}

double CircleGrid::angle(std::size_t k) const {
  return std::numbers::pi * static_cast<double>(2 * k + 1) / static_cast<double>(size());
}

cplx CircleGrid::node_power(std::size_t k, long n) const {
  // (2k+1)*n can overflow only for absurd n; reduce n first.
  const long two_n = 2 * static_cast<long>(size());
  const long nr = n % two_n;
  return half_step_phase(static_cast<long>(2 * k + 1) * nr, size());
}

CircleGrid make_grid(std::size_t size) { return CircleGrid(size); }

BoundarySamples::BoundarySamples(CircleGrid grid, std::vector<cplx> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw InvalidArgument("sample count " + std::to_string(values_.size()) +
                          " does not match grid size " + std::to_string(grid_.size()));
  }
}

BoundarySamples BoundarySamples::constant(const CircleGrid& grid, cplx value) {
  return BoundarySamples(grid, std::vector<cplx>(grid.size(), value));
}

BoundarySamples BoundarySamples::monomial(const CircleGrid& grid, long n) {
  std::vector<cplx> v(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) v[k] = grid.node_power(k, n);
  return BoundarySamples(grid, std::move(v));
}

BoundarySamples BoundarySamples::operator+(const BoundarySamples& o) const {
  require_same_grid(*this, o);
  std::vector<cplx> v(values_);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += o.values_[k];
  return BoundarySamples(grid_, std::move(v));
}

BoundarySamples BoundarySamples::operator-(const BoundarySamples& o) const {
  require_same_grid(*this, o);
  std::vector<cplx> v(values_);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] -= o.values_[k];
  return BoundarySamples(grid_, std::move(v));
}

BoundarySamples BoundarySamples::operator*(const BoundarySamples& o) const {
  require_same_grid(*this, o);
  std::vector<cplx> v(values_);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] *= o.values_[k];
  return BoundarySamples(grid_, std::move(v));
}

BoundarySamples BoundarySamples::operator*(cplx c) const {
  std::vector<cplx> v(values_);
  for (auto& x : v) x *= c;
  return BoundarySamples(grid_, std::move(v));
}

BoundarySamples BoundarySamples::conj() const {
  std::vector<cplx> v(values_);
  for (auto& x : v) x = std::conj(x);
  return BoundarySamples(grid_, std::move(v));
}

BoundarySamples BoundarySamples::shifted(long n) const {
  std::vector<cplx> v(values_);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] *= grid_.node_power(k, n);
  return BoundarySamples(grid_, std::move(v));
}

double BoundarySamples::max_abs_diff(const BoundarySamples& o) const {
  require_same_grid(*this, o);
  double m = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) m = std::max(m, std::abs(values_[k] - o.values_[k]));
  return m;
}

void require_same_grid(const BoundarySamples& a, const BoundarySamples& b) {
  if (!(a.grid() == b.grid())) {
    throw InvalidArgument("grid mismatch: " + std::to_string(a.grid().size()) + " vs " +
                          std::to_string(b.grid().size()) + " nodes");
  }
}

double lp_norm(const BoundarySamples& f, double p) {
  require_p(p);
  // Scale by the largest modulus so |f|^p cannot overflow or underflow.
  double scale = 0.0;
  for (const auto& v : f.values()) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (const auto& v : f.values()) acc += std::pow(std::abs(v) / scale, p);
  return scale * std::pow(acc * f.grid().weight(), 1.0 / p);
}

cplx dual_pair(const BoundarySamples& f, const BoundarySamples& g) {
  require_same_grid(f, g);
  cplx acc = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) acc += f[k] * std::conj(g[k]);
  return acc * f.grid().weight();
}

cplx fourier_coefficient(const BoundarySamples& f, long n) {
  const auto& grid = f.grid();
  if (2 * std::abs(n) >= static_cast<long>(grid.size())) {
    throw InvalidArgument("fourier index " + std::to_string(n) + " aliases on a grid of " +
                          std::to_string(grid.size()) + " nodes");
  }
  cplx acc = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) acc += f[k] * grid.node_power(k, -n);
  return acc * grid.weight();
}

cplx cauchy_functional(const BoundarySamples& g, const BoundarySamples& psi) {
  return fourier_coefficient(g * psi, -1);
}

std::vector<cplx> fourier_coefficients(const BoundarySamples& f, long first, long last,
                                       FourierMethod method) {
  if (last < first) return {};
  const auto& grid = f.grid();
  const long n_nodes = static_cast<long>(grid.size());
  if (2 * std::max(std::abs(first), std::abs(last)) >= n_nodes) {
    throw InvalidArgument("fourier index range [" + std::to_string(first) + ", " +
                          std::to_string(last) + "] aliases on a grid of " +
                          std::to_string(n_nodes) + " nodes");
  }
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  if (method == FourierMethod::Direct) {
    for (long n = first; n <= last; ++n) out.push_back(fourier_coefficient(f, n));
    return out;
  }

  // sum_k f_k e^{-i n theta_k} = e^{-i pi n / N} * DFT(f)[n mod N]
  std::vector<cplx> in(f.values().begin(), f.values().end());
  std::vector<cplx> spec(in.size());
  // The FFTW planner is not reentrant.
  static std::mutex planner_mutex;
  std::unique_lock lock(planner_mutex);
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n_nodes),
                                    reinterpret_cast<fftw_complex*>(in.data()),
                                    reinterpret_cast<fftw_complex*>(spec.data()),
                                    FFTW_FORWARD, FFTW_ESTIMATE);
  lock.unlock();
  fftw_execute(plan);
  lock.lock();
  fftw_destroy_plan(plan);
  lock.unlock();
  for (long n = first; n <= last; ++n) {
    const long idx = ((n % n_nodes) + n_nodes) % n_nodes;
    out.push_back(spec[static_cast<std::size_t>(idx)] * half_step_phase(-n, grid.size()) *
                  grid.weight());
  }
  return out;
}

}  // namespace hardy
