#include <doctest.h>

#include <cmath>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/functions.hpp"

using namespace hardy;

TEST_CASE("Blaschke product validation") {
  CHECK_THROWS_AS(BlaschkeProduct({0.0}), InvalidArgument);
  CHECK_THROWS_AS(BlaschkeProduct({1.0}), InvalidArgument);
  CHECK_THROWS_AS(BlaschkeProduct({cplx(0.8, 0.7)}), InvalidArgument);
  CHECK_THROWS_AS(BlaschkeProduct({0.5}, cplx(1.0, 0.1)), InvalidArgument);
  CHECK_NOTHROW(BlaschkeProduct({0.5, 0.5}, std::polar(1.0, 0.3)));
}

TEST_CASE("eval_spec examples") {
  CHECK(std::abs(eval_spec(FunctionSpec::blaschke_product({0.5}), 0.0) + 0.5) < 1e-15);
  CHECK(std::abs(eval_spec(FunctionSpec::atom(1.0), 0.0) - std::exp(-1.0)) < 1e-15);
  CHECK(std::abs(eval_spec(FunctionSpec{}, cplx(0.3, 0.2)) - 1.0) < 1e-15);
  CHECK_THROWS_AS(eval_spec(FunctionSpec::atom(1.0), 1.0), DomainError);
  // Blaschke factor vanishes at its zero.
  CHECK(std::abs(eval_spec(FunctionSpec::blaschke_product({cplx(0.2, -0.4)}), cplx(0.2, -0.4))) < 1e-15);
}

TEST_CASE("inner parts are unimodular on the grid") {
  const auto g = make_grid(4096);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> m(0.05, 0.95), t(-M_PI, M_PI);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<cplx> zeros;
    for (int k = 0; k < 4; ++k) zeros.push_back(std::polar(m(rng), t(rng)));
    auto f = FunctionSpec::blaschke_product(zeros, std::polar(1.0, t(rng)));
    f.atoms.push_back({m(rng) * 2.0, std::polar(1.0, t(rng))});
    const auto s = sample(f, g);
    for (std::size_t k = 0; k < g.size(); ++k) CHECK(std::abs(std::abs(s[k]) - 1.0) < 1e-10);
  }
  const auto atom = sample(FunctionSpec::atom(1.0), g);
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(std::abs(std::abs(atom[k]) - 1.0) < 1e-10);
}

TEST_CASE("sample of a polynomial") {
  const auto g = make_grid(32);
  const auto s = sample(FunctionSpec::polynomial({1.0, 1.0}), g);
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(std::abs(s[k] - (1.0 + g.node(k))) < 1e-15);
}

TEST_CASE("atom samples approach interior values radially") {
  // exp(-(1+z)/(1-z)) at z = r e^{it} tends to the boundary sample as r -> 1.
  const auto g = make_grid(64);
  const auto s = sample(FunctionSpec::atom(1.0), g);
  const auto spec = FunctionSpec::atom(1.0);
  for (std::size_t k = 10; k < 54; k += 11) {
    CHECK(std::abs(eval_spec(spec, g.node(k) * (1.0 - 1e-9)) - s[k]) < 1e-6);
  }
}

TEST_CASE("value_at_zero examples") {
  CHECK(std::abs(value_at_zero(FunctionSpec::blaschke_product({0.5, 0.5})) - 0.25) < 1e-15);
  CHECK(std::abs(value_at_zero(FunctionSpec::atom(1.0)) - std::exp(-1.0)) < 1e-15);
  CHECK(value_at_zero(FunctionSpec::polynomial({0.0, 1.0})) == 0.0);
  auto f = FunctionSpec::blaschke_product({cplx(0.1, 0.2)}, cplx(0, 1));
  f.outer_poly = {2.0, 1.0};
  f.atoms.push_back({0.5, cplx(0, 1)});
  CHECK(std::abs(value_at_zero(f) - eval_spec(f, 0.0)) < 1e-15);
  CHECK(std::abs(inner_value_at_zero(f) - eval_spec(f.inner_part(), 0.0)) < 1e-15);
}

TEST_CASE("fractional_power examples") {
  const auto g = make_grid(64);
  const auto one = fractional_power(BoundarySamples::constant(g, 1.0), 1.0, 2.0 / 3.0);
  const auto two = fractional_power(BoundarySamples::constant(g, 4.0), 4.0, 0.5);
  for (std::size_t k = 0; k < g.size(); ++k) {
    CHECK(std::abs(one[k] - 1.0) < 1e-15);
    CHECK(std::abs(two[k] - 2.0) < 1e-15);
  }
  const auto j = sample(FunctionSpec::blaschke_product({0.5}), g);
  const auto base = BoundarySamples::constant(g, 1.0) - j * cplx(-0.5);
  CHECK(fractional_power(base, 0.75, 1.0).max_abs_diff(base) < 1e-15);
}

TEST_CASE("fractional_power composes and guards its branch") {
  const auto g = make_grid(256);
  const auto j = sample(FunctionSpec::blaschke_product({0.6, cplx(0, -0.3)}), g);
  const cplx j0 = 0.6 * cplx(0, -0.3);
  const auto base = BoundarySamples::constant(g, 1.0) - j * std::conj(j0);
  const double b0 = 1.0 - std::norm(j0);
  const auto half = fractional_power(base, b0, 0.5);
  const auto composed = fractional_power(half, std::sqrt(b0), 1.5);
  CHECK(composed.max_abs_diff(fractional_power(base, b0, 0.75)) < 1e-12);

  CHECK_THROWS_AS(fractional_power(BoundarySamples::constant(g, -1.0), 1.0, 0.5), BranchViolation);
  CHECK_THROWS_AS(fractional_power(BoundarySamples::constant(g, 1.0), -1.0, 0.5), BranchViolation);
  CHECK_THROWS_AS(fractional_power(BoundarySamples::constant(g, 1.0), 1.0, 2.5), InvalidArgument);
}

TEST_CASE("truncate_blaschke") {
  const ZeroGenerator halving = [](int k) { return 1.0 - std::pow(2.0, -k); };
  double expected = 1.0;
  for (int n = 1; n <= 10; ++n) {
    expected *= 1.0 - std::pow(2.0, -n);
    const auto b = truncate_blaschke(halving, n);
    CHECK(b.degree() == static_cast<std::size_t>(n));
    CHECK(std::abs(b.at_zero() - expected) < 1e-15);
    CHECK(std::abs(b(0.0) - expected) < 1e-14);
  }
  CHECK(truncate_blaschke(halving, 0).degree() == 0);
  CHECK(std::abs(truncate_blaschke(halving, 0)(cplx(0.3, 0.1)) - 1.0) < 1e-15);

  // n-fold zero at 1 - 1/n, here n = 2.
  const auto b2 = truncate_blaschke([](int) { return 0.5; }, 2);
  CHECK(std::abs(std::abs(b2.at_zero()) - 0.25) < 1e-15);

  const auto complex_zero = truncate_blaschke([](int) { return cplx(0, 0.5); }, 1);
  CHECK(std::abs(complex_zero.at_zero() - 0.5) < 1e-15);
  CHECK_THROWS_AS(truncate_blaschke([](int) { return 1.2; }, 1), InvalidArgument);
}
