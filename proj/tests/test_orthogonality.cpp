#include <doctest.h>

#include <cmath>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/orthogonality.hpp"
#include "hardy/polynomial.hpp"

using namespace hardy;

TEST_CASE("Pythagorean parameters") {
  const auto u = pythagorean_params(PythagoreanRegime::Upper, 1.5);
  CHECK(u.r == doctest::Approx(1.5));
  CHECK(u.K == doctest::Approx(1.0 / (std::sqrt(2.0) - 1.0)));
  const auto l = pythagorean_params(PythagoreanRegime::Lower, 1.5);
  CHECK(l.r == doctest::Approx(2.0));
  CHECK(l.K == doctest::Approx(0.5));
  const auto l3 = pythagorean_params(PythagoreanRegime::Lower, 3.0);
  CHECK(l3.r == doctest::Approx(3.0));
  CHECK(l3.K == doctest::Approx(1.0 / 3.0));
  const auto u3 = pythagorean_params(PythagoreanRegime::Upper, 3.0);
  CHECK(u3.r == doctest::Approx(2.0));
  CHECK(u3.K == doctest::Approx(2.0));
  const auto two = pythagorean_params(PythagoreanRegime::Upper, 2.0);
  CHECK(two.r == doctest::Approx(2.0));
  CHECK(two.K == doctest::Approx(1.0));
  CHECK_THROWS_AS(pythagorean_params(PythagoreanRegime::Upper, 1.0), InvalidArgument);
}

TEST_CASE("power_dual") {
  const auto g = make_grid(32);
  const auto f = BoundarySamples::constant(g, cplx(0.0, 2.0));
  const auto d = power_dual(f, 2.0);  // |f| conj(f) = 2 * (-2i)
  CHECK(std::abs(d[0] - cplx(0.0, -4.0)) < 1e-15);
  const auto z = power_dual(BoundarySamples::constant(g, 0.0), 0.5);
  CHECK(z[3] == cplx(0.0, 0.0));
}

TEST_CASE("James pairing against hand integrals") {
  const auto g = make_grid(4096);
  const auto f = poly_samples(Coefficients{1.0, 1.0}, g);
  const auto z = BoundarySamples::monomial(g, 1);
  // p = 2: mean conj(1+z) z = 1.
  CHECK(std::abs(bj_pairing(f, z, 2.0) - 1.0) < 1e-14);
  // p = 3: mean |1+z| conj(1+z) z = (1/2pi) int 4 cos^3(t/2) dt = 16/(3 pi).
  CHECK(std::abs(bj_pairing(f, z, 3.0) - 16.0 / (3.0 * M_PI)) < 1e-8);
  CHECK(bj_residual(f, z, 3.0) == doctest::Approx(16.0 / (3.0 * M_PI)).epsilon(1e-8));
}

TEST_CASE("constants are orthogonal to functions vanishing at 0") {
  const auto g = make_grid(1024);
  const auto c = BoundarySamples::constant(g, cplx(0.7, -1.1));
  const auto h = poly_samples(Coefficients{0.0, 2.0, cplx(0, 1), -0.3}, g);
  for (double p : {1.25, 1.5, 2.0, 3.0, 6.0}) CHECK(bj_residual(c, h, p) < 1e-14);
}

TEST_CASE("Pythagorean report regimes") {
  const auto g = make_grid(2048);
  const auto one = BoundarySamples::constant(g, 1.0);
  const auto h = poly_samples(Coefficients{0.0, 0.8, 0.3}, g);

  const auto low = pythagorean_report(one, h, 1.5);
  REQUIRE(low.orthogonal);
  REQUIRE(low.inequalities.size() == 2);
  CHECK(low.inequalities[0].name == "upper1");
  CHECK(low.inequalities[1].name == "lower1");
  // upper1: ||f+g||^p <= ||f||^p + K ||g||^p with K = 1/(2^(p-1)-1).
  const double K = 1.0 / (std::pow(2.0, 0.5) - 1.0);
  CHECK(low.inequalities[0].lhs == doctest::Approx(std::pow(lp_norm(one + h, 1.5), 1.5)));
  CHECK(low.inequalities[0].rhs == doctest::Approx(1.0 + K * std::pow(lp_norm(h, 1.5), 1.5)));
  for (const auto& ineq : low.inequalities) CHECK(ineq.holds);

  const auto high = pythagorean_report(one, h, 3.0);
  REQUIRE(high.inequalities.size() == 2);
  CHECK(high.inequalities[0].name == "lower2");
  CHECK(high.inequalities[1].name == "upper2");
  for (const auto& ineq : high.inequalities) CHECK(ineq.holds);

  // p = 2 is the Pythagorean theorem: both sides agree.
  const auto eq = pythagorean_report(one, h, 2.0);
  for (const auto& ineq : eq.inequalities) CHECK(std::abs(ineq.slack) < 1e-12);
}

TEST_CASE("non-orthogonal pairs produce no inequalities") {
  const auto g = make_grid(256);
  const auto one = BoundarySamples::constant(g, 1.0);
  const auto rep = pythagorean_report(one, poly_samples(Coefficients{0.1, 1.0}, g), 3.0);
  CHECK_FALSE(rep.orthogonal);
  CHECK(rep.inequalities.empty());
  CHECK(rep.residual == doctest::Approx(0.1));
}

TEST_CASE("Pythagorean inequalities on random orthogonal pairs") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  const auto g = make_grid(2048);
  for (int t = 0; t < 30; ++t) {
    Coefficients c(5);
    for (std::size_t k = 1; k < c.size(); ++k) c[k] = cplx(nd(rng), nd(rng)) * 0.5;
    const auto h = poly_samples(c, g);
    const auto f = BoundarySamples::constant(g, cplx(nd(rng), nd(rng)));
    for (double p : {1.1, 1.25, 1.5, 1.9, 2.5, 3.0, 6.0, 10.0}) {
      const auto rep = pythagorean_report(f, h, p);
      REQUIRE(rep.orthogonal);
      for (const auto& ineq : rep.inequalities) CHECK(ineq.holds);
    }
  }
}
