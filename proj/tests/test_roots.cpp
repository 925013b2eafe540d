#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/roots.hpp"

using namespace hardy;

TEST_CASE("poly_roots examples") {
  auto r = poly_roots({-0.25, 0.0, 1.0});
  std::sort(r.begin(), r.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  CHECK(std::abs(r[0] + 0.5) < 1e-15);
  CHECK(std::abs(r[1] - 0.5) < 1e-15);
  const auto lin = poly_roots({15.0 / 16.0, -0.75});
  CHECK(std::abs(lin[0] - 1.25) < 1e-15);
  for (const auto& w : poly_roots({1.0, -2.0, 1.0})) CHECK(std::abs(w - 1.0) < 1e-6);
  CHECK(poly_roots({1.0, 1.0, 0.0, 0.0}).size() == 1);
  CHECK_THROWS_AS(poly_roots({0.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(poly_roots({2.0}), InvalidArgument);
}

TEST_CASE("root finder reconstructs random polynomials") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int deg = 1; deg <= 40; ++deg) {
    Coefficients c(static_cast<std::size_t>(deg + 1));
    for (auto& v : c) v = {u(rng), u(rng)};
    const auto roots = poly_roots(c);
    REQUIRE(roots.size() == static_cast<std::size_t>(deg));
    const auto rebuilt = poly_from_roots(roots, c.back());
    double scale = 0.0, err = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      scale = std::max(scale, std::abs(c[k]));
      err = std::max(err, std::abs(rebuilt[k] - c[k]));
    }
    CHECK(err <= 1e-8 * scale);
  }
}

TEST_CASE("root report classification") {
  const auto rep = root_report(poly_from_roots(std::vector<cplx>{0.5, cplx(0, -0.25), 2.0, cplx(1.0, 0.0)}));
  CHECK(rep.in_disk.size() == 2);
  CHECK(rep.boundary.size() == 1);
  CHECK(rep.product_modulus == doctest::Approx(0.125));
  CHECK(rep.min_modulus == doctest::Approx(0.25));
  const auto none = root_report({1.0});
  CHECK(none.roots.empty());
  CHECK(none.product_modulus == 1.0);
  CHECK(std::isinf(none.min_modulus));
}

TEST_CASE("product bound examples") {
  const auto b = FunctionSpec::blaschke_product({0.5});
  for (int n : {0, 4}) {
    const auto chk = check_product_bound(b, solve_opa(b, n, 2.0), 2.0);
    CHECK(chk.lhs == doctest::Approx(1.0));
    CHECK(std::abs(chk.lhs - chk.rhs) < 1e-9);
    CHECK(chk.satisfied);
  }
  const auto h = FunctionSpec::polynomial({1.0, 0.5});
  const auto chk = check_product_bound(h, solve_opa(h, 0, 2.0), 2.0);
  CHECK(chk.lhs == 1.0);
  CHECK(chk.rhs == doctest::Approx(std::sqrt(0.8)).epsilon(1e-12));
  CHECK(chk.satisfied);
  const auto three = check_product_bound(b, solve_opa(b, 8, 3.0), 3.0);
  CHECK(three.satisfied);
  CHECK(three.slack > 0.0);
}

TEST_CASE("Centner bound") {
  const auto b = FunctionSpec::blaschke_product({0.5});
  const auto vac = check_centner_bound(solve_opa(b, 0, 2.0), 2.0);
  CHECK(vac.satisfied);
  const auto pair = FunctionSpec::blaschke_product({0.5, -0.6});
  for (int n : {2, 6, 10}) CHECK(check_centner_bound(solve_opa(pair, n, 2.5), 2.5).satisfied);
}

TEST_CASE("p < 2 bound examples") {
  const double b = bound_p_less_2(FunctionSpec::blaschke_product({0.5}), 1.5);
  CHECK(b == doctest::Approx(std::sqrt(1.0 - std::pow(0.75, 0.75)) / 0.5));
  CHECK(bound_p_less_2(FunctionSpec{}, 1.5) == doctest::Approx(1.0));
  CHECK(bound_p_less_2(FunctionSpec::polynomial({1.0, 0.5}), 1.5) ==
        doctest::Approx(std::sqrt(1.0 - std::pow(0.2, 0.75))));
  CHECK_THROWS_AS(bound_p_less_2(FunctionSpec{}, 2.0), InvalidArgument);
  CHECK_THROWS_AS(bound_p_less_2(FunctionSpec{}, 1.0), InvalidArgument);
}

TEST_CASE("p > 2 bound examples") {
  CHECK(bound_p_greater_2(FunctionSpec{}, 3.0) == doctest::Approx(1.0));
  CHECK(bound_p_greater_2(FunctionSpec::polynomial({1.0, 0.5}), 3.0) ==
        doctest::Approx(std::sqrt(1.0 - std::pow(1.0 / 3.0, 1.5))).epsilon(1e-12));
  const auto b = FunctionSpec::blaschke_product({0.5});
  const auto opa = solve_opa(b, 6, 4.0);
  CHECK(root_report(opa.coefficients).product_modulus >= bound_p_greater_2(b, 4.0) - kBoundTol);
  CHECK_THROWS_AS(bound_p_greater_2(FunctionSpec{}, 2.0), InvalidArgument);
}

TEST_CASE("degree-0 bound") {
  const auto h = FunctionSpec::polynomial({1.0, 0.5});
  const auto two = lemma_0opa_bound(h, 2.0);
  CHECK(two.r == 2.0);
  CHECK(two.K == doctest::Approx(1.0));
  CHECK(two.A == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(two.bound_on_error_to_the_r == doctest::Approx(0.2).epsilon(1e-12));
  const auto e = solve_opa(h, 0, 2.0).error;
  CHECK(std::abs(e * e - two.bound_on_error_to_the_r) < 1e-10);

  const auto flat = lemma_0opa_bound(FunctionSpec{}, 3.0);
  CHECK(flat.A == 0.0);
  CHECK(flat.bound_on_error_to_the_r == 0.0);

  const auto three = lemma_0opa_bound(h, 3.0);
  CHECK(three.A == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(three.bound_on_error_to_the_r == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(std::pow(solve_opa(h, 0, 3.0).error, 2.0) <= three.bound_on_error_to_the_r);

  CHECK(lemma_0opa_bound(FunctionSpec::polynomial({0.0, 1.0}), 3.0).degenerate);
}

TEST_CASE("bounds hold on random specs") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> m(0.1, 0.9), r(1.2, 3.0), t(-M_PI, M_PI);
  for (int trial = 0; trial < 6; ++trial) {
    auto f = FunctionSpec::blaschke_product({std::polar(m(rng), t(rng)), std::polar(m(rng), t(rng))});
    f.outer_poly = poly_from_roots(std::vector<cplx>{std::polar(r(rng), t(rng))});
    for (double p : {1.5, 2.5, 4.0}) {
      const auto opa = solve_opa(f, 3 + trial, p);
      REQUIRE(opa.converged);
      const auto rep = root_report(opa.coefficients);
      CHECK(check_product_bound(f, opa, p).satisfied);
      CHECK(check_centner_bound(opa, p).satisfied);
      const double bound = p < 2.0 ? bound_p_less_2(f, p) : bound_p_greater_2(f, p);
      CHECK(rep.product_modulus >= bound - kBoundTol);
    }
  }
}

TEST_CASE("escape tracking") {
  const auto inner = escape_tracker(FunctionSpec::blaschke_product({0.5}), 2.0, 6, {0.5});
  for (const auto& [n, v] : inner.min_modulus) CHECK(std::isinf(v));

  const auto rep = escape_tracker(FunctionSpec::polynomial({1.0, 0.9}), 3.0, 12, {0.5, 0.99});
  CHECK(rep.all_converged);
  REQUIRE(rep.min_modulus.size() == 13);
  REQUIRE(rep.escape_degree.size() == 2);
  for (const auto& row : rep.trajectory) {
    CHECK(row.p == 3.0);
    CHECK(row.modulus == doctest::Approx(std::abs(row.root)));
  }
  CHECK_THROWS_AS(escape_tracker(FunctionSpec::polynomial({0.0, 1.0}), 3.0, 4, {}), InvalidArgument);
}
