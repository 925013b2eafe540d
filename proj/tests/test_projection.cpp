#include <doctest.h>

#include <cmath>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/opa.hpp"
#include "hardy/orthogonality.hpp"
#include "hardy/projection.hpp"

using namespace hardy;

TEST_CASE("p = 2 projection is conj(J(0)) J") {
  const auto grid = make_grid(kDefaultGridSize);
  const auto f = FunctionSpec::blaschke_product({0.5});
  const auto res = project_one(f, 2.0, grid);
  const auto j = sample(f, grid);
  CHECK(res.gstar.max_abs_diff(j * cplx(-0.5)) < 1e-14);
  CHECK(res.distance == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
  CHECK(res.norm_mismatch < 1e-12);
  CHECK(res.certificate < 1e-12);
}

TEST_CASE("single-factor residual has the closed form ((1 - |a|^2)/(1 - conj(a) z))^(2/p)") {
  const auto grid = make_grid(kDefaultGridSize);
  const cplx a(0.3, -0.6);
  for (double p : {1.2, 1.5, 3.0, 5.0}) {
    const auto res = project_one(FunctionSpec::blaschke_product({a}), p, grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const cplx ref = std::pow((1.0 - std::norm(a)) / (1.0 - std::conj(a) * grid.node(k)), 2.0 / p);
      worst = std::max(worst, std::abs(res.residual[k] - ref));
    }
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("projection invariants on Blaschke fixtures") {
  const auto grid = make_grid(kDefaultGridSize);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> m(0.1, 0.9), t(-M_PI, M_PI);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<cplx> zeros;
    for (int k = 0; k < 1 + trial % 4; ++k) zeros.push_back(std::polar(m(rng), t(rng)));
    auto f = FunctionSpec::blaschke_product(zeros, std::polar(1.0, t(rng)));
    f.outer_poly = {2.0, cplx(0.0, 1.0)};  // zero-free in the disk; does not change [f]_p
    const auto j = sample(f.inner_part(), grid);
    for (double p : {1.5, 3.0, 4.0}) {
      const auto res = project_one(f, p, grid);
      double prod = 1.0;
      for (const auto& a : zeros) prod *= std::norm(a);
      CHECK(std::abs(lp_norm(res.residual, p) - std::pow(1.0 - prod, 1.0 / p)) < 1e-10);
      for (int k = 0; k <= 32; ++k) CHECK(bj_residual(res.residual, j.shifted(k), p) <= 1e-9);
    }
  }
}

TEST_CASE("atom projection is computed to quadrature accuracy") {
  const auto grid = make_grid(kDefaultGridSize);
  const auto res = project_one(FunctionSpec::atom(1.0), 3.0, grid);
  CHECK(res.distance == doctest::Approx(std::pow(1.0 - std::exp(-2.0), 1.0 / 3.0)).epsilon(1e-15));
  CHECK(res.norm_mismatch < 1e-4);
  CHECK(res.certificate < 1e-3);
}

TEST_CASE("projection input errors") {
  const auto grid = make_grid(256);
  CHECK_THROWS_AS(project_one(FunctionSpec::polynomial({0.0, 1.0}), 2.0, grid), InvalidArgument);
  auto inner_outer_bad = FunctionSpec::blaschke_product({0.5});
  inner_outer_bad.outer_poly = {1.0, -2.0};  // root at 1/2
  CHECK_THROWS_AS(project_one(inner_outer_bad, 3.0, grid), InvalidArgument);
  CHECK_THROWS_AS(project_one(FunctionSpec::blaschke_product({0.5}), 1.0, grid), InvalidArgument);
}

TEST_CASE("projection identities fail loudly on an unresolving grid") {
  CHECK_THROWS_AS(project_one(FunctionSpec::blaschke_product({0.99}), 3.0, make_grid(64)), ConsistencyError);
}

TEST_CASE("outer functions project onto themselves") {
  const auto grid = make_grid(128);
  const auto res = project_one(FunctionSpec::polynomial({1.0, 0.5}), 3.0, grid);
  CHECK(res.distance == 0.0);
  CHECK(res.gstar.max_abs_diff(BoundarySamples::constant(grid, 1.0)) == 0.0);
}

TEST_CASE("distance_formula examples") {
  CHECK(distance_formula(FunctionSpec::blaschke_product({0.5}), 2.0) == doctest::Approx(0.8660254037844386));
  CHECK(distance_formula(FunctionSpec::polynomial({1.0, 0.5}), 3.0) == 0.0);
  CHECK(distance_formula(FunctionSpec::blaschke_product({0.5, 0.5}), 4.0) ==
        doctest::Approx(std::pow(15.0 / 16.0, 0.25)));
  CHECK(distance_formula(FunctionSpec::atom(1.0), 2.0) == doctest::Approx(std::sqrt(1.0 - std::exp(-2.0))));
}

TEST_CASE("strict nesting of invariant subspaces") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> m(0.05, 0.95), t(-M_PI, M_PI);
  for (int trial = 0; trial < 50; ++trial) {
    const cplx a = std::polar(m(rng), t(rng)), b = std::polar(m(rng), t(rng));
    const double p = 1.1 + 5.0 * m(rng);
    const double d1 = distance_formula(FunctionSpec::blaschke_product({a}), p);
    const double d12 = distance_formula(FunctionSpec::blaschke_product({a, b}), p);
    CHECK(d12 > d1);
    const double margin = std::norm(a) * (1.0 - std::norm(b));
    CHECK(std::abs(std::pow(d12, p) - std::pow(d1, p) - margin) < 1e-13);
  }
}

TEST_CASE("closed-form projection beats polynomial competitors") {
  const auto grid = make_grid(kDefaultGridSize);
  for (const auto& f : {FunctionSpec::blaschke_product({0.5}), FunctionSpec::blaschke_product({0.5, cplx(0, -0.7)})}) {
    for (double p : {1.5, 3.0}) {
      const double best = lp_norm(project_one(f, p, grid).residual, p);
      CHECK(best <= solve_opa(f, 12, p).error + 1e-6);
    }
  }
}

TEST_CASE("finite Blaschke extremal for a double zero at 1/2") {
  const auto grid = make_grid(kDefaultGridSize);
  const auto r = finite_blaschke_extremal({0.5, 0.5}, 3.0, grid);
  REQUIRE(r.d == 1);
  CHECK(r.c == doctest::Approx(15.0 / 16.0).epsilon(1e-15));
  CHECK(std::abs(r.w[0] - 0.8) < 1e-12);
  REQUIRE(r.outer_poly_coeffs.size() == 2);
  CHECK(std::abs(r.outer_poly_coeffs[0] - 15.0 / 16.0) < 1e-15);
  CHECK(std::abs(r.outer_poly_coeffs[1] + 0.75) < 1e-15);
  for (double v : r.consistency_residuals) CHECK(v < 1e-12);
  CHECK(spicyham_check(r, {0.5, 0.5}, 3.0, grid, 20) <= 1e-9);
}

TEST_CASE("finite Blaschke extremal degenerate reductions") {
  const auto grid = make_grid(kDefaultGridSize);
  const cplx a(0.2, 0.5);
  const auto one = finite_blaschke_extremal({a}, 1.5, grid);
  CHECK(one.d == 0);
  CHECK(one.w.empty());
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const cplx ref = std::pow((1.0 - std::norm(a)) / (1.0 - std::conj(a) * grid.node(k)), 2.0 / 1.5);
    worst = std::max(worst, std::abs(one.one_minus_jh[k] - ref));
  }
  CHECK(worst < 1e-13);

  // Symmetric zeros cancel down to a constant: 15/16.
  const auto sym = finite_blaschke_extremal({0.5, -0.5}, 3.0, grid);
  CHECK(sym.c == doctest::Approx(15.0 / 16.0));
  CHECK(sym.d == 0);
  for (double v : sym.consistency_residuals) CHECK(v < 1e-10);
}

TEST_CASE("finite Blaschke extremal on random zero sets") {
  const auto grid = make_grid(kDefaultGridSize);
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> m(0.1, 0.85), t(-M_PI, M_PI);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<cplx> zeros;
    for (int k = 0; k < 2 + trial % 5; ++k) zeros.push_back(std::polar(m(rng), t(rng)));
    for (double p : {1.5, 3.0}) {
      const auto r = finite_blaschke_extremal(zeros, p, grid);
      CHECK(r.d <= static_cast<int>(zeros.size()) - 1);
      for (const auto& w : r.w) {
        CHECK(std::abs(w) > 0.0);
        CHECK(std::abs(w) <= 1.0 + 1e-12);
      }
      for (double v : r.consistency_residuals) CHECK(v <= 1e-9);
      CHECK(r.identity_residual <= 1e-9);
      CHECK(spicyham_check(r, zeros, p, grid, 20) <= 1e-9);
    }
  }
}

TEST_CASE("spicyham at p = 2 for a single zero") {
  const auto grid = make_grid(kDefaultGridSize);
  const auto r = finite_blaschke_extremal({0.5}, 2.0, grid);
  CHECK(spicyham_check(r, {0.5}, 2.0, grid, 20) <= 1e-10);
}

TEST_CASE("truncation experiment") {
  const ZeroGenerator halving = [](int k) { return 1.0 - std::pow(2.0, -k); };
  std::vector<int> ns{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const auto rows = truncation_distance_experiment(halving, 2.0, ns);
  REQUIRE(rows.size() == ns.size());
  CHECK(rows[0].distance == 0.0);
  double prod = 1.0;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    prod *= 1.0 - std::pow(2.0, -static_cast<int>(k));
    CHECK(rows[k].j_at_zero_modulus == doctest::Approx(prod).epsilon(1e-14));
    CHECK(rows[k].j_at_zero_modulus < rows[k - 1].j_at_zero_modulus);
    CHECK(rows[k].distance > rows[k - 1].distance);
  }
}

TEST_CASE("multiplicity family reports |B_n(0)| = (1 - 1/n)^n, which increases") {
  const auto rep = multiplicity_family_experiment(2.0, {2, 3, 4, 5, 6});
  for (const auto& row : rep.rows) {
    CHECK(row.j_at_zero_modulus == doctest::Approx(std::pow(1.0 - 1.0 / row.n, row.n)).epsilon(1e-14));
  }
  CHECK(rep.rows[0].j_at_zero_modulus == doctest::Approx(0.25));
  CHECK_FALSE(rep.strictly_decreasing);
  CHECK_THROWS_AS(multiplicity_family_experiment(2.0, {1}), InvalidArgument);
}
