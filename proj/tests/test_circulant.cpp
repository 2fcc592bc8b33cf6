#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "boussinesq/circulant.hpp"
#include "boussinesq/model.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace boussinesq;

namespace {

std::map<int, double> offsets(const PeriodicStencil& s) {
  std::map<int, double> m;
  for (int k = -s.radius(); k <= s.radius(); ++k) m[k] = s.coeff(k);
  return m;
}

}  // namespace

TEST_SUITE("circulant") {
  TEST_CASE("stencil shape") {
    const PeriodicStencil s({1.0, 2.0, 3.0});
    CHECK(s.radius() == 1);
    CHECK(s.coeff(-1) == 1.0);
    CHECK(s.coeff(1) == 3.0);
    CHECK(s.coeff(5) == 0.0);
    CHECK_THROWS_AS(PeriodicStencil(std::vector<double>{1.0, 2.0}), ConfigError);
    CHECK(PeriodicStencil::identity().radius() == 0);
  }

  TEST_CASE("apply matches a dense circulant product") {
    std::mt19937_64 rng(7);
    const PeriodicStencil s({0.5, -1.0, 3.0, 2.0, -0.25});
    for (std::size_t n : {8u, 13u, 32u}) {
      const auto x = oracle::random_vector(rng, n, -1.0, 1.0);
      const auto dense = oracle::mul(oracle::periodic(n, offsets(s)), x);
      CHECK(oracle::max_abs_diff(s.apply(x, 2.0), [&] {
              auto y = dense;
              for (double& v : y) v *= 2.0;
              return y;
            }()) < 1e-14);
    }
  }

  TEST_CASE("symbol of a shifted cosine") {
    const PeriodicStencil s({-1.0, 12.0, -39.0, 56.0, -39.0, 12.0, -1.0});
    const std::size_t n = 64;
    const double theta = 2.0 * std::numbers::pi * 5.0 / n;
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = std::cos(theta * i);
    const auto y = s.apply(c);
    const double sym = s.symbol(theta).real();
    CHECK(std::abs(s.symbol(theta).imag()) < 1e-12);
    CHECK(sym == doctest::Approx(56.0 - 78.0 * std::cos(theta) + 24.0 * std::cos(2 * theta) - 2.0 * std::cos(3 * theta)));
    for (std::size_t i = 0; i < n; ++i) CHECK(y[i] == doctest::Approx(sym * c[i]).epsilon(1e-12));
  }

  TEST_CASE("cyclic solver matches dense elimination") {
    std::mt19937_64 rng(11);
    const std::vector<PeriodicStencil> stencils{
        PeriodicStencil({0.1, 1.0, 0.2}),
        PeriodicStencil({-0.05, 0.3, 1.7, 0.4, -0.02}),
        PeriodicStencil({1.0 / 30.0, -13.0 / 60.0, 47.0 / 60.0, 9.0 / 20.0, -1.0 / 20.0}),
        PeriodicStencil({0.01, -0.2, 0.5, 2.2, 0.5, -0.2, 0.01})};
    for (const auto& s : stencils) {
      for (std::size_t n : {16u, 32u, 37u}) {
        const CyclicBandedSolver solver(s, n);
        const oracle::Dense a = oracle::periodic(n, offsets(s));
        for (int trial = 0; trial < 5; ++trial) {
          const auto b = oracle::random_vector(rng, n, -1.0, 1.0);
          CHECK(oracle::max_abs_diff(solver.solve(b), oracle::solve(a, b)) < 1e-12);
        }
      }
    }
  }

  TEST_CASE("solve in place") {
    const PeriodicStencil s({-0.05, 0.3, 1.7, 0.4, -0.02});
    const CyclicBandedSolver solver(s, 20);
    std::vector<double> b(20);
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = std::sin(0.3 * i);
    const auto expected = solver.solve(b);
    solver.solve(b, b);
    CHECK(oracle::max_abs_diff(b, expected) < 1e-15);
  }

  TEST_CASE("identity solver is a copy") {
    const CyclicBandedSolver solver(PeriodicStencil::identity(), 9);
    const std::vector<double> b{1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(solver.solve(b) == b);
  }

  TEST_CASE("singular circulant is reported") {
    // Second difference annihilates constants.
    CHECK_THROWS_AS(CyclicBandedSolver(PeriodicStencil({1.0, -2.0, 1.0}), 16), NumericalError);
  }

  TEST_CASE("size errors") {
    const CyclicBandedSolver solver(PeriodicStencil({0.1, 1.0, 0.1}), 16);
    const std::vector<double> b(15, 1.0);
    CHECK_THROWS_AS((void)solver.solve(b), ConfigError);
    CHECK_THROWS_AS(CyclicBandedSolver(PeriodicStencil({0.1, 0.1, 1.0, 0.1, 0.1}), 4), ConfigError);
  }
}
