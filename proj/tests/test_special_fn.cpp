#include "ineq/special_fn.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "ineq/rng.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using ineq::beta;
using ineq::beta_exact;
using ineq::BetaArgs;
using ineq::log_gamma;
using testutil::rel_diff;

TEST_CASE("log_gamma known values") {
  CHECK(std::abs(log_gamma(1.0)) <= 1e-15);
  CHECK(std::abs(log_gamma(2.0)) <= 1e-15);
  // ln Gamma(1/2) = ln sqrt(pi), cross-checked against the Gaussian-integral
  // oracle (frozen value 0.57236494292469997 up to the oracle's own noise).
  const double oracle = std::log(oracles::gamma_half_brute());
  CHECK(std::abs(oracle - 0.5723649429247001) < 1e-13);
  CHECK(std::abs(log_gamma(0.5) - oracle) < 1e-13);
  // Factorials: lgamma(n+1) = ln n!.
  for (int n : {3, 7, 12, 20, 50, 100}) {
    const double expected = std::log(ineq::BigNat::factorial(n).to_double());
    CHECK(rel_diff(log_gamma(n + 1.0), expected) < 1e-14);
  }
}

TEST_CASE("log_gamma domain errors") {
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-3.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(std::nan("")), std::domain_error);
  // Below 0.5 the reflection formula takes over.
  CHECK(rel_diff(log_gamma(0.25), 1.2880225246980774) < 1e-13);  // ln Gamma(1/4)
}

TEST_CASE("beta trivial and derived values") {
  CHECK(beta(1.0, 1.0) == 1.0);
  CHECK(beta(2.0, 2.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  // pi/8, derived from the brute-force half-integer oracle.
  const double oracle = oracles::beta_half_integer_brute(1.5, 1.5);
  CHECK(std::abs(oracle - 0.39269908169872414) < 5e-15);
  CHECK(rel_diff(beta(1.5, 1.5), oracle) < 1e-13);
  CHECK(rel_diff(beta(2.5, 2.5), oracles::beta_half_integer_brute(2.5, 2.5)) < 1e-13);
  CHECK(rel_diff(beta(2.5, 3.5), oracles::beta_half_integer_brute(2.5, 3.5)) < 1e-13);
  CHECK(rel_diff(beta(0.5, 0.5), M_PI) < 1e-13);
}

TEST_CASE("beta error signalling") {
  CHECK_THROWS_AS(beta(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(beta(1.0, -2.0), std::domain_error);
  CHECK_THROWS_AS(beta(std::nan(""), 1.0), std::domain_error);
  CHECK_THROWS_AS(beta(1.5e4, 1.0), std::overflow_error);
  CHECK_THROWS_AS(beta(1.0, 1.0001e4), std::overflow_error);
  // Equal four-digit arguments push the value below double range.
  CHECK_THROWS_AS(beta(1.0e4, 1.0e4), std::underflow_error);
}

TEST_CASE("beta agrees with the exact-rational oracle on integers") {
  for (int m = 1; m <= 30; ++m) {
    for (int n = 1; n <= 30; ++n) {
      const double exact = beta_exact(m, n).to_double();
      CHECK(std::abs(beta(m, n) - exact) <= 1e-13 * exact);
    }
  }
}

TEST_CASE("continuous beta path matches the oracle near integers") {
  // Nudging an argument off the integer lattice forces the Lanczos route;
  // the result must still match the exact oracle within first-order drift.
  for (int m : {2, 5, 17, 30}) {
    for (int n : {1, 8, 24}) {
      const double eps = 1e-9;
      const double exact = beta_exact(m, n).to_double();
      const double drift = std::abs(beta(m + eps, n) - exact) / exact;
      // d/dm log B = psi(m) - psi(m+n) is below ~10 here.
      CHECK(drift < 50.0 * eps);
    }
  }
}

TEST_CASE("beta symmetry, recurrence and Pascal identities") {
  ineq::Rng rng(20240811);
  for (int i = 0; i < 1000; ++i) {
    const double m = rng.uniform(0.1, 50.0);
    const double n = rng.uniform(0.1, 50.0);
    const double b = beta(m, n);
    CHECK(rel_diff(b, beta(n, m)) < 1e-13);
    CHECK(rel_diff(beta(m + 1.0, n), b * m / (m + n)) < 1e-12);
    CHECK(rel_diff(b, beta(m + 1.0, n) + beta(m, n + 1.0)) < 1e-12);
  }
}

TEST_CASE("beta(m, 1) = 1/m") {
  ineq::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const double m = rng.uniform(0.05, 9.0e3);
    CHECK(rel_diff(beta(m, 1.0), 1.0 / m) < 1e-13);
  }
}

TEST_CASE("beta_exact reduced rationals") {
  CHECK(beta_exact(2, 4).to_string() == "1/20");
  CHECK(beta_exact(3, 1).to_string() == "1/3");
  CHECK(beta_exact(1, 1).to_string() == "1");
  CHECK(beta_exact(2, 2).to_string() == "1/6");
  CHECK(beta_exact(3, 3).to_string() == "1/30");
  CHECK_THROWS_AS(beta_exact(0, 1), std::domain_error);
  CHECK_THROWS_AS(beta_exact(3, -1), std::domain_error);
  CHECK_THROWS_AS(beta_exact(15000, 15000), std::overflow_error);
}

TEST_CASE("beta_exact equals the factorial formula") {
  using ineq::BigNat;
  using ineq::ExactRational;
  ineq::Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    const int m = rng.uniform_int(1, 40);
    const int n = rng.uniform_int(1, 40);
    const ExactRational factorial_form(
        false, BigNat::factorial(m - 1) * BigNat::factorial(n - 1),
        BigNat::factorial(m + n - 1));
    CHECK(beta_exact(m, n) == factorial_form);
  }
}
