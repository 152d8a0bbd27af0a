#include "ineq/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "ineq/rng.hpp"
#include "ineq/special_fn.hpp"
#include "testutil.hpp"

using namespace ineq;
using testutil::rel_diff;

namespace {

double reconstruct(const BoundValue& bound) {
  double sum = 0.0;
  for (const BetaTerm& t : bound.beta_terms) sum += t.coefficient * beta(t.m, t.n);
  return sum;
}

}  // namespace

TEST_CASE("s-convex bound values from the rational oracle") {
  // fa=0, fb=1, p=q=1, s=1/2: the two symmetric terms coincide and the
  // cross term vanishes, leaving beta(2,3) = 1/12.
  const auto half = bound_s_convex({0.0, 1.0, 0.0, 1.0}, 1.0, 1.0, 0.5);
  CHECK(half.formula_id == "thm2.1");
  CHECK(rel_diff(half.value, beta_exact(2, 3).to_double()) < 1e-14);
  CHECK(half.beta_terms.size() == 3);

  // s=1 collapses to beta(2,4) = 1/20.
  const auto one = bound_s_convex({0.0, 1.0, 0.0, 1.0}, 1.0, 1.0, 1.0);
  CHECK(rel_diff(one.value, beta_exact(2, 4).to_double()) < 1e-14);

  CHECK(bound_s_convex({0.0, 0.0, 0.0, 1.0}, 1.0, 1.0, 0.5).value == 0.0);
}

TEST_CASE("convex bound is the s=1 path") {
  const EndpointData e{1.0, 1.0, 0.0, 1.0};
  const auto convex = bound_convex(e, 1.0, 1.0);
  CHECK(convex.formula_id == "cor2.3");
  // (1/2){2*[B(2,4)+B(2,4)] + 4 B(3,3)} = 1/10 + 1/15 = 1/6.
  CHECK(rel_diff(convex.value, 1.0 / 6.0) < 1e-14);
  CHECK(convex.value == bound_s_convex(e, 1.0, 1.0, 1.0).value);
  CHECK(bound_convex({0.0, 0.0, 0.0, 1.0}, 1.0, 1.0).value == 0.0);
}

TEST_CASE("quasi-convex bound") {
  CHECK(rel_diff(bound_quasi_convex({0.0, 1.0, 0.0, 1.0}, 1.0, 1.0).value, 1.0 / 6.0) < 1e-14);
  // Increasing f = exp: max resolves to f(b) = e, giving e^2/6.
  const double e1 = std::exp(1.0);
  const auto inc = bound_quasi_convex({1.0, e1, 0.0, 1.0}, 1.0, 1.0);
  CHECK(inc.formula_id == "thm2.2");
  CHECK(rel_diff(inc.value, e1 * e1 / 6.0) < 1e-14);
  CHECK(bound_quasi_convex({0.0, 0.0, 0.0, 1.0}, 1.0, 1.0).value == 0.0);
}

TEST_CASE("P-class bound") {
  CHECK(rel_diff(bound_p_class({1.0, 1.0, 0.0, 1.0}, 1.0, 1.0).value, 2.0 / 3.0) < 1e-14);
  const double e1 = std::exp(1.0);
  // (1+e)^2 beta(2,2), frozen from the oracle arithmetic.
  const auto mixed = bound_p_class({1.0, e1, 0.0, 1.0}, 1.0, 1.0);
  CHECK(mixed.formula_id == "thm2.3");
  CHECK(rel_diff(mixed.value, (1.0 + e1) * (1.0 + e1) / 6.0) < 1e-14);
  CHECK(std::abs(mixed.value - 2.3042699593081234) < 1e-12);
  CHECK(bound_p_class({0.0, 0.0, 0.0, 1.0}, 1.0, 1.0).value == 0.0);
}

TEST_CASE("Q-class bound") {
  // fa=fb=1, p=q=2: (1/2){2(1/3 + 1/3) + 4/6} = 1.
  const auto unit = bound_q_class({1.0, 1.0, 0.0, 1.0}, 2.0, 2.0);
  CHECK(unit.formula_id == "thm2.4");
  CHECK(rel_diff(unit.value, 1.0) < 1e-14);

  const double e1 = std::exp(1.0);
  const auto mixed = bound_q_class({1.0, e1, 0.0, 1.0}, 2.0, 2.0);
  // (1/2){(1+e^2)(2/3) + 4e/6}, frozen from the oracle arithmetic.
  CHECK(std::abs(mixed.value - 3.7024459757965652) < 1e-12);

  CHECK(bound_q_class({0.0, 0.0, 0.0, 1.0}, 2.0, 2.0).value == 0.0);
  CHECK_THROWS_AS(bound_q_class({1.0, 1.0, 0.0, 1.0}, 1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(bound_q_class({1.0, 1.0, 0.0, 1.0}, 2.0, 0.5), std::domain_error);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(bound_convex({-0.1, 1.0, 0.0, 1.0}, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(bound_convex({1.0, 1.0, 1.0, 0.0}, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(bound_convex({1.0, 1.0, 0.0, 1.0}, -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(bound_s_convex({1.0, 1.0, 0.0, 1.0}, 1.0, 1.0, 1.5), std::domain_error);
  CHECK_THROWS_AS(bound_s_convex({1.0, 1.0, 0.0, 1.0}, 1.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("beta_terms reconstruct the value") {
  ineq::Rng rng(31);
  for (int i = 0; i < 25; ++i) {
    const EndpointData e{rng.uniform(0.0, 3.0), rng.uniform(0.0, 3.0), 0.0,
                         rng.uniform(0.5, 3.0)};
    const double p = rng.uniform(0.2, 4.0);
    const double q = rng.uniform(0.2, 4.0);
    const double s = rng.uniform(0.05, 1.0);
    for (const BoundValue& bound :
         {bound_s_convex(e, p, q, s), bound_quasi_convex(e, p, q), bound_p_class(e, p, q),
          bound_q_class(e, 1.0 + p, 1.0 + q)}) {
      CHECK(bound.value == reconstruct(bound));
      CHECK(bound.value >= 0.0);
    }
  }
}

TEST_CASE("quadratic scaling in the endpoint values") {
  ineq::Rng rng(17);
  for (int i = 0; i < 25; ++i) {
    const double fa = rng.uniform(0.0, 2.0);
    const double fb = rng.uniform(0.0, 2.0);
    const double c = rng.uniform(0.1, 5.0);
    const double a = rng.uniform(0.0, 1.0);
    const double b = a + rng.uniform(0.3, 2.0);
    const double p = rng.uniform(0.2, 3.0);
    const double q = rng.uniform(0.2, 3.0);
    const EndpointData e{fa, fb, a, b};
    const EndpointData ce{c * fa, c * fb, a, b};
    CHECK(rel_diff(bound_s_convex(ce, p, q, 0.5).value, c * c * bound_s_convex(e, p, q, 0.5).value) < 1e-13);
    CHECK(rel_diff(bound_quasi_convex(ce, p, q).value, c * c * bound_quasi_convex(e, p, q).value) < 1e-13);
    CHECK(rel_diff(bound_p_class(ce, p, q).value, c * c * bound_p_class(e, p, q).value) < 1e-13);
    CHECK(rel_diff(bound_q_class({c * fa, c * fb, a, b}, 1.1 + p, 1.1 + q).value,
                   c * c * bound_q_class({fa, fb, a, b}, 1.1 + p, 1.1 + q).value) < 1e-13);
  }
}

TEST_CASE("endpoint swap with exponent swap is a symmetry") {
  ineq::Rng rng(23);
  for (int i = 0; i < 25; ++i) {
    const double fa = rng.uniform(0.0, 2.0);
    const double fb = rng.uniform(0.0, 2.0);
    const double p = rng.uniform(0.2, 3.0);
    const double q = rng.uniform(0.2, 3.0);
    const double s = rng.uniform(0.05, 1.0);
    const EndpointData e{fa, fb, 0.0, 2.0};
    const EndpointData swapped{fb, fa, 0.0, 2.0};
    CHECK(rel_diff(bound_s_convex(e, p, q, s).value, bound_s_convex(swapped, q, p, s).value) < 1e-13);
    CHECK(rel_diff(bound_quasi_convex(e, p, q).value, bound_quasi_convex(swapped, q, p).value) < 1e-13);
    CHECK(rel_diff(bound_p_class(e, p, q).value, bound_p_class(swapped, q, p).value) < 1e-13);
    CHECK(rel_diff(bound_q_class(e, 1.1 + p, 1.1 + q).value,
                   bound_q_class(swapped, 1.1 + q, 1.1 + p).value) < 1e-13);
  }
}

TEST_CASE("quasi bound never exceeds the P bound") {
  ineq::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const EndpointData e{rng.uniform(0.0, 4.0), rng.uniform(0.0, 4.0), 0.0,
                         rng.uniform(0.4, 2.5)};
    const double p = rng.uniform(0.2, 4.0);
    const double q = rng.uniform(0.2, 4.0);
    CHECK(bound_quasi_convex(e, p, q).value <= bound_p_class(e, p, q).value * (1.0 + 1e-15));
  }
}

TEST_CASE("p = q doubles the symmetric bracket") {
  // At p = q the two bracket terms coincide, so the bound equals
  // (b-a)^(2p+1)/2 {(fa^2+fb^2) 2 B(p+1, 2s+p+1) + 4 fa fb B(p+s+1, p+s+1)}.
  ineq::Rng rng(53);
  for (int i = 0; i < 25; ++i) {
    const double fa = rng.uniform(0.0, 2.0);
    const double fb = rng.uniform(0.0, 2.0);
    const double p = rng.uniform(0.2, 4.0);
    const double s = rng.uniform(0.05, 1.0);
    const double ba = rng.uniform(0.4, 2.5);
    const auto bound = bound_s_convex({fa, fb, 0.0, ba}, p, p, s);
    const double pref = 0.5 * std::pow(ba, 2.0 * p + 1.0);
    const double corollary = pref * ((fa * fa + fb * fb) * 2.0 * beta(p + 1.0, 2.0 * s + p + 1.0) +
                                     4.0 * fa * fb * beta(p + s + 1.0, p + s + 1.0));
    CHECK(rel_diff(bound.value, corollary) < 1e-13);
  }
}

TEST_CASE("s = 1, p = q matches the simplified convex form") {
  ineq::Rng rng(67);
  for (int i = 0; i < 25; ++i) {
    const double fa = rng.uniform(0.0, 2.0);
    const double fb = rng.uniform(0.0, 2.0);
    const double p = rng.uniform(0.2, 4.0);
    const double ba = rng.uniform(0.4, 2.5);
    const auto bound = bound_convex({fa, fb, 0.0, ba}, p, p);
    const double pref = std::pow(ba, 2.0 * p + 1.0);
    const double corollary = pref * ((fa * fa + fb * fb) * beta(p + 1.0, p + 3.0) +
                                     2.0 * fa * fb * beta(p + 2.0, p + 2.0));
    CHECK(rel_diff(bound.value, corollary) < 1e-13);
  }
}

TEST_CASE("equal endpoints simplify the Q bound") {
  ineq::Rng rng(79);
  for (int i = 0; i < 25; ++i) {
    const double fa = rng.uniform(0.0, 2.0);
    const double p = rng.uniform(1.1, 4.0);
    const double q = rng.uniform(1.1, 4.0);
    const double ba = rng.uniform(0.4, 2.5);
    const auto bound = bound_q_class({fa, fa, 0.0, ba}, p, q);
    const double corollary =
        std::pow(ba, p + q + 1.0) * fa * fa *
        (beta(p + 1.0, q - 1.0) + 2.0 * beta(p, q) + beta(p - 1.0, q + 1.0));
    CHECK(rel_diff(bound.value, corollary) < 1e-13);
  }
}
