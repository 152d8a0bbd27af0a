#include "ineq/function_catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "ineq/rng.hpp"

using namespace ineq;

TEST_CASE("rule evaluation") {
  CHECK(eval_rule(Polynomial{{2.0, -3.0, 1.0}}, 2.0) == 0.0);
  CHECK(eval_rule(PowerLaw{0.5, 2.0, 1.0}, 4.0) == doctest::Approx(5.0));
  CHECK(eval_rule(ExpFn{}, 0.0) == 1.0);
  CHECK(eval_rule(AbsAffine{0.5, 2.0, 0.1}, 0.25) == doctest::Approx(0.6));
  const PiecewiseLinear pl{{0.0, 1.0, 2.0}, {0.0, 1.0, 3.0}};
  CHECK(eval_rule(pl, 0.5) == doctest::Approx(0.5));
  CHECK(eval_rule(pl, 1.5) == doctest::Approx(2.0));
  CHECK(eval_rule(pl, 3.0) == doctest::Approx(5.0));   // extrapolates last slope
  CHECK(eval_rule(pl, -1.0) == doctest::Approx(-1.0)); // extrapolates first slope
  CHECK(eval_rule(SinePi{}, 0.5) == doctest::Approx(1.0));
}

TEST_CASE("class name round trip") {
  for (ClassKind k : {ClassKind::SConvexSecondSense, ClassKind::Convex, ClassKind::QuasiConvex,
                      ClassKind::PFunction, ClassKind::QClass}) {
    CHECK(parse_class_kind(to_string(k)) == k);
  }
  CHECK_FALSE(parse_class_kind("bogus").has_value());
}

TEST_CASE("certify: x^2 is convex on [0,1]") {
  const FunctionSpec* square = find_function("square");
  REQUIRE(square != nullptr);
  const auto r = certify(*square, ConvexityClass::convex());
  CHECK(r.certified);
  CHECK(r.max_violation <= 1e-12);  // zero up to evaluation roundoff
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("certify: sqrt is s-convex with s = 1/2") {
  const FunctionSpec* sqrt_fn = find_function("pow-0.5");
  REQUIRE(sqrt_fn != nullptr);
  CHECK(certify(*sqrt_fn, ConvexityClass::s_convex(0.5)).certified);
  // But it is not convex: the certifier must find a witness.
  const auto refuted = certify(*sqrt_fn, ConvexityClass::convex());
  CHECK_FALSE(refuted.certified);
  REQUIRE(refuted.witness.has_value());
}

TEST_CASE("certify: sin(pi x) fails the P definition at the midpoint") {
  const FunctionSpec* sin_pi = find_function("sin-pi");
  REQUIRE(sin_pi != nullptr);
  const auto r = certify(*sin_pi, ConvexityClass::p_function());
  CHECK_FALSE(r.certified);
  REQUIRE(r.witness.has_value());
  const auto w = *r.witness;
  CHECK(w[0] == 0.0);
  CHECK(w[1] == 1.0);
  CHECK(w[2] == 0.5);
  CHECK(r.max_violation == doctest::Approx(1.0));
}

TEST_CASE("witness soundness: refuted witnesses re-violate the inequality") {
  const FunctionSpec* sin_pi = find_function("sin-pi");
  for (ConvexityClass cls : {ConvexityClass::s_convex(0.5), ConvexityClass::convex(),
                             ConvexityClass::quasi_convex(), ConvexityClass::p_function(),
                             ConvexityClass::q_class()}) {
    const auto r = certify(*sin_pi, cls);
    REQUIRE_FALSE(r.certified);
    REQUIRE(r.witness.has_value());
    const auto w = *r.witness;
    CHECK(class_violation(*sin_pi, cls, w[0], w[1], w[2]) > kDefaultCertTolerance);
  }
}

TEST_CASE("nonnegativity is part of the P and Q certificates") {
  FunctionSpec dipped;
  dipped.id = "dipped";
  dipped.rule = AbsAffine{0.5, 1.0, -0.2};  // |x - 1/2| - 0.2, negative near the centre
  dipped.domain = {0.0, 1.0};
  for (ConvexityClass cls : {ConvexityClass::p_function(), ConvexityClass::q_class()}) {
    const auto r = certify(dipped, cls);
    CHECK_FALSE(r.certified);
    REQUIRE(r.witness.has_value());
    // The degenerate witness re-violates the defining inequality.
    const auto w = *r.witness;
    CHECK(class_violation(dipped, cls, w[0], w[1], w[2]) > kDefaultCertTolerance);
  }
  // The same function is convex almost-everywhere-nonnegative aside, so the
  // convex certificate alone passes while the explicit nonnegativity scan
  // refutes the codomain hypothesis.
  CHECK(certify(dipped, ConvexityClass::convex()).certified);
  const auto nn = certify_nonnegative(dipped, ConvexityClass::convex(), {0.0, 1.0});
  CHECK_FALSE(nn.certified);
  CHECK(nn.check == CertCheck::Nonnegativity);
  REQUIRE(nn.witness.has_value());
  CHECK(dipped((*nn.witness)[0]) < -kDefaultCertTolerance);
}

TEST_CASE("catalog declarations are consistent with the certifier") {
  for (const FunctionSpec& spec : builtin_catalog()) {
    for (const ConvexityClass& cls : spec.declared_classes) {
      const auto r = certify(spec, cls);
      INFO(spec.id, " as ", to_string(cls.kind));
      CHECK(r.certified);
    }
  }
}

TEST_CASE("catalog basics") {
  const auto& catalog = builtin_catalog();
  CHECK(catalog.size() >= 8);
  const FunctionSpec* exp_fn = find_function("exp");
  REQUIRE(exp_fn != nullptr);
  CHECK(exp_fn->monotonicity == Monotonicity::Increasing);
  const FunctionSpec* abs_fn = find_function("abs-centered");
  REQUIRE(abs_fn != nullptr);
  CHECK(abs_fn->symmetric_about_midpoint == true);
  const FunctionSpec* sin_pi = find_function("sin-pi");
  REQUIRE(sin_pi != nullptr);
  CHECK(sin_pi->declared_classes.empty());
  CHECK(find_function("nope") == nullptr);
}

TEST_CASE("symmetry flags are sound on a 1001-point grid") {
  for (const FunctionSpec& spec : builtin_catalog()) {
    if (!spec.symmetric_about_midpoint.value_or(false)) continue;
    const double a = spec.domain[0], b = spec.domain[1];
    for (int i = 0; i <= 1000; ++i) {
      const double x = a + (b - a) * i / 1000.0;
      CHECK(std::abs(spec(x) - spec(a + b - x)) <= 1e-12);
    }
  }
}

TEST_CASE("class hierarchy on the grid") {
  // Nonnegative convex members certify as P; P members certify as Q.
  std::vector<FunctionSpec> specs(builtin_catalog().begin(), builtin_catalog().end());
  for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
    specs.push_back(generate(ConvexityClass::convex(), seed));
    specs.push_back(generate(ConvexityClass::p_function(), seed));
  }
  for (const FunctionSpec& spec : specs) {
    if (certify(spec, ConvexityClass::convex()).certified &&
        certify_nonnegative(spec, ConvexityClass::convex(), spec.domain).certified) {
      INFO(spec.id);
      CHECK(certify(spec, ConvexityClass::p_function()).certified);
    }
    if (certify(spec, ConvexityClass::p_function()).certified) {
      INFO(spec.id);
      CHECK(certify(spec, ConvexityClass::q_class()).certified);
    }
  }
}

TEST_CASE("generators produce certified members for every class") {
  const std::vector<ConvexityClass> classes{
      ConvexityClass::convex(), ConvexityClass::quasi_convex(), ConvexityClass::p_function(),
      ConvexityClass::q_class(), ConvexityClass::s_convex(0.5)};
  for (const ConvexityClass& cls : classes) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const FunctionSpec spec = generate(cls, seed);
      INFO(to_string(cls.kind), " seed ", seed);
      CHECK(certify(spec, cls).certified);
    }
  }
}

TEST_CASE("generation is deterministic in the seed") {
  const FunctionSpec a = generate(ConvexityClass::quasi_convex(), 7);
  const FunctionSpec b = generate(ConvexityClass::quasi_convex(), 7);
  const auto& pa = std::get<PiecewiseLinear>(a.rule);
  const auto& pb = std::get<PiecewiseLinear>(b.rule);
  CHECK(pa.xs == pb.xs);
  CHECK(pa.ys == pb.ys);
  const FunctionSpec c = generate(ConvexityClass::quasi_convex(), 8);
  CHECK(std::get<PiecewiseLinear>(c.rule).ys != pa.ys);
}

TEST_CASE("scaled specs evaluate proportionally") {
  const FunctionSpec* exp_fn = find_function("exp");
  const FunctionSpec doubled = scaled(*exp_fn, 2.0);
  CHECK(doubled(0.7) == doctest::Approx(2.0 * (*exp_fn)(0.7)).epsilon(1e-15));
  CHECK_THROWS_AS(scaled(*exp_fn, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(scaled(*exp_fn, -1.0), std::invalid_argument);
}

TEST_CASE("generator input validation") {
  GeneratorShape bad;
  bad.domain = {1.0, 0.5};
  CHECK_THROWS_AS(generate(ConvexityClass::convex(), 1, bad), std::invalid_argument);
  GeneratorShape neg;
  neg.domain = {-1.0, 1.0};
  CHECK_THROWS_AS(generate(ConvexityClass::convex(), 1, neg), std::invalid_argument);
  GeneratorShape nodes;
  nodes.min_nodes = 5;
  nodes.max_nodes = 4;
  CHECK_THROWS_AS(generate(ConvexityClass::convex(), 1, nodes), std::invalid_argument);
}

TEST_CASE("certifier grid validation") {
  const FunctionSpec* square = find_function("square");
  GridSpec tiny;
  tiny.x_nodes = 2;
  CHECK_THROWS_AS(certify(*square, ConvexityClass::convex(), tiny), std::invalid_argument);
  CHECK_THROWS_AS(certify(*square, ConvexityClass::s_convex(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(certify(*square, ConvexityClass::s_convex(1.5)), std::invalid_argument);
}
