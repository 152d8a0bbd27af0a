// The OpenMP kernels must reproduce the serial reference implementations bit
// for bit: certification scans merge per-row results in index order, and the
// sweep/falsification loops write independent slots.

#include <cmath>

#include "doctest.h"
#include "ineq/function_catalog.hpp"
#include "ineq/verifier.hpp"

using namespace ineq;

namespace {

bool reports_identical(const VerificationReport& a, const VerificationReport& b) {
  const auto same_double = [](double x, double y) {
    return (std::isnan(x) && std::isnan(y)) || x == y;
  };
  return a.problem.function_id == b.problem.function_id && a.formula_id == b.formula_id &&
         same_double(a.lhs, b.lhs) && same_double(a.lhs_error, b.lhs_error) &&
         same_double(a.rhs, b.rhs) && same_double(a.slack, b.slack) && a.ratio == b.ratio &&
         a.verdict == b.verdict && a.certifications.size() == b.certifications.size();
}

}  // namespace

TEST_CASE("certification scans: parallel == serial") {
  const std::vector<ConvexityClass> classes{
      ConvexityClass::convex(), ConvexityClass::s_convex(0.5), ConvexityClass::quasi_convex(),
      ConvexityClass::p_function(), ConvexityClass::q_class()};
  for (const FunctionSpec& spec : builtin_catalog()) {
    for (const ConvexityClass& cls : classes) {
      const auto serial = certify(spec, cls, {}, kDefaultCertTolerance, Exec::Serial);
      const auto parallel = certify(spec, cls, {}, kDefaultCertTolerance, Exec::Parallel);
      INFO(spec.id, " as ", to_string(cls.kind));
      CHECK(serial.certified == parallel.certified);
      CHECK(serial.max_violation == parallel.max_violation);
      CHECK(serial.witness == parallel.witness);
    }
  }
}

TEST_CASE("sweep: parallel == serial") {
  SweepConfig config;
  config.function_ids = {"exp", "square", "pow-0.5", "sin-pi"};
  config.p_grid = {0.5, 1.0, 2.0};
  config.q_grid = {1.0, 2.5};
  const auto serial = sweep(config, Exec::Serial);
  const auto parallel = sweep(config, Exec::Parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    INFO("report ", i);
    CHECK(reports_identical(serial[i], parallel[i]));
  }
}

TEST_CASE("falsify: parallel == serial") {
  const auto ranges = FalsificationRanges::defaults_for(ClassKind::PFunction);
  const auto serial = falsify(ClassKind::PFunction, ranges, 20, 2024, Exec::Serial);
  const auto parallel = falsify(ClassKind::PFunction, ranges, 20, 2024, Exec::Parallel);
  CHECK(serial.holds == parallel.holds);
  CHECK(serial.violated == parallel.violated);
  CHECK(serial.inconclusive == parallel.inconclusive);
  CHECK(serial.min_slack == parallel.min_slack);
  CHECK(serial.min_slack_trial == parallel.min_slack_trial);
  REQUIRE(serial.reports.size() == parallel.reports.size());
  for (std::size_t i = 0; i < serial.reports.size(); ++i) {
    INFO("trial ", i);
    CHECK(reports_identical(serial.reports[i], parallel.reports[i]));
  }
}
