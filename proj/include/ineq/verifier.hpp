#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ineq/bounds.hpp"
#include "ineq/exec.hpp"
#include "ineq/function_catalog.hpp"
#include "ineq/quadrature.hpp"

namespace ineq {

enum class Verdict { Holds, Violated, Inconclusive };
std::string to_string(Verdict v);

// What was checked: one function on one interval with one exponent pair.
struct ProblemDesc {
  std::string function_id;
  double a = 0.0;
  double b = 1.0;
  double p = 1.0;
  double q = 1.0;
  std::optional<double> s;
};

// A violation verdict requires the integral to exceed the bound by more than
// the quadrature error estimate plus this margin, so roundoff can never
// manufacture a counterexample.
struct VerdictTolerance {
  double absolute = 1e-9;
  double relative = 1e-8;
};

struct VerificationReport {
  ProblemDesc problem;
  std::string formula_id;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double lhs_error = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  std::optional<double> rhs_error;  // set by the identity check
  double slack = std::numeric_limits<double>::quiet_NaN();  // rhs - lhs
  std::optional<double> ratio;                              // lhs / rhs when rhs > 0
  Verdict verdict = Verdict::Inconclusive;
  std::vector<CertificationResult> certifications;
  std::vector<BetaTerm> beta_terms;
  std::optional<std::uint64_t> seed;
  std::string note;  // diagnostics for Inconclusive outcomes
};

// Two-sided check of the change-of-variables identity: the weighted x-form
// integral against the substituted t-form. Holds when the routes agree
// within their combined error estimates plus max(atol, rtol*max(|lhs|,|rhs|)).
// Quadrature non-convergence yields Inconclusive.
VerificationReport check_identity(const FunctionSpec& f, double a, double b, double p, double q,
                                  ToleranceSpec tol = {});

// Full inequality check: certify the class hypotheses on [a, b], integrate
// the left side, evaluate the matching closed-form bound from the endpoint
// values, and compare. Hypothesis failure yields Inconclusive with the
// refutation witness attached; a Violated verdict is only possible when
// certification passed. For classes whose definition does not itself demand
// nonnegativity, the codomain hypothesis f >= 0 is certified separately.
VerificationReport verify(const FunctionSpec& f, ConvexityClass cls, double a, double b,
                          double p, double q, ToleranceSpec tol = {},
                          VerdictTolerance verdict_tol = {}, GridSpec grid = {},
                          Exec exec = Exec::Parallel);

struct SweepConfig {
  std::vector<std::string> function_ids;
  std::optional<ClassKind> class_filter;  // default: every declared class
  std::vector<double> p_grid;
  std::vector<double> q_grid;
  std::vector<double> s_grid;  // consulted only for s-convex tuples
  std::array<double, 2> interval{0.0, 1.0};
  ToleranceSpec tolerance;
};

// One report per (function, formula, p, q[, s]) tuple, in the lexicographic
// order of the configuration regardless of execution schedule. Per-tuple
// failures (including Q-class tuples with p or q <= 1) are recorded as
// Inconclusive; the sweep itself never aborts.
std::vector<VerificationReport> sweep(const SweepConfig& config, Exec exec = Exec::Parallel);

struct FalsificationRanges {
  std::array<double, 2> a_range{0.0, 1.0};
  std::array<double, 2> width_range{0.5, 2.0};
  std::array<double, 2> p_range{0.5, 4.0};
  std::array<double, 2> q_range{0.5, 4.0};
  std::array<double, 2> s_range{0.1, 1.0};

  static FalsificationRanges defaults_for(ClassKind kind);
};

struct FalsificationSummary {
  ClassKind kind = ClassKind::Convex;
  int trials = 0;
  int holds = 0;
  int violated = 0;
  int inconclusive = 0;
  std::uint64_t seed = 0;
  // Sharpness probe: the smallest slack seen among Holds trials.
  double min_slack = std::numeric_limits<double>::infinity();
  std::optional<int> min_slack_trial;
  std::vector<VerificationReport> reports;     // one per trial, in trial order
  std::vector<int> violated_trials;            // indices into reports
};

// Seeded random search for counterexamples: each trial draws an interval,
// exponents (and s where applicable) from the ranges, generates a certified
// class member on it, and runs verify. Deterministic for a fixed seed; trial
// failures are recorded as Inconclusive.
FalsificationSummary falsify(ClassKind kind, const FalsificationRanges& ranges, int trials,
                             std::uint64_t seed, Exec exec = Exec::Parallel);

}  // namespace ineq
