#include "ineq/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ineq/rng.hpp"

namespace ineq {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

VerificationReport check_identity(const FunctionSpec& f, double a, double b, double p, double q,
                                  ToleranceSpec tol) {
  IntegralProblem problem{a, b, p, q, [&f](double x) { return f(x); }};
  VerificationReport report;
  report.problem = {f.id, a, b, p, q, std::nullopt};
  report.formula_id = formula::kLemmaIdentity;

  const QuadratureResult lhs = integrate_weighted(problem, tol);
  const QuadratureResult rhs = integrate_t_form(problem, tol);
  report.lhs = lhs.value;
  report.lhs_error = lhs.error_estimate;
  report.rhs = rhs.value;
  report.rhs_error = rhs.error_estimate;
  report.slack = rhs.value - lhs.value;
  if (rhs.value > 0.0) report.ratio = lhs.value / rhs.value;

  if (!lhs.converged || !rhs.converged) {
    report.verdict = Verdict::Inconclusive;
    report.note = std::string("quadrature did not converge on the ") +
                  (!lhs.converged ? "x-form" : "t-form") + " route";
    return report;
  }
  const double budget = lhs.error_estimate + rhs.error_estimate +
                        std::max(tol.absolute,
                                 tol.relative * std::max(std::abs(lhs.value), std::abs(rhs.value)));
  report.verdict = std::abs(lhs.value - rhs.value) <= budget ? Verdict::Holds : Verdict::Violated;
  return report;
}

namespace {

BoundValue evaluate_bound(ConvexityClass cls, const EndpointData& endpoints, double p, double q) {
  switch (cls.kind) {
    case ClassKind::SConvexSecondSense: return bound_s_convex(endpoints, p, q, cls.s);
    case ClassKind::Convex: return bound_convex(endpoints, p, q);
    case ClassKind::QuasiConvex: return bound_quasi_convex(endpoints, p, q);
    case ClassKind::PFunction: return bound_p_class(endpoints, p, q);
    case ClassKind::QClass: return bound_q_class(endpoints, p, q);
  }
  throw std::logic_error("evaluate_bound: unknown class");
}

bool certifies_nonnegativity_itself(ClassKind kind) {
  return kind == ClassKind::PFunction || kind == ClassKind::QClass;
}

}  // namespace

VerificationReport verify(const FunctionSpec& f, ConvexityClass cls, double a, double b,
                          double p, double q, ToleranceSpec tol, VerdictTolerance verdict_tol,
                          GridSpec grid, Exec exec) {
  if (!(a < b)) throw std::invalid_argument("verify: requires a < b");
  if (!(p > 0.0) || !(q > 0.0)) throw std::invalid_argument("verify: requires p > 0 and q > 0");
  if (cls.kind == ClassKind::QClass && (!(p > 1.0) || !(q > 1.0)))
    throw std::invalid_argument("verify: the Q-class bound requires p > 1 and q > 1");
  if (cls.kind == ClassKind::SConvexSecondSense && !(cls.s > 0.0 && cls.s <= 1.0))
    throw std::invalid_argument("verify: s-convex requires s in (0, 1]");

  VerificationReport report;
  report.problem = {f.id, a, b, p, q,
                    cls.kind == ClassKind::SConvexSecondSense ? std::optional<double>(cls.s)
                                                              : std::nullopt};

  // Hypotheses first: class membership, plus the codomain requirement f >= 0
  // for classes whose definition does not already contain it.
  report.certifications.push_back(certify(f, cls, {a, b}, grid, kDefaultCertTolerance, exec));
  if (!certifies_nonnegativity_itself(cls.kind)) {
    report.certifications.push_back(
        certify_nonnegative(f, cls, {a, b}, grid, kDefaultCertTolerance));
  }
  const bool hypotheses_ok =
      std::all_of(report.certifications.begin(), report.certifications.end(),
                  [](const CertificationResult& c) { return c.certified; });

  IntegralProblem problem{a, b, p, q, [&f](double x) { return f(x); }};
  const QuadratureResult lhs = integrate_weighted(problem, tol);
  report.lhs = lhs.value;
  report.lhs_error = lhs.error_estimate;

  // Endpoint values inside the certification tolerance band count as zero;
  // genuinely negative endpoints always fail the nonnegativity check above.
  double fa = f(a);
  double fb = f(b);
  if (fa < 0.0 && fa >= -kDefaultCertTolerance) fa = 0.0;
  if (fb < 0.0 && fb >= -kDefaultCertTolerance) fb = 0.0;
  if (fa >= 0.0 && fb >= 0.0) {
    const BoundValue bound = evaluate_bound(cls, {fa, fb, a, b}, p, q);
    report.formula_id = bound.formula_id;
    report.beta_terms = bound.beta_terms;
    report.rhs = bound.value;
    report.slack = bound.value - lhs.value;
    if (bound.value > 0.0) report.ratio = lhs.value / bound.value;
  } else {
    report.formula_id = to_string(cls.kind);
    report.note = "endpoint values are negative; bound not evaluated";
  }

  if (!hypotheses_ok) {
    report.verdict = Verdict::Inconclusive;
    if (report.note.empty())
      report.note = "class hypothesis refuted on the certification grid";
    return report;
  }
  if (!lhs.converged) {
    report.verdict = Verdict::Inconclusive;
    report.note = "quadrature did not converge";
    return report;
  }
  if (!std::isfinite(report.rhs)) {
    report.verdict = Verdict::Inconclusive;
    if (report.note.empty()) report.note = "bound evaluation produced no finite value";
    return report;
  }
  const double margin = lhs.error_estimate +
                        std::max(verdict_tol.absolute, verdict_tol.relative * std::abs(report.rhs));
  report.verdict = lhs.value <= report.rhs + margin ? Verdict::Holds : Verdict::Violated;
  return report;
}

// ---------------------------------------------------------------------------
// Sweep

namespace {

struct SweepTuple {
  const FunctionSpec* f;
  ConvexityClass cls;
  double p;
  double q;
};

std::vector<SweepTuple> expand_tuples(const SweepConfig& config) {
  if (config.function_ids.empty()) throw std::invalid_argument("sweep: no functions given");
  if (config.p_grid.empty() || config.q_grid.empty())
    throw std::invalid_argument("sweep: p and q grids must be nonempty");
  if (!(config.interval[0] < config.interval[1]))
    throw std::invalid_argument("sweep: empty interval");
  for (double v : config.p_grid)
    if (!(v > 0.0)) throw std::invalid_argument("sweep: p grid values must be positive");
  for (double v : config.q_grid)
    if (!(v > 0.0)) throw std::invalid_argument("sweep: q grid values must be positive");
  for (double s : config.s_grid)
    if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("sweep: s grid values must lie in (0, 1]");

  std::vector<SweepTuple> tuples;
  for (const std::string& id : config.function_ids) {
    const FunctionSpec* f = find_function(id);
    if (f == nullptr) throw std::invalid_argument("sweep: unknown function id '" + id + "'");

    std::vector<ConvexityClass> classes;
    if (config.class_filter) {
      classes.push_back(config.class_filter == ClassKind::SConvexSecondSense
                            ? ConvexityClass::s_convex(1.0)  // s substituted from s_grid below
                            : ConvexityClass{*config.class_filter, 1.0});
    } else {
      for (const ConvexityClass& c : f->declared_classes) classes.push_back(c);
    }

    for (const ConvexityClass& cls : classes) {
      const bool wants_s_grid =
          cls.kind == ClassKind::SConvexSecondSense && config.class_filter.has_value();
      if (wants_s_grid && config.s_grid.empty())
        throw std::invalid_argument("sweep: s-convex sweeps need a nonempty s grid");
      for (double p : config.p_grid) {
        for (double q : config.q_grid) {
          if (wants_s_grid) {
            for (double s : config.s_grid)
              tuples.push_back({f, ConvexityClass::s_convex(s), p, q});
          } else {
            tuples.push_back({f, cls, p, q});
          }
        }
      }
    }
  }
  return tuples;
}

VerificationReport run_tuple(const SweepTuple& t, const SweepConfig& config) {
  try {
    return verify(*t.f, t.cls, config.interval[0], config.interval[1], t.p, t.q,
                  config.tolerance, {}, {}, Exec::Serial);
  } catch (const std::exception& err) {
    VerificationReport report;
    report.problem = {t.f->id, config.interval[0], config.interval[1], t.p, t.q,
                      t.cls.kind == ClassKind::SConvexSecondSense ? std::optional<double>(t.cls.s)
                                                                  : std::nullopt};
    report.formula_id = to_string(t.cls.kind);
    report.verdict = Verdict::Inconclusive;
    report.note = err.what();
    return report;
  }
}

}  // namespace

std::vector<VerificationReport> sweep(const SweepConfig& config, Exec exec) {
  const std::vector<SweepTuple> tuples = expand_tuples(config);
  std::vector<VerificationReport> reports(tuples.size());
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < tuples.size(); ++i) reports[i] = run_tuple(tuples[i], config);
  } else {
    for (std::size_t i = 0; i < tuples.size(); ++i) reports[i] = run_tuple(tuples[i], config);
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Falsification

FalsificationRanges FalsificationRanges::defaults_for(ClassKind kind) {
  FalsificationRanges r;
  if (kind == ClassKind::QClass) {
    r.p_range = {1.1, 4.0};
    r.q_range = {1.1, 4.0};
  }
  return r;
}

namespace {

VerificationReport run_trial(ClassKind kind, const FalsificationRanges& ranges,
                             std::uint64_t seed, int trial) {
  const std::uint64_t trial_seed = Rng::child_seed(seed, static_cast<std::uint64_t>(trial));
  Rng rng(trial_seed);
  const double a = rng.uniform(ranges.a_range[0], ranges.a_range[1]);
  const double b = a + rng.uniform(ranges.width_range[0], ranges.width_range[1]);
  const double p = rng.uniform(ranges.p_range[0], ranges.p_range[1]);
  const double q = rng.uniform(ranges.q_range[0], ranges.q_range[1]);
  ConvexityClass cls{kind, 1.0};
  if (kind == ClassKind::SConvexSecondSense)
    cls.s = rng.uniform(ranges.s_range[0], ranges.s_range[1]);

  GeneratorShape shape;
  shape.domain = {a, b};
  try {
    const FunctionSpec f = generate(cls, rng.next(), shape);
    VerificationReport report = verify(f, cls, a, b, p, q, {}, {}, {}, Exec::Serial);
    report.seed = trial_seed;
    return report;
  } catch (const std::exception& err) {
    VerificationReport report;
    report.problem = {"generated", a, b, p, q,
                      kind == ClassKind::SConvexSecondSense ? std::optional<double>(cls.s)
                                                            : std::nullopt};
    report.formula_id = to_string(kind);
    report.verdict = Verdict::Inconclusive;
    report.note = err.what();
    report.seed = trial_seed;
    return report;
  }
}

}  // namespace

FalsificationSummary falsify(ClassKind kind, const FalsificationRanges& ranges, int trials,
                             std::uint64_t seed, Exec exec) {
  if (trials < 1) throw std::invalid_argument("falsify: trials must be >= 1");
  if (kind == ClassKind::QClass && (!(ranges.p_range[0] > 1.0) || !(ranges.q_range[0] > 1.0)))
    throw std::invalid_argument("falsify: Q-class ranges require p, q > 1");

  FalsificationSummary summary;
  summary.kind = kind;
  summary.trials = trials;
  summary.seed = seed;
  summary.reports.resize(trials);

  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < trials; ++i) summary.reports[i] = run_trial(kind, ranges, seed, i);
  } else {
    for (int i = 0; i < trials; ++i) summary.reports[i] = run_trial(kind, ranges, seed, i);
  }

  // Deterministic aggregation in trial order.
  for (int i = 0; i < trials; ++i) {
    const VerificationReport& r = summary.reports[i];
    switch (r.verdict) {
      case Verdict::Holds:
        ++summary.holds;
        if (r.slack < summary.min_slack) {
          summary.min_slack = r.slack;
          summary.min_slack_trial = i;
        }
        break;
      case Verdict::Violated:
        ++summary.violated;
        summary.violated_trials.push_back(i);
        break;
      case Verdict::Inconclusive:
        ++summary.inconclusive;
        break;
    }
  }
  return summary;
}

}  // namespace ineq
