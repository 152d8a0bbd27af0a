#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace ineq {

// One weighted-product integral instance: integrate
//   (x - a)^p (b - x)^q f(x) f(a + b - x)  over [a, b],
// or its t-substituted form over [0, 1].
struct IntegralProblem {
  double a;
  double b;
  double p;
  double q;
  std::function<double(double)> f;
};

struct ToleranceSpec {
  double absolute = 1e-12;
  double relative = 1e-10;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

// Raised when the integrand produces a non-finite sample.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double x)
      : std::runtime_error(what + " at x = " + std::to_string(x)), x_(x) {}
  double where() const { return x_; }

 private:
  double x_;
};

// Initial mesh grading: panels refined geometrically (ratio 1/4) toward an
// endpoint whose weight exponent is below 1, restoring convergence order in
// the presence of the endpoint derivative singularity.
struct GradeSpec {
  int left_depth = 0;
  int right_depth = 0;
};

inline constexpr int kDefaultMaxSubdivisions = 4096;
inline constexpr int kGradeDepth = 12;

// Single application of the embedded Gauss(7)/Kronrod(15) pair on [lo, hi].
// `error` is |kronrod - gauss|. Exposed so tests can exercise the base rule's
// polynomial exactness directly.
struct PanelRule {
  double kronrod;
  double gauss;
  double error;
};
PanelRule kronrod15(const std::function<double(double)>& f, double lo, double hi);

// Adaptive bisection driver: worst-error-first panel splitting with index
// tie-break, so results are bit-reproducible for fixed inputs. Convergence
// means the summed panel errors fall below max(absolute, relative*|value|).
// Non-convergence is reported through `converged`, never thrown.
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           ToleranceSpec tol = {}, GradeSpec grade = {},
                           int max_subdivisions = kDefaultMaxSubdivisions);

// The weighted-product integral over [a, b] (x-form).
QuadratureResult integrate_weighted(const IntegralProblem& problem, ToleranceSpec tol = {});

// The substituted form (b-a)^(p+q+1) * integral over [0,1] of
// (1-t)^p t^q f(ta + (1-t)b) f((1-t)a + tb) dt, prefactor included.
QuadratureResult integrate_t_form(const IntegralProblem& problem, ToleranceSpec tol = {});

}  // namespace ineq
