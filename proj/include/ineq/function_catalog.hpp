#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ineq/exec.hpp"

namespace ineq {

// The generalized convexity classes handled by the bound evaluators.
// Convex is the s = 1 specialization of SConvexSecondSense and is kept as
// its own kind so reports can name it directly.
enum class ClassKind { SConvexSecondSense, Convex, QuasiConvex, PFunction, QClass };

struct ConvexityClass {
  ClassKind kind = ClassKind::Convex;
  double s = 1.0;  // only meaningful for SConvexSecondSense, in (0, 1]

  static ConvexityClass s_convex(double s) { return {ClassKind::SConvexSecondSense, s}; }
  static ConvexityClass convex() { return {ClassKind::Convex, 1.0}; }
  static ConvexityClass quasi_convex() { return {ClassKind::QuasiConvex, 1.0}; }
  static ConvexityClass p_function() { return {ClassKind::PFunction, 1.0}; }
  static ConvexityClass q_class() { return {ClassKind::QClass, 1.0}; }
};

// Stable names used on the CLI and in reports: s-convex, convex, quasi, p, q.
std::string to_string(ClassKind kind);
std::optional<ClassKind> parse_class_kind(std::string_view name);

enum class Monotonicity { Increasing, Decreasing, None };
std::string to_string(Monotonicity m);

// ---------------------------------------------------------------------------
// Function rules: the closed combinator set. Every rule is total on [0, inf),
// so specs can be integrated on any test interval; `domain` records where the
// spec's class claims are certified.

struct Polynomial {
  std::vector<double> coeffs;  // coeffs[k] * x^k
};
struct PowerLaw {
  double s;       // exponent in (0, 1]
  double coeff;   // >= 0
  double offset;  // >= 0
};
struct ExpFn {};  // e^x
struct AbsAffine {
  double center;
  double slope;
  double offset;
};
struct PiecewiseLinear {
  std::vector<double> xs;  // strictly increasing
  std::vector<double> ys;
  // Outside [xs.front(), xs.back()] the end segments extrapolate.
};
struct SinePi {};  // sin(pi x): the catalog's negative control

using FunctionRule =
    std::variant<Polynomial, PowerLaw, ExpFn, AbsAffine, PiecewiseLinear, SinePi>;

double eval_rule(const FunctionRule& rule, double x);
std::string rule_kind_name(const FunctionRule& rule);

struct FunctionSpec {
  std::string id;
  FunctionRule rule;
  double scale = 1.0;  // positive multiplier; scaling preserves memberships
  std::array<double, 2> domain{0.0, 1.0};
  std::vector<ConvexityClass> declared_classes;
  std::optional<bool> symmetric_about_midpoint;
  Monotonicity monotonicity = Monotonicity::None;

  double operator()(double x) const { return scale * eval_rule(rule, x); }
};

// Same function multiplied by c > 0. Every class membership survives because
// each defining inequality is positively homogeneous in f.
FunctionSpec scaled(const FunctionSpec& spec, double c);

// ---------------------------------------------------------------------------
// Grid certification

struct GridSpec {
  int x_nodes = 101;
  int y_nodes = 101;
  int lambda_nodes = 99;
};

inline constexpr double kDefaultCertTolerance = 1e-9;

enum class CertCheck { ClassInequality, Nonnegativity };

// Outcome of one grid certification. For Refuted results the witness triple
// (x, y, lambda) re-violates the defining inequality by more than the
// tolerance when evaluated independently. Nonnegativity refutations use the
// degenerate witness (x0, x0, 1/2) where f(x0) < -tol.
struct CertificationResult {
  ConvexityClass cls;
  CertCheck check = CertCheck::ClassInequality;
  GridSpec grid;
  double max_violation = 0.0;
  std::optional<std::array<double, 3>> witness;
  bool certified = false;
};

// Signed slack of the class's defining inequality at one triple:
// f(lambda x + (1-lambda) y) minus the class bound. Positive means violated.
double class_violation(const FunctionSpec& f, ConvexityClass cls, double x, double y,
                       double lambda);

// Scan the defining inequality of `cls` over the grid on `interval`.
// Lambda values are sampled on the open interval (0,1) for the s-convex
// family and the Q class (whose bound diverges at the endpoints) and on the
// closed interval [0,1] for quasi-convex and P. For P and Q the scan also
// checks the definitions' nonnegativity requirement on the x grid.
CertificationResult certify(const FunctionSpec& f, ConvexityClass cls,
                            std::array<double, 2> interval, GridSpec grid = {},
                            double tol = kDefaultCertTolerance, Exec exec = Exec::Parallel);

// Certify on the spec's own domain.
CertificationResult certify(const FunctionSpec& f, ConvexityClass cls, GridSpec grid = {},
                            double tol = kDefaultCertTolerance, Exec exec = Exec::Parallel);

// Standalone nonnegativity scan over the x grid, used by the verifier as the
// codomain hypothesis check for classes whose definition does not already
// include it.
CertificationResult certify_nonnegative(const FunctionSpec& f, ConvexityClass cls,
                                        std::array<double, 2> interval, GridSpec grid = {},
                                        double tol = kDefaultCertTolerance);

// ---------------------------------------------------------------------------
// Seeded generators

struct GeneratorShape {
  int min_nodes = 3;
  int max_nodes = 8;
  double value_lo = 0.0;
  double value_hi = 4.0;
  std::array<double, 2> domain{0.0, 1.0};
  int max_retries = 32;
};

// Deterministic random member of `cls`: convex and quasi-convex specs are
// correct by construction; P, Q and s-convex specs are additionally filtered
// through certify. Throws std::runtime_error if no certified candidate is
// found within shape.max_retries.
FunctionSpec generate(ConvexityClass cls, std::uint64_t seed, GeneratorShape shape = {});

// ---------------------------------------------------------------------------
// Built-in catalog

const std::vector<FunctionSpec>& builtin_catalog();
const FunctionSpec* find_function(std::string_view id);

}  // namespace ineq
