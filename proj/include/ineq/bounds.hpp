#pragma once

#include <string>
#include <vector>

namespace ineq {

// Endpoint data feeding the closed-form bounds: the function values at the
// interval ends. All bound formulas require fa, fb >= 0.
struct EndpointData {
  double fa;
  double fb;
  double a;
  double b;
};

// One Beta evaluation inside a bound: the bound contributes
// coefficient * beta(m, n) to the value. Kept so reports can show exactly
// which Beta terms entered a verdict.
struct BetaTerm {
  double m;
  double n;
  double coefficient;
};

struct BoundValue {
  double value = 0.0;
  std::string formula_id;
  std::vector<BetaTerm> beta_terms;
};

// Stable formula identifiers used in reports and on the CLI.
namespace formula {
inline constexpr const char* kLemmaIdentity = "lem2.1";
inline constexpr const char* kSConvex = "thm2.1";
inline constexpr const char* kQuasiConvex = "thm2.2";
inline constexpr const char* kPClass = "thm2.3";
inline constexpr const char* kQClass = "thm2.4";
inline constexpr const char* kConvex = "cor2.3";
}  // namespace formula

// ((b-a)^(p+q+1)/2) { (fa^2+fb^2)[B(p+1, 2s+q+1) + B(q+1, 2s+p+1)]
//                     + 4 fa fb B(p+s+1, q+s+1) }
// for f s-convex in the second sense with s in (0, 1].
BoundValue bound_s_convex(const EndpointData& e, double p, double q, double s);

// The s = 1 specialization (ordinary convexity); same code path.
BoundValue bound_convex(const EndpointData& e, double p, double q);

// (b-a)^(p+q+1) max(fa, fb)^2 B(p+1, q+1). The monotone specializations are
// this formula with the max resolved to fb (increasing) or fa (decreasing).
BoundValue bound_quasi_convex(const EndpointData& e, double p, double q);

// (b-a)^(p+q+1) (fa + fb)^2 B(p+1, q+1).
BoundValue bound_p_class(const EndpointData& e, double p, double q);

// ((b-a)^(p+q+1)/2) { (fa^2+fb^2)(B(p+1, q-1) + B(p-1, q+1)) + 4 fa fb B(p, q) }
// Requires p > 1 and q > 1; the Beta terms diverge otherwise.
BoundValue bound_q_class(const EndpointData& e, double p, double q);

}  // namespace ineq
