#pragma once

#include <cstdint>

#include "ineq/rational.hpp"

namespace ineq {

struct BetaArgs {
  double m;
  double n;
};

// Arguments above this are rejected: the approximation is uncharacterized
// there, so we signal instead of silently degrading.
inline constexpr double kBetaArgumentCap = 1.0e4;

// Natural log of the Gamma function, Lanczos approximation (g = 7, 9 terms).
// Relative error is at the few-ulps level on [0.5, 1e4]; arguments in
// (0, 0.5) go through the reflection formula.
//
// Throws std::domain_error for x <= 0 or NaN.
double log_gamma(double x);

// Euler Beta function B(m, n) = Gamma(m) Gamma(n) / Gamma(m + n).
//
// Integer arguments with a small sum dispatch to the exact-rational oracle.
// Otherwise the value is assembled from Lanczos-sum ratios so the large
// log-Gamma terms cancel analytically instead of numerically.
//
// Throws std::domain_error (m or n <= 0 or NaN), std::overflow_error
// (argument beyond kBetaArgumentCap, or result above double range) and
// std::underflow_error (result below double range).
double beta(BetaArgs args);
inline double beta(double m, double n) { return beta(BetaArgs{m, n}); }

// Exact value of B(m, n) for positive integers, as the reduced rational
//   (m-1)! (n-1)! / (m+n-1)!  ==  1 / ((m+n-1) * C(m+n-2, m-1)).
// The right-hand form is already in lowest terms, so no big-number gcd is
// ever needed.
//
// Throws std::domain_error for m or n < 1 and std::overflow_error when
// m + n exceeds kBetaExactMaxSum.
ExactRational beta_exact(std::int64_t m, std::int64_t n);

inline constexpr std::int64_t kBetaExactMaxSum = 20000;

}  // namespace ineq
