#pragma once

// Scalar standard-normal primitives. Everything downstream (mixture CDFs,
// hazard ratios, tail-sensitive solvers) routes through these, so they are
// tuned for accuracy in the tails, not just the bulk.

namespace cheeger {

inline constexpr double inv_sqrt_2pi = 0.3989422804014326779399461;
inline constexpr double sqrt_2_over_pi = 0.7978845608028653558798921;

/// Standard normal density phi(x) = exp(-x^2/2)/sqrt(2*pi).
double norm_pdf(double x);

/// Standard normal distribution function Phi(x), erfc-based.
/// Relative accuracy better than 1e-14 on [-8, 8].
double norm_cdf(double x);

/// log Phi(x); switches to a Mills-ratio continued fraction for x < -10
/// so deep tails keep full relative accuracy.
double norm_logcdf(double x);

/// log(1 - Phi(x)) = norm_logcdf(-x).
double norm_logccdf(double x);

/// Inverse of norm_cdf on (0, 1). Rational initial guess refined with
/// Newton steps; |Phi(result) - v| <= 1e-13.
double norm_quantile(double v);

} // namespace cheeger
