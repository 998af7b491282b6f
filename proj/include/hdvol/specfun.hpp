#pragma once

// Scalar special functions used for centering constants, log-gamma moments
// and distribution comparisons. All functions are pure and thread-safe.

namespace hdvol::specfun {

/// ln Γ(x) for x > 0. Throws DomainError otherwise.
double ln_gamma(double x);

/// ψ(x) = d/dx ln Γ(x) for x > 0.
double digamma(double x);

/// ψ₁(x) = d/dx ψ(x) for x > 0.
double trigamma(double x);

/// Φ(t), the standard normal CDF. Saturates to 0 / 1 far in the tails.
double std_normal_cdf(double t);

/// ln n! computed through ln_gamma(n + 1).
double ln_factorial(double n);

}  // namespace hdvol::specfun
