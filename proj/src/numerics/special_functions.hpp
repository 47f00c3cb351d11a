#ifndef RISSEC_NUMERICS_SPECIAL_FUNCTIONS_HPP
#define RISSEC_NUMERICS_SPECIAL_FUNCTIONS_HPP

#include <complex>

namespace rissec::numerics {

/// Principal-branch log Gamma for complex argument (Lanczos, g=7).
/// Accurate to ~1e-13 relative on the strip used by the contour integrals.
/// Throws std::domain_error at nonpositive integer arguments.
std::complex<double> log_gamma(std::complex<double> s);

/// Regularized lower incomplete gamma P(a,x) = gamma(a,x)/Gamma(a), a > 0, x >= 0.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a,x) = 1 - P(a,x).
double gamma_q(double a, double x);

/// log K_nu(x) for x > 0. Uses std::cyl_bessel_k in the representable range
/// and the large-argument expansion where exp(-x) would underflow.
double log_bessel_k(double nu, double x);

/// ln binomial(n, k) for integer 0 <= k <= n.
double log_binomial(unsigned n, unsigned k);

} // namespace rissec::numerics

#endif
