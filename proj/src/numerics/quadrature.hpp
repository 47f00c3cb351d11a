#ifndef RISSEC_NUMERICS_QUADRATURE_HPP
#define RISSEC_NUMERICS_QUADRATURE_HPP

#include <functional>

namespace rissec::numerics {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // absolute error estimate
    int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7,K15) on a finite interval.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-10, double rel_tol = 1e-10,
                     int max_subdivisions = 200);

/// Integral over [0, inf) via x = scale * tan(u), u in (0, pi/2).
/// `scale` should be of the order of the integrand's mass location.
QuadResult integrate_zero_inf(const std::function<double(double)>& f,
                              double scale = 1.0,
                              double abs_tol = 1e-10, double rel_tol = 1e-10,
                              int max_subdivisions = 300);

} // namespace rissec::numerics

#endif
