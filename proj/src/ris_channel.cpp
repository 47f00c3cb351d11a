#include "ris_channel.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"
#include "numerics/special_functions.hpp"

namespace rissec {

using numerics::gamma_p;

void GammaFit::validate() const {
    if (!(shape > 0.0) || !(scale > 0.0) || n_elements == 0)
        throw std::invalid_argument("GammaFit: shape, scale, n_elements must be positive");
}

void RisLinkParams::validate() const {
    fit.validate();
    if (!(beta > 0.0) || !(avg_snr > 0.0))
        throw std::invalid_argument("RisLinkParams: beta and avg_snr must be positive");
}

double RisLinkParams::exp_coefficient() const {
    return std::sqrt(beta / (avg_snr * fit.scale * fit.scale));
}

GammaFit fit_laguerre_gamma(const AlphaMuParams& hop_s, const AlphaMuParams& hop_r,
                            unsigned n) {
    if (n == 0) throw std::invalid_argument("fit_laguerre_gamma: n must be >= 1");
    const auto pp = ProductParams::make(hop_s, hop_r);
    const double m1 = product_moment(1.0, pp);
    const double m2 = product_moment(2.0, pp);
    const double var = m2 - m1 * m1;
    if (!(var > 0.0))
        throw numeric_error("fit_laguerre_gamma: degenerate moments (m2 <= m1^2)");
    GammaFit fit;
    fit.shape = double(n) * m1 * m1 / var;
    fit.scale = var / m1;
    fit.n_elements = n;
    fit.integer_shape = std::max(1u, unsigned(std::llround(fit.shape)));
    return fit;
}

GammaFit fit_sum_of_squares(const AlphaMuParams& hop_s, const AlphaMuParams& hop_r,
                            unsigned n, unsigned l_terms) {
    if (n == 0 || l_terms == 0)
        throw std::invalid_argument("fit_sum_of_squares: counts must be >= 1");
    const auto pp = ProductParams::make(hop_s, hop_r);
    const double m1 = product_moment(1.0, pp);
    const double m2 = product_moment(2.0, pp);
    const double m3 = product_moment(3.0, pp);
    const double m4 = product_moment(4.0, pp);
    // exact moments of the n-element sum Y = sum of iid products
    const double N = double(n);
    const double ey2 = N * m2 + N * (N - 1) * m1 * m1;
    const double ey4 = N * m4 + 4 * N * (N - 1) * m1 * m3 + 3 * N * (N - 1) * m2 * m2 +
                       6 * N * (N - 1) * (N - 2) * m1 * m1 * m2 +
                       N * (N - 1) * (N - 2) * (N - 3) * m1 * m1 * m1 * m1;
    const double ew = double(l_terms) * ey2;
    const double vw = double(l_terms) * (ey4 - ey2 * ey2);
    if (!(vw > 0.0)) throw numeric_error("fit_sum_of_squares: degenerate moments");
    // match E[Z^2], Var[Z^2] of Z ~ Gamma(shape, scale):
    //   E[Z^2] = sh(sh+1) sc^2,  Var[Z^2]/E[Z^2]^2 = (4 sh + 6)/(sh (sh+1))
    const double r = vw / (ew * ew);
    const double shape = ((4.0 - r) + std::sqrt((r - 4.0) * (r - 4.0) + 24.0 * r)) / (2.0 * r);
    GammaFit fit;
    fit.shape = shape;
    fit.scale = std::sqrt(ew / (shape * (shape + 1.0)));
    fit.n_elements = n;
    fit.integer_shape = std::max(1u, unsigned(std::llround(shape)));
    return fit;
}

double gamma_d_pdf(double g, const RisLinkParams& link) {
    link.validate();
    if (!(g > 0.0)) throw std::invalid_argument("gamma_d_pdf: gamma must be positive");
    const double xi = link.exp_coefficient();
    const double th = link.fit.shape;
    const double lf = th * std::log(xi) - std::log(2.0) - std::lgamma(th) +
                      (th / 2.0 - 1.0) * std::log(g) - xi * std::sqrt(g);
    return std::exp(lf);
}

double gamma_d_cdf(double g, const RisLinkParams& link) {
    link.validate();
    if (g < 0.0) throw std::invalid_argument("gamma_d_cdf: gamma must be nonnegative");
    if (g == 0.0) return 0.0;
    return gamma_p(link.fit.shape, link.exp_coefficient() * std::sqrt(g));
}

double gamma_d_cdf_finite_sum(double g, const RisLinkParams& link) {
    link.validate();
    if (g < 0.0) throw std::invalid_argument("gamma_d_cdf_finite_sum: gamma must be nonnegative");
    if (g == 0.0) return 0.0;
    const double x = link.exp_coefficient() * std::sqrt(g);
    double term = 1.0, sum = 1.0;   // sum_{k=0}^{shape-1} x^k / k!
    for (unsigned k = 1; k < link.fit.integer_shape; ++k) {
        term *= x / double(k);
        sum += term;
    }
    return 1.0 - std::exp(-x) * sum;
}

} // namespace rissec
