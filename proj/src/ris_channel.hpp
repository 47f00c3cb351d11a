#ifndef RISSEC_RIS_CHANNEL_HPP
#define RISSEC_RIS_CHANNEL_HPP

#include "fading.hpp"

namespace rissec {

/// First-Laguerre-term (gamma) fit to the sum of n iid cascaded products.
struct GammaFit {
    double shape = 1.0;          // theta
    double scale = 1.0;          // zeta
    unsigned n_elements = 1;
    unsigned integer_shape = 1;  // round(theta), for the finite-sum CDF form

    void validate() const;
};

/// Moment-matched fit: theta = n m1^2/(m2 - m1^2), zeta = (m2 - m1^2)/m1,
/// with m1, m2 the product's first two moments.
GammaFit fit_laguerre_gamma(const AlphaMuParams& hop_s, const AlphaMuParams& hop_r,
                            unsigned n);

/// Gamma fit in the squared domain: Z ~ Gamma(shape, scale) such that Z^2
/// matches the first two moments of a sum of l_terms iid squared cascade sums
/// (each of n elements). Used for the colluding RIS-eavesdropper aggregate.
GammaFit fit_sum_of_squares(const AlphaMuParams& hop_s, const AlphaMuParams& hop_r,
                            unsigned n, unsigned l_terms);

/// RIS-aided SNR law: gamma = (avg_snr/beta) * Y^2 with Y ~ Gamma(fit).
struct RisLinkParams {
    GammaFit fit;
    double beta = 1.0;      // path-loss scalar; enters as avg_snr -> avg_snr/beta
    double avg_snr = 1.0;   // linear

    void validate() const;
    /// sqrt(beta/(avg_snr * zeta^2)): the exponential coefficient of the pdf.
    double exp_coefficient() const;
};

double gamma_d_pdf(double g, const RisLinkParams& link);
double gamma_d_cdf(double g, const RisLinkParams& link);

/// Finite-sum CDF form, valid for the integer shape: 1 - sum_{k<shape} ...
/// Uses link.fit.integer_shape; provided for fidelity tests against the
/// incomplete-gamma form, which is canonical.
double gamma_d_cdf_finite_sum(double g, const RisLinkParams& link);

} // namespace rissec

#endif
