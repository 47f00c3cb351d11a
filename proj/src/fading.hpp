#ifndef RISSEC_FADING_HPP
#define RISSEC_FADING_HPP

#include <cstdint>
#include <vector>

#include "numerics/rng.hpp"

namespace rissec {

/// alpha-mu fading parameters for a single hop. Omega is the alpha-root-mean
/// scale: E[X^alpha] = Omega^alpha, so Omega = 1 gives a unit-power envelope
/// at alpha = 2.
struct AlphaMuParams {
    double alpha = 2.0;
    double mu = 1.0;
    double omega = 1.0;

    void validate() const;
};

/// Envelope density f(x) = a mu^mu x^(a mu - 1) / (Om^(a mu) G(mu)) e^(-mu (x/Om)^a).
double alpha_mu_pdf(double x, const AlphaMuParams& p);

/// F(x) = P(mu, mu (x/Om)^a), regularized lower incomplete gamma.
double alpha_mu_cdf(double x, const AlphaMuParams& p);

/// E[X^s] = Om^s G(mu + s/a) / (mu^(s/a) G(mu)); requires mu + s/a > 0.
double alpha_mu_moment(double s, const AlphaMuParams& p);

/// X = Om (G/mu)^(1/a), G ~ Gamma(mu, 1). Deterministic for a given stream state.
double alpha_mu_draw(const AlphaMuParams& p, numerics::RngStream& rng);
std::vector<double> alpha_mu_sample(const AlphaMuParams& p, numerics::RngStream& rng,
                                    std::size_t n);

/// Two-hop product Y = X_s X_r with the derived Bessel-form coefficients.
///
/// The closed Bessel-K density holds for alpha_s == alpha_r (the chi
/// coefficients below, with the shared alpha); for unequal alphas the product
/// density is evaluated by direct Mellin convolution of the two hop densities.
/// Moments always factorize: E[Y^s] = E[X_s^s] E[X_r^s].
struct ProductParams {
    AlphaMuParams hop_s;
    AlphaMuParams hop_r;
    // chi set (shared-alpha convention; chi2's bare alpha resolved as alpha_s)
    double chi1 = 0, chi2 = 0, chi3 = 0, chi4 = 0, chi5 = 0, chi6 = 0, chi7 = 0;
    bool equal_alpha = false;

    static ProductParams make(const AlphaMuParams& hop_s, const AlphaMuParams& hop_r);
};

double product_pdf(double y, const ProductParams& pp);
double product_moment(double s, const ProductParams& pp);

} // namespace rissec

#endif
