#ifndef RISSEC_INTERFERENCE_HPP
#define RISSEC_INTERFERENCE_HPP

#include "fading.hpp"
#include "meijer_g.hpp"
#include "ris_channel.hpp"

namespace rissec {

/// M equal-power co-channel interferers. avg_snr_i is the aggregate average
/// SNR (linear); each interferer carries avg_snr_i / M, which makes the
/// mu -> M mu substitution in the aggregate law exact at alpha_i = 1.
struct InterferenceParams {
    unsigned m_interferers = 1;
    AlphaMuParams fading{1.0, 1.0, 1.0};   // alpha_i, mu_i (omega unused)
    double avg_snr_i = 1.0;
    bool equal_power = true;               // model assumption, fixed

    void validate() const;
};

/// Aggregate interference SNR density: alpha-mu power law with mu -> M mu_i
/// and scale avg_snr_i.
double interference_sum_pdf(double x, const InterferenceParams& ip);
double interference_sum_cdf(double x, const InterferenceParams& ip);

/// Coefficient block of the SIR law (destination SNR / aggregate interference).
struct SirCoefficients {
    double a1 = 0.0;        // Meijer-G argument scale
    double xi1 = 0.0;       // exponential coefficient of the destination pdf
    double log_xi2 = 0.0;   // log of the positive prefactor
    double b1 = 1.0;        // 1/alpha_i
    double omega0 = 0.0;    // theta/2 + M alpha_i mu_i - 1
    double theta = 1.0;     // destination gamma-fit shape
    double alpha_i = 1.0;
    unsigned b1_int = 1;    // integral B1 for the closed-form path
    bool closed_form_ok = false;

    /// a-row of the Eq.-(6)-type G: {-omega0 - j alpha_i}, j = 0..B1-1.
    std::vector<double> a_row() const;
};

SirCoefficients sir_coefficients(const GammaFit& fit, const RisLinkParams& link,
                                 const InterferenceParams& ip);

/// SIR pdf/cdf via the Meijer-G closed form. Requires integer B1
/// (throws mode_error otherwise; use the convolution route then).
double sir_pdf(double g, const SirCoefficients& c);
double sir_cdf(double g, const SirCoefficients& c);

/// Independent convolution route: F(g) = E_x[F_gd(g x)] over the aggregate
/// interference law; valid for any alpha_i. This is the quadrature-path twin
/// of sir_cdf.
double sir_cdf_by_convolution(double g, const RisLinkParams& link,
                              const InterferenceParams& ip);
double sir_pdf_by_convolution(double g, const RisLinkParams& link,
                              const InterferenceParams& ip);

} // namespace rissec

#endif
