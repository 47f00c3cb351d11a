#ifndef RISSEC_EAVESDROPPER_HPP
#define RISSEC_EAVESDROPPER_HPP

#include <cstdint>
#include <vector>

#include "fading.hpp"
#include "ris_channel.hpp"

namespace rissec {

enum class EveScenario { DirectLink, OwnRis, SharedRis };
enum class EveCase { Colluding, NonColluding };

/// Eavesdropper-side configuration. avg_snr_e is the per-link average SNR of
/// each S-E_q direct link; the colluding aggregate is modelled as an alpha-mu
/// law with mu -> L mu_e and scale L avg_snr_e, which is the exact sum law at
/// alpha_e = 1 and preserves the aggregate mean (see module docs).
struct EveConfig {
    unsigned l_eves = 1;
    EveScenario scenario = EveScenario::DirectLink;
    EveCase eve_case = EveCase::Colluding;
    AlphaMuParams direct_fading{1.0, 1.0, 1.0};  // alpha_e, mu_e (omega unused)
    double avg_snr_e = 1.0;                      // per-link, linear
    RisLinkParams ris_link;                      // single-eve cascade law (theta_E, zeta_E)
    GammaFit colluding_ris_fit;                  // squared-domain refit for L >= 2
    std::uint64_t composition_cap = 1'000'000;

    void validate() const;
};

/// One term of an eavesdropper pdf written as
///   sign * exp(log_coeff) * g^(gamma_exponent - 1) * exp(-decay_rate * g^decay_exponent).
struct EveLawTerm {
    double log_coeff;
    int sign;
    double gamma_exponent;
    double decay_rate;
    double decay_exponent;   // alpha_e for direct laws, 1/2 for RIS laws
};

/// Weak composition of an expansion index with its multinomial coefficient.
struct Composition {
    std::vector<unsigned> parts;
    double multinomial_coefficient;
};

/// All weak compositions of `target` into `parts` nonnegative integers.
/// Throws capacity_error when C(target+parts-1, parts-1) exceeds `cap`.
std::vector<Composition> enumerate_compositions(unsigned target, unsigned parts,
                                                std::uint64_t cap = 1'000'000);

// --- Scenario I: direct S-E links ---
double colluding_direct_pdf(double g, const EveConfig& cfg);
double colluding_direct_cdf(double g, const EveConfig& cfg);
/// Finite double-sum expansion (requires integer mu_e; exact, terminates at L-1).
double noncolluding_direct_pdf(double g, const EveConfig& cfg);
/// Construction route L F^(L-1) f of the single-link law; any mu_e.
double noncolluding_direct_pdf_construction(double g, const EveConfig& cfg);
double noncolluding_direct_cdf(double g, const EveConfig& cfg);

// --- Scenarios II/III: RIS-aided eavesdropper links ---
double colluding_ris_pdf(double g, const EveConfig& cfg);
double colluding_ris_cdf(double g, const EveConfig& cfg);
/// Finite expansion over integer theta_E singles (L >= 2); L = 1 falls back
/// to the colluding (= single-eve) law with continuous theta_E.
double noncolluding_ris_pdf(double g, const EveConfig& cfg);
double noncolluding_ris_pdf_construction(double g, const EveConfig& cfg);
double noncolluding_ris_cdf(double g, const EveConfig& cfg);

/// Unified pdf/cdf of the configured eavesdropper SNR law.
double eve_pdf(double g, const EveConfig& cfg);
double eve_cdf(double g, const EveConfig& cfg);

/// Term decomposition of the configured law, consumed by the closed-form SOP
/// kernels. Throws mode_error where the expansion requires integrality
/// (non-integer mu_e or theta_E).
std::vector<EveLawTerm> eve_law_terms(const EveConfig& cfg);

} // namespace rissec

#endif
