#ifndef RISSEC_CONFIG_HPP
#define RISSEC_CONFIG_HPP

#include <cstdint>

#include "eavesdropper.hpp"
#include "fading.hpp"
#include "interference.hpp"
#include "ris_channel.hpp"

namespace rissec {

struct SecrecyTarget {
    double tau0 = 0.1;   // target secrecy rate, bits/s/Hz
    double psi() const;  // 2^tau0
    void validate() const;
};

enum class McEventMode { Exact, LowerBound };
enum class McChannelMode { ModelLaws, ExactChannel };

/// Full scenario description. Average SNRs are linear; conversion from dB
/// happens at the configuration boundary (C API / CLI).
struct SystemConfig {
    unsigned n_d = 2;             // destination RIS elements
    unsigned n_e_elements = 2;    // eavesdropper RIS elements
    unsigned l_eves = 2;
    unsigned m_interferers = 2;

    AlphaMuParams hop_sr{2.0, 1.0, 1.0};       // S -> R_k
    AlphaMuParams hop_rd{2.0, 1.0, 1.0};       // R_k -> D
    AlphaMuParams eve_hop_si{2.0, 1.0, 1.0};   // S -> I_p
    AlphaMuParams eve_hop_ie{2.0, 1.0, 1.0};   // I_p -> E_q
    AlphaMuParams interferer_fading{1.0, 1.0, 1.0};   // alpha_i, mu_i
    AlphaMuParams eve_direct_fading{1.0, 1.0, 1.0};   // alpha_e, mu_e

    double avg_snr_d = 1e10;      // S-R-D cascade average SNR
    double avg_snr_i = 1e10;      // aggregate interference average SNR
    double avg_snr_e = 1.2589254117941673;       // per direct S-E_q link (1 dB)
    double avg_snr_e_ris = 1.2589254117941673;   // per RIS-aided E_q link (1 dB)
    double beta_d = 0.5;
    double beta_e = 0.5;

    EveScenario scenario = EveScenario::DirectLink;
    EveCase eve_case = EveCase::Colluding;
    SecrecyTarget target{};

    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 20250809;
    McChannelMode mc_channel = McChannelMode::ModelLaws;

    void validate() const;
};

/// Everything the evaluators need, assembled once per configuration.
struct DerivedLaws {
    GammaFit fit_d;
    RisLinkParams dest_link;
    InterferenceParams interference;
    SirCoefficients sir;
    EveConfig eve;
    unsigned effective_n_e = 0;   // n_d under SharedRis
};

DerivedLaws derive_laws(const SystemConfig& cfg);

} // namespace rissec

#endif
