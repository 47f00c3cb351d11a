#include "config.hpp"

#include <cmath>
#include <stdexcept>

namespace rissec {

double SecrecyTarget::psi() const { return std::exp2(tau0); }

void SecrecyTarget::validate() const {
    if (!(tau0 >= 0.0) || !std::isfinite(tau0))
        throw std::invalid_argument("SecrecyTarget: tau0 must be a nonnegative real");
}

void SystemConfig::validate() const {
    if (n_d == 0 || n_e_elements == 0 || l_eves == 0 || m_interferers == 0)
        throw std::invalid_argument("SystemConfig: counts must be >= 1");
    hop_sr.validate();
    hop_rd.validate();
    eve_hop_si.validate();
    eve_hop_ie.validate();
    interferer_fading.validate();
    eve_direct_fading.validate();
    if (!(avg_snr_d > 0.0) || !(avg_snr_i > 0.0) || !(avg_snr_e > 0.0) ||
        !(avg_snr_e_ris > 0.0))
        throw std::invalid_argument("SystemConfig: average SNRs must be positive");
    if (!(beta_d > 0.0) || !(beta_e > 0.0))
        throw std::invalid_argument("SystemConfig: path-loss scalars must be positive");
    target.validate();
}

DerivedLaws derive_laws(const SystemConfig& cfg) {
    cfg.validate();
    DerivedLaws d;
    d.fit_d = fit_laguerre_gamma(cfg.hop_sr, cfg.hop_rd, cfg.n_d);
    d.dest_link = RisLinkParams{d.fit_d, cfg.beta_d, cfg.avg_snr_d};
    d.interference = InterferenceParams{cfg.m_interferers, cfg.interferer_fading,
                                        cfg.avg_snr_i, true};
    d.sir = sir_coefficients(d.fit_d, d.dest_link, d.interference);

    d.eve.l_eves = cfg.l_eves;
    d.eve.scenario = cfg.scenario;
    d.eve.eve_case = cfg.eve_case;
    d.eve.direct_fading = cfg.eve_direct_fading;
    d.eve.avg_snr_e = cfg.avg_snr_e;
    if (cfg.scenario == EveScenario::SharedRis) {
        // parameter-equality reduction: the eavesdropper taps the destination
        // RIS, so its cascade law reuses the destination fit and path loss
        d.effective_n_e = cfg.n_d;
        d.eve.ris_link = RisLinkParams{d.fit_d, cfg.beta_d, cfg.avg_snr_e_ris};
        d.eve.colluding_ris_fit =
            fit_sum_of_squares(cfg.hop_sr, cfg.hop_rd, cfg.n_d, cfg.l_eves);
    } else if (cfg.scenario == EveScenario::OwnRis) {
        d.effective_n_e = cfg.n_e_elements;
        const GammaFit fit_e =
            fit_laguerre_gamma(cfg.eve_hop_si, cfg.eve_hop_ie, cfg.n_e_elements);
        d.eve.ris_link = RisLinkParams{fit_e, cfg.beta_e, cfg.avg_snr_e_ris};
        d.eve.colluding_ris_fit =
            fit_sum_of_squares(cfg.eve_hop_si, cfg.eve_hop_ie, cfg.n_e_elements, cfg.l_eves);
    } else {
        d.effective_n_e = cfg.n_e_elements;
    }
    return d;
}

} // namespace rissec
