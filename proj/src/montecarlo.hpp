#ifndef RISSEC_MONTECARLO_HPP
#define RISSEC_MONTECARLO_HPP

#include <vector>

#include "config.hpp"
#include "numerics/rng.hpp"
#include "sop.hpp"

namespace rissec {

/// One realization of every fading link (envelopes; phases are implicit under
/// the optimal-alignment assumption, so cascades are summed directly).
struct ChannelSample {
    std::vector<double> theta_k;    // S -> R_k, n_d
    std::vector<double> phi_k;      // R_k -> D, n_d
    std::vector<double> theta_p;    // S -> I_p, n_e (shared across eavesdroppers)
    std::vector<double> phi_pq;     // I_p -> E_q, n_e * l (p-major)
    std::vector<double> gamma_sq;   // direct S -> E_q SNRs, l
    std::vector<double> gamma_id;   // per-interferer SNRs, m
};

ChannelSample draw_sample(const SystemConfig& cfg, numerics::RngStream& rng);

struct RealizedSnrs {
    double sir = 0.0;                // destination signal-to-interference ratio
    double eve_colluding = 0.0;      // sum over eavesdroppers
    double eve_noncolluding = 0.0;   // best eavesdropper
    double eve(EveCase c) const {
        return c == EveCase::Colluding ? eve_colluding : eve_noncolluding;
    }
};

RealizedSnrs realize_snrs(const ChannelSample& s, const SystemConfig& cfg);

/// Empirical SOP with Wilson-interval half-width as uncertainty.
/// Exact event: 1 + gamma_D < psi (1 + gamma_E); lower bound: gamma_D < psi gamma_E.
/// ModelLaws draws (gamma_D, gamma_I, gamma_E) from the analytic laws the
/// closed forms are built on; ExactChannel simulates every link with no gamma
/// approximation. Deterministic for fixed (seed, trials).
SopEstimate estimate_sop(const SystemConfig& cfg, std::uint64_t trials,
                         McEventMode event_mode, McChannelMode channel_mode);

/// Both events from common random numbers (for the containment property).
struct PairedSopEstimate {
    SopEstimate exact;
    SopEstimate lower_bound;
};
PairedSopEstimate estimate_sop_paired(const SystemConfig& cfg, std::uint64_t trials,
                                      McChannelMode channel_mode);

} // namespace rissec

#endif
