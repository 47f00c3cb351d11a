#include "montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "errors.hpp"

namespace rissec {

namespace {

// SNR-level alpha-mu draw: X = om (G/mu)^(1/alpha), G ~ Gamma(mu)
double snr_alpha_mu_draw(double alpha, double mu, double om, numerics::RngStream& rng) {
    return om * std::pow(rng.gamma(mu) / mu, 1.0 / alpha);
}

struct TrialSnrs {
    double sir;
    double eve;         // per configured case
    double eve_other;   // the other combiner, for paired diagnostics
};

class Sampler {
public:
    Sampler(const SystemConfig& cfg, const DerivedLaws& laws)
        : cfg_(cfg), laws_(laws) {}

    RealizedSnrs model_laws_trial(numerics::RngStream& rng) const {
        RealizedSnrs r;
        const double y = rng.gamma(laws_.fit_d.shape) * laws_.fit_d.scale;
        const double snr_d = cfg_.avg_snr_d / cfg_.beta_d * y * y;
        double snr_i;
        int guard = 0;
        do {
            snr_i = snr_alpha_mu_draw(cfg_.interferer_fading.alpha,
                                      double(cfg_.m_interferers) * cfg_.interferer_fading.mu,
                                      cfg_.avg_snr_i, rng);
        } while (snr_i <= 0.0 && ++guard < 64);
        r.sir = snr_d / snr_i;
        if (cfg_.scenario == EveScenario::DirectLink) {
            const auto& f = cfg_.eve_direct_fading;
            if (cfg_.eve_case == EveCase::Colluding) {
                const double lm = double(cfg_.l_eves) * f.mu;
                r.eve_colluding = snr_alpha_mu_draw(f.alpha, lm,
                                                    double(cfg_.l_eves) * cfg_.avg_snr_e, rng);
                r.eve_noncolluding = r.eve_colluding;   // unused in this mode
            } else {
                double mx = 0.0;
                for (unsigned q = 0; q < cfg_.l_eves; ++q)
                    mx = std::max(mx, snr_alpha_mu_draw(f.alpha, f.mu, cfg_.avg_snr_e, rng));
                r.eve_noncolluding = mx;
                r.eve_colluding = mx;
            }
            return r;
        }
        const RisLinkParams& link = laws_.eve.ris_link;
        const double c_e = link.avg_snr / link.beta;
        if (cfg_.eve_case == EveCase::Colluding) {
            const GammaFit& fit =
                cfg_.l_eves == 1 ? link.fit : laws_.eve.colluding_ris_fit;
            const double z = rng.gamma(fit.shape) * fit.scale;
            r.eve_colluding = c_e * z * z;
            r.eve_noncolluding = r.eve_colluding;
        } else {
            double mx = 0.0;
            const double shape =
                cfg_.l_eves == 1 ? link.fit.shape : double(link.fit.integer_shape);
            for (unsigned q = 0; q < cfg_.l_eves; ++q) {
                const double z = rng.gamma(shape) * link.fit.scale;
                mx = std::max(mx, c_e * z * z);
            }
            r.eve_noncolluding = mx;
            r.eve_colluding = mx;
        }
        return r;
    }

    RealizedSnrs exact_channel_trial(numerics::RngStream& rng) const {
        for (int attempt = 0; attempt < 64; ++attempt) {
            const ChannelSample s = draw_sample(cfg_, rng);
            const RealizedSnrs r = realize_snrs(s, cfg_);
            if (std::isfinite(r.sir)) return r;   // zero denominator: resample
        }
        throw numeric_error("exact_channel_trial: persistent zero interference sum");
    }

private:
    const SystemConfig& cfg_;
    const DerivedLaws& laws_;
};

double wilson_half_width(double p_hat, double n) {
    const double z = 2.0;
    const double z2 = z * z;
    return z * std::sqrt(p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
}

} // namespace

ChannelSample draw_sample(const SystemConfig& cfg, numerics::RngStream& rng) {
    cfg.validate();
    ChannelSample s;
    s.theta_k.resize(cfg.n_d);
    s.phi_k.resize(cfg.n_d);
    for (unsigned k = 0; k < cfg.n_d; ++k) s.theta_k[k] = alpha_mu_draw(cfg.hop_sr, rng);
    for (unsigned k = 0; k < cfg.n_d; ++k) s.phi_k[k] = alpha_mu_draw(cfg.hop_rd, rng);
    const unsigned m = cfg.m_interferers;
    s.gamma_id.resize(m);
    // equal-power split: each interferer carries avg_snr_i / M
    for (unsigned i = 0; i < m; ++i)
        s.gamma_id[i] = snr_alpha_mu_draw(cfg.interferer_fading.alpha, cfg.interferer_fading.mu,
                                          cfg.avg_snr_i / double(m), rng);
    if (cfg.scenario == EveScenario::DirectLink) {
        s.gamma_sq.resize(cfg.l_eves);
        for (unsigned q = 0; q < cfg.l_eves; ++q)
            s.gamma_sq[q] = snr_alpha_mu_draw(cfg.eve_direct_fading.alpha,
                                              cfg.eve_direct_fading.mu, cfg.avg_snr_e, rng);
        return s;
    }
    const bool shared = cfg.scenario == EveScenario::SharedRis;
    const unsigned ne = shared ? cfg.n_d : cfg.n_e_elements;
    if (shared) {
        s.theta_p = s.theta_k;   // eavesdropper taps the destination RIS
    } else {
        s.theta_p.resize(ne);
        for (unsigned p = 0; p < ne; ++p) s.theta_p[p] = alpha_mu_draw(cfg.eve_hop_si, rng);
    }
    const AlphaMuParams& second_hop = shared ? cfg.hop_rd : cfg.eve_hop_ie;
    s.phi_pq.resize(std::size_t(ne) * cfg.l_eves);
    for (unsigned q = 0; q < cfg.l_eves; ++q)
        for (unsigned p = 0; p < ne; ++p)
            s.phi_pq[std::size_t(q) * ne + p] = alpha_mu_draw(second_hop, rng);
    return s;
}

RealizedSnrs realize_snrs(const ChannelSample& s, const SystemConfig& cfg) {
    RealizedSnrs r;
    double y = 0.0;
    for (std::size_t k = 0; k < s.theta_k.size(); ++k) y += s.theta_k[k] * s.phi_k[k];
    const double snr_d = cfg.avg_snr_d / cfg.beta_d * y * y;
    double snr_i = 0.0;
    for (double v : s.gamma_id) snr_i += v;
    r.sir = snr_d / snr_i;   // inf on the measure-zero zero denominator; caller resamples
    if (cfg.scenario == EveScenario::DirectLink) {
        double sum = 0.0, mx = 0.0;
        for (double v : s.gamma_sq) {
            sum += v;
            mx = std::max(mx, v);
        }
        r.eve_colluding = sum;
        r.eve_noncolluding = mx;
        return r;
    }
    const bool shared = cfg.scenario == EveScenario::SharedRis;
    const unsigned ne = shared ? cfg.n_d : cfg.n_e_elements;
    const double c_e = (shared ? cfg.avg_snr_e_ris / cfg.beta_d
                               : cfg.avg_snr_e_ris / cfg.beta_e);
    double sum = 0.0, mx = 0.0;
    for (unsigned q = 0; q < cfg.l_eves; ++q) {
        double yq = 0.0;
        for (unsigned p = 0; p < ne; ++p)
            yq += s.theta_p[p] * s.phi_pq[std::size_t(q) * ne + p];
        const double snr_q = c_e * yq * yq;
        sum += snr_q;
        mx = std::max(mx, snr_q);
    }
    r.eve_colluding = sum;
    r.eve_noncolluding = mx;
    return r;
}

namespace {

struct PairCounts {
    std::uint64_t exact = 0;
    std::uint64_t lower = 0;
};

PairCounts run_chunks(const SystemConfig& cfg, std::uint64_t trials,
                      McChannelMode channel_mode) {
    if (trials < 10'000)
        throw std::invalid_argument("estimate_sop: trials must be >= 10^4");
    const DerivedLaws laws = derive_laws(cfg);
    const Sampler sampler(cfg, laws);
    const double psi = cfg.target.psi();
    constexpr unsigned kChunks = 64;   // fixed partition keeps results
                                       // independent of the thread count
    const numerics::RngStream root(cfg.seed);
    std::vector<PairCounts> counts(kChunks);
    std::vector<std::uint64_t> sizes(kChunks, trials / kChunks);
    sizes[0] += trials % kChunks;

    auto work = [&](unsigned chunk) {
        numerics::RngStream rng = root.substream(chunk);
        PairCounts c;
        for (std::uint64_t t = 0; t < sizes[chunk]; ++t) {
            const RealizedSnrs r = channel_mode == McChannelMode::ModelLaws
                                       ? sampler.model_laws_trial(rng)
                                       : sampler.exact_channel_trial(rng);
            const double ge = r.eve(cfg.eve_case);
            if (r.sir < psi * ge) ++c.lower;
            if (1.0 + r.sir < psi * (1.0 + ge)) ++c.exact;
        }
        counts[chunk] = c;
    };

    const unsigned n_threads =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
    std::vector<std::thread> pool;
    std::atomic<unsigned> next{0};
    for (unsigned i = 0; i < n_threads; ++i)
        pool.emplace_back([&] {
            for (;;) {
                const unsigned chunk = next.fetch_add(1);
                if (chunk >= kChunks) return;
                work(chunk);
            }
        });
    for (auto& th : pool) th.join();

    PairCounts total;
    for (const auto& c : counts) {
        total.exact += c.exact;
        total.lower += c.lower;
    }
    return total;
}

SopEstimate make_estimate(std::uint64_t hits, std::uint64_t trials, const char* tag) {
    SopEstimate est;
    est.method = SopMethod::MonteCarlo;
    est.value = double(hits) / double(trials);
    est.uncertainty = wilson_half_width(est.value, double(trials));
    est.diagnostics = tag;
    return est;
}

} // namespace

SopEstimate estimate_sop(const SystemConfig& cfg, std::uint64_t trials,
                         McEventMode event_mode, McChannelMode channel_mode) {
    const PairCounts c = run_chunks(cfg, trials, channel_mode);
    const bool lower = event_mode == McEventMode::LowerBound;
    const char* tag = channel_mode == McChannelMode::ModelLaws
                          ? (lower ? "model-laws lower-bound event" : "model-laws exact event")
                          : (lower ? "exact-channel lower-bound event"
                                   : "exact-channel exact event");
    return make_estimate(lower ? c.lower : c.exact, trials, tag);
}

PairedSopEstimate estimate_sop_paired(const SystemConfig& cfg, std::uint64_t trials,
                                      McChannelMode channel_mode) {
    const PairCounts c = run_chunks(cfg, trials, channel_mode);
    PairedSopEstimate out;
    out.exact = make_estimate(c.exact, trials, "exact event");
    out.lower_bound = make_estimate(c.lower, trials, "lower-bound event");
    return out;
}

} // namespace rissec
