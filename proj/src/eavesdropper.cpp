#include "eavesdropper.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"
#include "numerics/special_functions.hpp"

namespace rissec {

using numerics::gamma_p;
using numerics::log_binomial;

void EveConfig::validate() const {
    direct_fading.validate();
    if (l_eves == 0) throw std::invalid_argument("EveConfig: l_eves must be >= 1");
    if (!(avg_snr_e > 0.0)) throw std::invalid_argument("EveConfig: avg_snr_e must be positive");
    if (scenario != EveScenario::DirectLink) ris_link.validate();
}

std::vector<Composition> enumerate_compositions(unsigned target, unsigned parts,
                                                std::uint64_t cap) {
    if (parts == 0) throw std::invalid_argument("enumerate_compositions: parts must be >= 1");
    const double count = std::exp(log_binomial(target + parts - 1, parts - 1));
    if (count > double(cap))
        throw capacity_error("enumerate_compositions: composition count exceeds capacity");
    std::vector<Composition> out;
    out.reserve(std::size_t(count + 0.5));
    std::vector<unsigned> parts_buf(parts, 0);
    const double lg_target = std::lgamma(double(target) + 1.0);
    auto emit = [&]() {
        double lm = lg_target;
        for (unsigned v : parts_buf) lm -= std::lgamma(double(v) + 1.0);
        out.push_back({parts_buf, std::round(std::exp(lm))});
    };
    // lexicographic walk over weak compositions
    auto rec = [&](auto&& self, unsigned pos, unsigned remaining) -> void {
        if (pos + 1 == parts) {
            parts_buf[pos] = remaining;
            emit();
            return;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            parts_buf[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, target);
    return out;
}

namespace {

// single S-E_q link SNR law: alpha-mu with (alpha_e, mu_e, avg_snr_e)
double direct_single_pdf(double g, const EveConfig& cfg) {
    AlphaMuParams p{cfg.direct_fading.alpha, cfg.direct_fading.mu, cfg.avg_snr_e};
    return alpha_mu_pdf(g, p);
}
double direct_single_cdf(double g, const EveConfig& cfg) {
    AlphaMuParams p{cfg.direct_fading.alpha, cfg.direct_fading.mu, cfg.avg_snr_e};
    return alpha_mu_cdf(g, p);
}

// single RIS-cascade eavesdropper law = gamma_d-type law on cfg.ris_link
// colluding aggregate for L >= 2 swaps in the squared-domain refit
RisLinkParams colluding_ris_link(const EveConfig& cfg) {
    if (cfg.l_eves == 1) return cfg.ris_link;
    RisLinkParams link = cfg.ris_link;
    link.fit = cfg.colluding_ris_fit;
    return link;
}

RisLinkParams integer_shape_link(const EveConfig& cfg) {
    RisLinkParams link = cfg.ris_link;
    link.fit.shape = double(link.fit.integer_shape);
    return link;
}

// direct-law expansion terms: L f1 F1^(L-1) with integer mu_e, exact finite sums
std::vector<EveLawTerm> direct_nc_terms(const EveConfig& cfg) {
    const double ae = cfg.direct_fading.alpha;
    const double me = cfg.direct_fading.mu;
    const unsigned mu_int = unsigned(std::llround(me));
    if (std::fabs(me - double(mu_int)) > 1e-9 || mu_int == 0)
        throw mode_error("noncolluding direct law: expansion requires integer mu_e");
    const unsigned L = cfg.l_eves;
    const double gbar = cfg.avg_snr_e;
    const double log_f1 =
        std::log(ae) + me * std::log(me) - std::lgamma(me) - ae * me * std::log(gbar);
    std::vector<EveLawTerm> terms;
    for (unsigned lam3 = 0; lam3 < L; ++lam3) {
        for (const auto& comp : enumerate_compositions(lam3, mu_int, cfg.composition_cap)) {
            // comp.parts[j] = k_j multiplies (x^j / j!)^{k_j}, x = mu_e (g/gbar)^alpha_e
            double kfac = 0.0, kidx = 0.0;
            for (unsigned j = 0; j < mu_int; ++j) {
                kfac += double(comp.parts[j]) * std::lgamma(double(j) + 1.0);
                kidx += double(j) * double(comp.parts[j]);
            }
            EveLawTerm t;
            t.sign = (lam3 % 2 == 0) ? 1 : -1;
            t.log_coeff = std::log(double(L)) + log_binomial(L - 1, lam3) +
                          std::log(comp.multinomial_coefficient) - kfac + log_f1 +
                          kidx * std::log(me) - ae * kidx * std::log(gbar);
            t.gamma_exponent = ae * me + ae * kidx;
            t.decay_rate = double(lam3 + 1) * me / std::pow(gbar, ae);
            t.decay_exponent = ae;
            terms.push_back(t);
        }
    }
    return terms;
}

// RIS-law expansion terms over integer theta_E singles
std::vector<EveLawTerm> ris_nc_terms(const EveConfig& cfg) {
    const RisLinkParams link = integer_shape_link(cfg);
    const unsigned th_int = cfg.ris_link.fit.integer_shape;
    const unsigned L = cfg.l_eves;
    const double xi8 = link.exp_coefficient();
    const double log_xi7 =
        double(th_int) * std::log(xi8) - std::log(2.0) - std::lgamma(double(th_int));
    std::vector<EveLawTerm> terms;
    for (unsigned lam5 = 0; lam5 < L; ++lam5) {
        for (const auto& comp : enumerate_compositions(lam5, th_int, cfg.composition_cap)) {
            double rfac = 0.0, ridx = 0.0;
            for (unsigned j = 0; j < th_int; ++j) {
                rfac += double(comp.parts[j]) * std::lgamma(double(j) + 1.0);
                ridx += double(j) * double(comp.parts[j]);
            }
            EveLawTerm t;
            t.sign = (lam5 % 2 == 0) ? 1 : -1;
            t.log_coeff = std::log(double(L)) + log_binomial(L - 1, lam5) +
                          std::log(comp.multinomial_coefficient) - rfac + log_xi7 +
                          ridx * std::log(xi8);
            t.gamma_exponent = (double(th_int) + ridx) / 2.0;
            t.decay_rate = double(lam5 + 1) * xi8;
            t.decay_exponent = 0.5;
            terms.push_back(t);
        }
    }
    return terms;
}

double eval_terms(double g, const std::vector<EveLawTerm>& terms) {
    double v = 0.0;
    const double lg = std::log(g);
    for (const auto& t : terms)
        v += double(t.sign) * std::exp(t.log_coeff + (t.gamma_exponent - 1.0) * lg -
                                       t.decay_rate * std::pow(g, t.decay_exponent));
    return v;
}

} // namespace

double colluding_direct_pdf(double g, const EveConfig& cfg) {
    cfg.validate();
    if (!(g > 0.0)) throw std::invalid_argument("colluding_direct_pdf: gamma > 0 required");
    const double L = double(cfg.l_eves);
    // mu -> L mu_e with scale L avg_snr_e: exact sum of the per-link laws at alpha_e = 1
    AlphaMuParams agg{cfg.direct_fading.alpha, L * cfg.direct_fading.mu, L * cfg.avg_snr_e};
    return alpha_mu_pdf(g, agg);
}

double colluding_direct_cdf(double g, const EveConfig& cfg) {
    cfg.validate();
    if (g <= 0.0) return 0.0;
    const double L = double(cfg.l_eves);
    AlphaMuParams agg{cfg.direct_fading.alpha, L * cfg.direct_fading.mu, L * cfg.avg_snr_e};
    return alpha_mu_cdf(g, agg);
}

double noncolluding_direct_pdf(double g, const EveConfig& cfg) {
    cfg.validate();
    if (!(g > 0.0)) throw std::invalid_argument("noncolluding_direct_pdf: gamma > 0 required");
    return eval_terms(g, direct_nc_terms(cfg));
}

double noncolluding_direct_pdf_construction(double g, const EveConfig& cfg) {
    cfg.validate();
    if (!(g > 0.0)) throw std::invalid_argument("pdf_construction: gamma > 0 required");
    const double L = double(cfg.l_eves);
    const double F = direct_single_cdf(g, cfg);
    return L * direct_single_pdf(g, cfg) * std::pow(F, L - 1.0);
}

double noncolluding_direct_cdf(double g, const EveConfig& cfg) {
    cfg.validate();
    if (g <= 0.0) return 0.0;
    return std::pow(direct_single_cdf(g, cfg), double(cfg.l_eves));
}

double colluding_ris_pdf(double g, const EveConfig& cfg) {
    cfg.validate();
    if (!(g > 0.0)) throw std::invalid_argument("colluding_ris_pdf: gamma > 0 required");
    return gamma_d_pdf(g, colluding_ris_link(cfg));
}

double colluding_ris_cdf(double g, const EveConfig& cfg) {
    cfg.validate();
    if (g <= 0.0) return 0.0;
    return gamma_d_cdf(g, colluding_ris_link(cfg));
}

double noncolluding_ris_pdf(double g, const EveConfig& cfg) {
    cfg.validate();
    if (!(g > 0.0)) throw std::invalid_argument("noncolluding_ris_pdf: gamma > 0 required");
    if (cfg.l_eves == 1) return colluding_ris_pdf(g, cfg);
    return eval_terms(g, ris_nc_terms(cfg));
}

double noncolluding_ris_pdf_construction(double g, const EveConfig& cfg) {
    cfg.validate();
    if (!(g > 0.0)) throw std::invalid_argument("pdf_construction: gamma > 0 required");
    if (cfg.l_eves == 1) return colluding_ris_pdf(g, cfg);
    const RisLinkParams link = integer_shape_link(cfg);
    const double L = double(cfg.l_eves);
    return L * gamma_d_pdf(g, link) * std::pow(gamma_d_cdf(g, link), L - 1.0);
}

double noncolluding_ris_cdf(double g, const EveConfig& cfg) {
    cfg.validate();
    if (g <= 0.0) return 0.0;
    if (cfg.l_eves == 1) return colluding_ris_cdf(g, cfg);
    return std::pow(gamma_d_cdf(g, integer_shape_link(cfg)), double(cfg.l_eves));
}

double eve_pdf(double g, const EveConfig& cfg) {
    const bool direct = cfg.scenario == EveScenario::DirectLink;
    if (cfg.eve_case == EveCase::Colluding)
        return direct ? colluding_direct_pdf(g, cfg) : colluding_ris_pdf(g, cfg);
    if (direct) {
        const double mu = cfg.direct_fading.mu;
        const bool mu_int = std::fabs(mu - std::round(mu)) < 1e-9;
        return mu_int ? noncolluding_direct_pdf(g, cfg)
                      : noncolluding_direct_pdf_construction(g, cfg);
    }
    return noncolluding_ris_pdf(g, cfg);
}

double eve_cdf(double g, const EveConfig& cfg) {
    const bool direct = cfg.scenario == EveScenario::DirectLink;
    if (cfg.eve_case == EveCase::Colluding)
        return direct ? colluding_direct_cdf(g, cfg) : colluding_ris_cdf(g, cfg);
    return direct ? noncolluding_direct_cdf(g, cfg) : noncolluding_ris_cdf(g, cfg);
}

std::vector<EveLawTerm> eve_law_terms(const EveConfig& cfg) {
    cfg.validate();
    const bool direct = cfg.scenario == EveScenario::DirectLink;
    if (cfg.eve_case == EveCase::Colluding) {
        EveLawTerm t;
        if (direct) {
            const double ae = cfg.direct_fading.alpha;
            const double lm = double(cfg.l_eves) * cfg.direct_fading.mu;
            const double om = double(cfg.l_eves) * cfg.avg_snr_e;
            t.sign = 1;
            t.log_coeff = std::log(ae) + lm * std::log(lm) - std::lgamma(lm) -
                          ae * lm * std::log(om);
            t.gamma_exponent = ae * lm;
            t.decay_rate = lm / std::pow(om, ae);
            t.decay_exponent = ae;
        } else {
            const RisLinkParams link = colluding_ris_link(cfg);
            const double xi8 = link.exp_coefficient();
            t.sign = 1;
            t.log_coeff = link.fit.shape * std::log(xi8) - std::log(2.0) -
                          std::lgamma(link.fit.shape);
            t.gamma_exponent = link.fit.shape / 2.0;
            t.decay_rate = xi8;
            t.decay_exponent = 0.5;
        }
        return {t};
    }
    if (direct) return direct_nc_terms(cfg);
    if (cfg.l_eves == 1) {
        EveConfig single = cfg;
        single.eve_case = EveCase::Colluding;
        return eve_law_terms(single);
    }
    return ris_nc_terms(cfg);
}

} // namespace rissec
