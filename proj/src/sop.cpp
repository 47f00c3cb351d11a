#include "sop.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "montecarlo.hpp"
#include "numerics/quadrature.hpp"
#include "numerics/special_functions.hpp"

namespace rissec {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLog2Pi = 1.83787706640934548356065947281123527;

// Gauss-multiplication expansion of Gamma(k*t + off) (or Gamma(off - k*t)):
// appends the k offsets (off+j)/k and returns the constant log factor;
// the k^(±k t) argument contribution is collected by the caller.
double append_block(std::vector<double>& dst, double off, unsigned k, bool as_one_minus) {
    for (unsigned j = 0; j < k; ++j) {
        const double o = (off + double(j)) / double(k);
        dst.push_back(as_one_minus ? 1.0 - o : o);
    }
    return 0.5 * (1.0 - double(k)) * kLog2Pi + (off - 0.5) * std::log(double(k));
}

// int_0^inf F_sir(psi x) x^(g_exp-1) exp(-eta x^k) dx as prefactor * G(z),
// k a positive integer. Derivation: Mellin-Barnes of the SIR CDF, inner
// Mellin transform of the exponential, s = k t substitution, multiplication
// theorem on every unit-slope gamma.
SopKernelInstance power_kernel(const SirCoefficients& sir, double psi, double g_exp,
                               double eta, unsigned k) {
    const double th = sir.theta;
    const double c = g_exp + th / 2.0;
    SopKernelInstance inst;
    double clog = 0.0;
    double tlogk = 0.0;   // coefficient of t on log k in the argument collection
    for (double off : {0.0, 0.5}) {
        clog += append_block(inst.g.b_front, off, k, false);
        tlogk += double(k);
    }
    std::vector<double> num_minus{th / 2.0};
    for (unsigned j = 0; j < sir.b1_int; ++j)
        num_minus.push_back(sir.omega0 + 1.0 + double(j) * sir.alpha_i);
    for (double off : num_minus) {
        clog += append_block(inst.g.a_front, off, k, true);
        tlogk -= double(k);
    }
    {
        std::vector<double> tmp;
        clog -= append_block(tmp, 1.0 + th / 2.0, k, true);
        tlogk += double(k);
        inst.g.b_back.insert(inst.g.b_back.end(), tmp.begin(), tmp.end());
    }
    inst.g.a_front.push_back(1.0 - c / double(k));
    inst.log_z = double(k) * std::log(sir.a1 * psi) - std::log(eta) -
                 tlogk * std::log(double(k));
    // the 1/k of the inner Mellin integral cancels the ds = k dt jacobian
    inst.log_prefactor = clog - (c / double(k)) * std::log(eta) + sir.log_xi2 +
                         (th / 2.0) * std::log(psi);
    return inst;
}

// int_0^inf F_sir(psi x) x^(g_exp-1) exp(-eta sqrt(x)) dx: the half-power
// exponent needs only the duplication of Gamma(2(C-s)).
SopKernelInstance sqrt_kernel(const SirCoefficients& sir, double psi, double g_exp,
                              double eta) {
    const double th = sir.theta;
    const double C = g_exp + th / 2.0;
    SopKernelInstance inst;
    inst.g.b_front = {0.0, 0.5};
    inst.g.a_front = {1.0 - th / 2.0};
    for (unsigned j = 0; j < sir.b1_int; ++j)
        inst.g.a_front.push_back(-sir.omega0 - double(j) * sir.alpha_i);
    inst.g.a_front.push_back(1.0 - C);
    inst.g.a_front.push_back(0.5 - C);
    inst.g.b_back = {-th / 2.0};
    inst.log_z = std::log(sir.a1 * psi) + std::log(4.0) - 2.0 * std::log(eta);
    inst.log_prefactor = sir.log_xi2 + (th / 2.0) * std::log(psi) + std::log(2.0) -
                         2.0 * C * std::log(eta) + (2.0 * C - 1.0) * std::log(2.0) -
                         0.5 * std::log(kPi);
    return inst;
}

SopKernelInstance kernel_for_term(const SirCoefficients& sir, double psi,
                                  const EveLawTerm& term) {
    SopKernelInstance inst;
    if (term.decay_exponent == 0.5) {
        inst = sqrt_kernel(sir, psi, term.gamma_exponent, term.decay_rate);
    } else {
        const double k = term.decay_exponent;
        const double kr = std::round(k);
        if (!(kr >= 1.0) || std::fabs(k - kr) > 1e-9)
            throw mode_error("sop closed form: exponent alpha_e must be a positive "
                             "integer (or 1/2); use the quadrature path");
        inst = power_kernel(sir, psi, term.gamma_exponent, term.decay_rate, unsigned(kr));
    }
    inst.log_prefactor += term.log_coeff;
    inst.sign = term.sign;
    return inst;
}

void require_closed_form_sir(const SirCoefficients& sir) {
    if (!sir.closed_form_ok)
        throw mode_error("sop closed form: B1 = 1/alpha_i must be a positive integer; "
                         "use the quadrature path");
}

double clamp_exact(double v, std::string& note) {
    if (v < -1e-8 || v > 1.0 + 1e-8) {
        std::ostringstream os;
        os << "sop closed form: value " << v << " outside [0,1] beyond numerical slack";
        throw numeric_error(os.str());
    }
    if (v < 0.0 || v > 1.0) {
        note = "clamped within 1e-8 slack";
        return std::min(1.0, std::max(0.0, v));
    }
    return v;
}

SopEstimate closed_form_from_terms(const SystemConfig& cfg) {
    const DerivedLaws laws = derive_laws(cfg);
    require_closed_form_sir(laws.sir);
    const double psi = cfg.target.psi();
    double value = 0.0, err = 0.0;
    for (const auto& term : eve_law_terms(laws.eve)) {
        const auto inst = kernel_for_term(laws.sir, psi, term);
        const auto g = meijer_g_logz(inst.g, inst.log_z);
        const double w = double(inst.sign) * std::exp(inst.log_prefactor);
        value += w * g.value;
        err += std::fabs(w) * g.error;
    }
    SopEstimate est;
    est.method = SopMethod::ClosedForm;
    std::string note;
    est.value = clamp_exact(value, note);
    est.uncertainty = err;
    est.diagnostics = note;
    return est;
}

double eve_scale_estimate(const EveConfig& eve) {
    if (eve.scenario == EveScenario::DirectLink)
        return double(eve.l_eves) * eve.avg_snr_e;
    const RisLinkParams& l = eve.ris_link;
    const double mean_sq = l.fit.scale * l.fit.scale * l.fit.shape * (l.fit.shape + 1.0);
    return double(eve.l_eves) * l.avg_snr / l.beta * mean_sq;
}

} // namespace

const char* sop_method_name(SopMethod m) {
    switch (m) {
        case SopMethod::MonteCarlo: return "monte_carlo";
        case SopMethod::Quadrature: return "quadrature";
        case SopMethod::ClosedForm: return "closed_form";
        case SopMethod::Asymptotic: return "asymptotic";
    }
    return "unknown";
}

SopEstimate sop_lower_quadrature(const std::function<double(double)>& dest_cdf,
                                 const std::function<double(double)>& eve_pdf,
                                 const SecrecyTarget& target, double scale) {
    target.validate();
    const double psi = target.psi();
    auto f = [&](double g) {
        if (g <= 0.0) return 0.0;
        const double w = eve_pdf(g);
        return w == 0.0 ? 0.0 : dest_cdf(psi * g) * w;
    };
    const auto q = numerics::integrate_zero_inf(f, scale, 1e-9, 1e-8, 400);
    SopEstimate est;
    est.method = SopMethod::Quadrature;
    est.value = std::min(1.0, std::max(0.0, q.value));
    est.uncertainty = q.error;
    return est;
}

SopEstimate sop_quadrature(const SystemConfig& cfg) {
    const DerivedLaws laws = derive_laws(cfg);
    auto dest_cdf = [&](double u) {
        return sir_cdf_by_convolution(u, laws.dest_link, laws.interference);
    };
    auto e_pdf = [&](double g) { return eve_pdf(g, laws.eve); };
    return sop_lower_quadrature(dest_cdf, e_pdf, cfg.target, eve_scale_estimate(laws.eve));
}

SopEstimate sop_colluding_direct(const SystemConfig& cfg) {
    if (cfg.scenario != EveScenario::DirectLink || cfg.eve_case != EveCase::Colluding)
        throw std::invalid_argument("sop_colluding_direct: configuration mismatch");
    return closed_form_from_terms(cfg);
}

SopEstimate sop_noncolluding_direct(const SystemConfig& cfg) {
    if (cfg.scenario != EveScenario::DirectLink || cfg.eve_case != EveCase::NonColluding)
        throw std::invalid_argument("sop_noncolluding_direct: configuration mismatch");
    return closed_form_from_terms(cfg);
}

SopEstimate sop_colluding_ris(const SystemConfig& cfg) {
    if (cfg.scenario == EveScenario::DirectLink || cfg.eve_case != EveCase::Colluding)
        throw std::invalid_argument("sop_colluding_ris: configuration mismatch");
    return closed_form_from_terms(cfg);
}

SopEstimate sop_noncolluding_ris(const SystemConfig& cfg) {
    if (cfg.scenario == EveScenario::DirectLink || cfg.eve_case != EveCase::NonColluding)
        throw std::invalid_argument("sop_noncolluding_ris: configuration mismatch");
    return closed_form_from_terms(cfg);
}

SopEstimate sop_closed_form(const SystemConfig& cfg) { return closed_form_from_terms(cfg); }

SopEstimate sop_asymptotic(const SystemConfig& cfg) {
    const DerivedLaws laws = derive_laws(cfg);
    require_closed_form_sir(laws.sir);
    const double psi = cfg.target.psi();
    double value = 0.0;
    for (const auto& term : eve_law_terms(laws.eve)) {
        const auto inst = kernel_for_term(laws.sir, psi, term);
        const double lead = meijer_g_leading_term_logz(inst.g, inst.log_z);
        value += double(inst.sign) * std::exp(inst.log_prefactor) * lead;
    }
    SopEstimate est;
    est.method = SopMethod::Asymptotic;
    est.value = value;   // reported unclamped
    est.uncertainty = 0.0;
    if (value < 0.0 || value > 1.0)
        est.diagnostics = "outside [0,1]: asymptotic regime not reached";
    return est;
}

SopCoefficients sop_coefficients(const SystemConfig& cfg) {
    const DerivedLaws laws = derive_laws(cfg);
    require_closed_form_sir(laws.sir);
    SopCoefficients c;
    const double th = laws.fit_d.shape;
    const double ae = cfg.eve_direct_fading.alpha;
    const double lmu = double(cfg.l_eves) * cfg.eve_direct_fading.mu;
    c.omega1 = 1.0 - th / 2.0 - ae * lmu;
    c.t_param = 1.0 - ae * lmu;
    c.b2 = 1.0 / ae;
    if (cfg.scenario != EveScenario::DirectLink)
        c.omega2 = 1.0 - th / 2.0 - laws.eve.ris_link.fit.shape / 2.0;
    const double psi = cfg.target.psi();
    for (const auto& term : eve_law_terms(laws.eve))
        c.instances.push_back(kernel_for_term(laws.sir, psi, term));
    return c;
}

SopEstimate sop_evaluate(const SystemConfig& cfg, SopMethod method) {
    switch (method) {
        case SopMethod::ClosedForm: return sop_closed_form(cfg);
        case SopMethod::Quadrature: return sop_quadrature(cfg);
        case SopMethod::Asymptotic: return sop_asymptotic(cfg);
        case SopMethod::MonteCarlo:
            return estimate_sop(cfg, cfg.trials, McEventMode::LowerBound, cfg.mc_channel);
    }
    throw std::invalid_argument("sop_evaluate: unknown method");
}

} // namespace rissec
