#include "interference.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"
#include "numerics/quadrature.hpp"
#include "numerics/special_functions.hpp"

namespace rissec {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLog2Pi = 1.83787706640934548356065947281123527;
} // namespace

void InterferenceParams::validate() const {
    fading.validate();
    if (m_interferers == 0) throw std::invalid_argument("InterferenceParams: M must be >= 1");
    if (!(avg_snr_i > 0.0))
        throw std::invalid_argument("InterferenceParams: avg_snr_i must be positive");
}

double interference_sum_pdf(double x, const InterferenceParams& ip) {
    ip.validate();
    if (!(x > 0.0)) throw std::invalid_argument("interference_sum_pdf: x must be positive");
    const double a = ip.fading.alpha;
    const double mm = double(ip.m_interferers) * ip.fading.mu;
    const double gbar = ip.avg_snr_i;
    const double lf = std::log(a) + mm * std::log(mm) - std::lgamma(mm) -
                      a * mm * std::log(gbar) + (a * mm - 1.0) * std::log(x) -
                      mm * std::pow(x / gbar, a);
    return std::exp(lf);
}

double interference_sum_cdf(double x, const InterferenceParams& ip) {
    ip.validate();
    if (x < 0.0) throw std::invalid_argument("interference_sum_cdf: x must be nonnegative");
    if (x == 0.0) return 0.0;
    const double mm = double(ip.m_interferers) * ip.fading.mu;
    return numerics::gamma_p(mm, mm * std::pow(x / ip.avg_snr_i, ip.fading.alpha));
}

SirCoefficients sir_coefficients(const GammaFit& fit, const RisLinkParams& link,
                                 const InterferenceParams& ip) {
    link.validate();
    ip.validate();
    SirCoefficients c;
    c.theta = fit.shape;
    c.alpha_i = ip.fading.alpha;
    c.xi1 = link.exp_coefficient();
    c.b1 = 1.0 / ip.fading.alpha;
    const double b1_round = std::round(c.b1);
    c.closed_form_ok = b1_round >= 1.0 && std::fabs(c.b1 - b1_round) < 1e-9;
    c.b1_int = c.closed_form_ok ? unsigned(b1_round) : 0;
    const double mmu = double(ip.m_interferers) * ip.fading.mu;
    c.omega0 = c.theta / 2.0 + mmu * ip.fading.alpha - 1.0;
    const double lam = mmu / std::pow(ip.avg_snr_i, ip.fading.alpha);
    c.a1 = std::exp(2.0 * std::log(c.xi1) + c.b1 * std::log(c.b1) - std::log(4.0) -
                    c.b1 * std::log(lam));
    c.log_xi2 = c.theta * std::log(c.xi1) + (mmu - c.b1 * (c.omega0 + 1.0)) * std::log(lam) -
                std::log(2.0) - std::lgamma(c.theta) - std::lgamma(mmu) -
                0.5 * std::log(kPi) + 0.5 * (1.0 - c.b1) * kLog2Pi +
                (c.b1 * (c.omega0 + 1.0) - 0.5) * std::log(c.b1);
    return c;
}

std::vector<double> SirCoefficients::a_row() const {
    std::vector<double> row(b1_int);
    for (unsigned j = 0; j < b1_int; ++j) row[j] = -omega0 - double(j) * alpha_i;
    return row;
}

double sir_pdf(double g, const SirCoefficients& c) {
    if (!(g > 0.0)) throw std::invalid_argument("sir_pdf: gamma must be positive");
    if (!c.closed_form_ok)
        throw mode_error("sir_pdf: closed form requires integer B1 = 1/alpha_i; "
                         "use the convolution route");
    MeijerGParams p;
    p.a_front = c.a_row();
    p.b_front = {0.0, 0.5};
    const auto r = meijer_g_logz(p, std::log(c.a1) + std::log(g));
    return std::exp(c.log_xi2 + (c.theta / 2.0 - 1.0) * std::log(g)) * r.value;
}

double sir_cdf(double g, const SirCoefficients& c) {
    if (g < 0.0) throw std::invalid_argument("sir_cdf: gamma must be nonnegative");
    if (g == 0.0) return 0.0;
    if (!c.closed_form_ok)
        throw mode_error("sir_cdf: closed form requires integer B1 = 1/alpha_i; "
                         "use the convolution route");
    MeijerGParams p;
    p.a_front = c.a_row();
    p.a_front.insert(p.a_front.begin(), 1.0 - c.theta / 2.0);
    p.b_front = {0.0, 0.5};
    p.b_back = {-c.theta / 2.0};
    const auto r = meijer_g_logz(p, std::log(c.a1) + std::log(g));
    const double v = std::exp(c.log_xi2 + (c.theta / 2.0) * std::log(g)) * r.value;
    return std::min(1.0, std::max(0.0, v));
}

double sir_cdf_by_convolution(double g, const RisLinkParams& link,
                              const InterferenceParams& ip) {
    link.validate();
    ip.validate();
    if (g < 0.0) throw std::invalid_argument("sir_cdf_by_convolution: gamma >= 0 required");
    if (g == 0.0) return 0.0;
    auto f = [&](double x) {
        if (x <= 0.0) return 0.0;
        const double w = interference_sum_pdf(x, ip);
        return w == 0.0 ? 0.0 : gamma_d_cdf(g * x, link) * w;
    };
    const auto q = numerics::integrate_zero_inf(f, ip.avg_snr_i, 1e-12, 5e-11);
    return std::min(1.0, std::max(0.0, q.value));
}

double sir_pdf_by_convolution(double g, const RisLinkParams& link,
                              const InterferenceParams& ip) {
    link.validate();
    ip.validate();
    if (!(g > 0.0)) throw std::invalid_argument("sir_pdf_by_convolution: gamma > 0 required");
    auto f = [&](double x) {
        if (x <= 0.0) return 0.0;
        const double w = interference_sum_pdf(x, ip);
        return w == 0.0 ? 0.0 : x * gamma_d_pdf(g * x, link) * w;
    };
    const auto q = numerics::integrate_zero_inf(f, ip.avg_snr_i, 1e-13, 5e-11);
    return q.value;
}

} // namespace rissec
