#ifndef RISSEC_SOP_HPP
#define RISSEC_SOP_HPP

#include <functional>
#include <string>
#include <vector>

#include "config.hpp"
#include "meijer_g.hpp"

namespace rissec {

enum class SopMethod { MonteCarlo, Quadrature, ClosedForm, Asymptotic };

const char* sop_method_name(SopMethod m);

struct SopEstimate {
    double value = 0.0;
    SopMethod method = SopMethod::Quadrature;
    double uncertainty = 0.0;
    std::string diagnostics;
};

/// One assembled Meijer-G instance of a closed-form SOP term:
/// value = sign * exp(log_prefactor) * G(params; exp(log_z)).
struct SopKernelInstance {
    double log_prefactor = 0.0;
    int sign = 1;
    MeijerGParams g;
    double log_z = 0.0;
};

/// Paper-facing coefficient block for the configured scenario/case
/// (omega1/omega2/t and the per-term G instances with their
/// Gauss-multiplication parameter rows).
struct SopCoefficients {
    double omega1 = 0.0;   // 1 - theta/2 - L alpha_e mu_e
    double omega2 = 0.0;   // 1 - theta/2 - theta_E/2
    double t_param = 0.0;  // 1 - L alpha_e mu_e
    double b2 = 1.0;       // 1/alpha_e
    std::vector<SopKernelInstance> instances;
};

/// Lower-bound SOP by adaptive quadrature of int F_D(psi g) f_E(g) dg.
/// `scale` locates the eavesdropper law's mass for the semi-infinite map.
SopEstimate sop_lower_quadrature(const std::function<double(double)>& dest_cdf,
                                 const std::function<double(double)>& eve_pdf,
                                 const SecrecyTarget& target, double scale = 1.0);

/// Quadrature route for a full configuration: nested-quadrature SIR CDF
/// (incomplete-gamma based, no Meijer-G) against the analytic eve pdf.
SopEstimate sop_quadrature(const SystemConfig& cfg);

/// Closed forms, Meijer-G route. Require integer B1 and, for the direct laws,
/// integer alpha_e (mode_error otherwise).
SopEstimate sop_colluding_direct(const SystemConfig& cfg);
SopEstimate sop_noncolluding_direct(const SystemConfig& cfg);
SopEstimate sop_colluding_ris(const SystemConfig& cfg);
SopEstimate sop_noncolluding_ris(const SystemConfig& cfg);
SopEstimate sop_closed_form(const SystemConfig& cfg);   // dispatch on scenario/case

/// High-SNR asymptotic: leading residue terms of the same G instances.
SopEstimate sop_asymptotic(const SystemConfig& cfg);

/// Assembled coefficient block (exposed for tests and diagnostics).
SopCoefficients sop_coefficients(const SystemConfig& cfg);

/// Unified dispatch; MonteCarlo routes to the simulator with cfg.trials and
/// the lower-bound event.
SopEstimate sop_evaluate(const SystemConfig& cfg, SopMethod method);

} // namespace rissec

#endif
