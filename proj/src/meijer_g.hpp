#ifndef RISSEC_MEIJER_G_HPP
#define RISSEC_MEIJER_G_HPP

#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

namespace rissec {

/// Parameters of G^{m,n}_{p,q}(z | a; b) with m = b_front.size(),
/// n = a_front.size(), p = n + a_back.size(), q = m + b_back.size().
/// The argument may be given as z or, for extreme magnitudes, as log_z.
struct MeijerGParams {
    std::vector<double> a_front;
    std::vector<double> a_back;
    std::vector<double> b_front;
    std::vector<double> b_back;
    double z = 0.0;

    double delta() const;   // m + n - (p+q)/2; contour converges iff > 0
};

/// Vertical Mellin-Barnes contour controls. The defaults auto-place the
/// abscissa in the pole gap at the integrand-magnitude minimum and refine the
/// step until the a-posteriori halving check meets the target.
struct ContourSpec {
    enum class Path { VerticalLine, Shifted };
    Path path = Path::VerticalLine;
    double abscissa = std::numeric_limits<double>::quiet_NaN();  // NaN = auto
    double step = 0.5;               // initial trapezoid step
    double half_extent = 4000.0;     // hard cap on |Im s|
    std::size_t max_nodes = 2'000'000;
    double tail_threshold = 1e-16;   // relative tail cut-off
    double target_rel = 5e-13;       // step-halving target
};

struct MeijerGResult {
    double value = 0.0;
    double error = 0.0;      // a-posteriori estimate: |result(h) - result(2h)| + tail
    double abscissa = 0.0;
    std::size_t nodes = 0;
};

/// Evaluate the Mellin-Barnes integral on a vertical contour. Throws
/// numeric_error when no admissible contour exists, when the quadrature does
/// not settle, or when the imaginary residue exceeds 1e-8 of the value.
MeijerGResult meijer_g(const MeijerGParams& p, const ContourSpec& c = {});

/// Same, with the argument passed in log space (params.z ignored).
MeijerGResult meijer_g_logz(const MeijerGParams& p, double log_z,
                            const ContourSpec& c = {});

/// Leading small-z behaviour: sum over simple b_front poles of
/// z^{b_j} prod Gamma(...). Throws numeric_error on degenerate parameter
/// pairs (integer-spaced b_front entries), naming the pair.
double meijer_g_leading_term_logz(const MeijerGParams& p, double log_z);

/// Gauss-multiplication parameter block {a/k, (a+1)/k, ..., (a+k-1)/k}.
std::vector<double> delta_block(unsigned k, double a);

/// Principal-branch complex log Gamma (Lanczos); re-exported here because the
/// contour evaluation is its only consumer in the public surface.
std::complex<double> log_gamma_complex(std::complex<double> s);

} // namespace rissec

#endif
