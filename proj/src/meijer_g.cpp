#include "meijer_g.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "errors.hpp"
#include "numerics/special_functions.hpp"

namespace rissec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log of the full Gamma-ratio integrand at s (excluding z^{-s})
std::complex<double> log_ratio(const MeijerGParams& p, std::complex<double> s) {
    std::complex<double> v = 0.0;
    for (double b : p.b_front) v += numerics::log_gamma(b + s);
    for (double a : p.a_front) v += numerics::log_gamma(1.0 - a - s);
    for (double b : p.b_back) v -= numerics::log_gamma(1.0 - b - s);
    for (double a : p.a_back) v -= numerics::log_gamma(a + s);
    return v;
}

struct PoleGap {
    double left;    // rightmost pole of the b_front family (-inf if none)
    double right;   // leftmost pole of the (1 - a_front) family (+inf if none)
};

PoleGap pole_gap(const MeijerGParams& p) {
    PoleGap g{-kInf, kInf};
    for (double b : p.b_front) g.left = std::max(g.left, -b);
    for (double a : p.a_front) g.right = std::min(g.right, 1.0 - a);
    return g;
}

double choose_abscissa(const MeijerGParams& p, double log_z, const PoleGap& gap) {
    double lo, hi;
    if (std::isfinite(gap.left) && std::isfinite(gap.right)) {
        const double width = gap.right - gap.left;
        if (!(width > 1e-9))
            throw numeric_error("meijer_g: pole families collide, no vertical contour");
        const double margin = 0.05 * std::min(1.0, width);
        lo = gap.left + margin;
        hi = gap.right - margin;
    } else if (std::isfinite(gap.left)) {
        lo = gap.left + 0.05;
        hi = lo + 64.0;                 // magnitude minimum sits at psi^{-1}(log z)
    } else if (std::isfinite(gap.right)) {
        hi = gap.right - 0.05;
        lo = hi - 64.0;
    } else {
        lo = -32.0;
        hi = 32.0;
    }
    auto mag = [&](double sigma) {
        return log_ratio(p, std::complex<double>(sigma, 0.0)).real() - sigma * log_z;
    };
    // golden-section minimum of the (log-convex between poles) magnitude
    const double gr = 0.61803398874989484820458683436563811;
    double a = lo, b = hi;
    for (int i = 0; i < 90; ++i) {
        const double c = b - gr * (b - a);
        const double d = a + gr * (b - a);
        if (mag(c) < mag(d)) b = d; else a = c;
    }
    return 0.5 * (a + b);
}

} // namespace

double MeijerGParams::delta() const {
    const double m = double(b_front.size()), n = double(a_front.size());
    const double pp = n + double(a_back.size()), q = m + double(b_back.size());
    return m + n - 0.5 * (pp + q);
}

std::vector<double> delta_block(unsigned k, double a) {
    if (k == 0) throw std::invalid_argument("delta_block: k must be >= 1");
    std::vector<double> out(k);
    for (unsigned j = 0; j < k; ++j) out[j] = (a + double(j)) / double(k);
    return out;
}

std::complex<double> log_gamma_complex(std::complex<double> s) {
    return numerics::log_gamma(s);
}

MeijerGResult meijer_g_logz(const MeijerGParams& p, double log_z, const ContourSpec& c) {
    if (p.delta() <= 0.0)
        throw numeric_error("meijer_g: contour integral does not converge (m+n <= (p+q)/2)");
    const PoleGap gap = pole_gap(p);
    double sigma = c.abscissa;
    if (!std::isfinite(sigma)) sigma = choose_abscissa(p, log_z, gap);
    if (sigma <= gap.left || sigma >= gap.right)
        throw numeric_error("meijer_g: requested abscissa is outside the pole gap");
    // nudge off a pole of either family
    for (double b : p.b_front) {
        const double d = std::abs(std::round(-b - sigma) + b + sigma);
        if (-b - sigma > -0.5 && d < 1e-7) sigma += 1e-5;
    }

    // scale out the integrand's value at the abscissa to keep the sums O(1)
    const double log_scale = log_ratio(p, {sigma, 0.0}).real() - sigma * log_z;

    auto term = [&](double t) -> std::complex<double> {
        const std::complex<double> s(sigma, t);
        const std::complex<double> lg = log_ratio(p, s) - s * log_z;
        return std::exp(lg - log_scale);
    };

    std::size_t nodes = 0;
    auto trapezoid = [&](double h) -> std::complex<double> {
        std::complex<double> total = term(0.0);
        ++nodes;
        double peak = std::abs(total);
        std::size_t min_side = std::max<std::size_t>(32, std::size_t(2.0 / h));
        for (std::size_t k = 1;; ++k) {
            const double t = h * double(k);
            const std::complex<double> s = term(t) + term(-t);
            nodes += 2;
            total += s;
            peak = std::max(peak, std::abs(s));
            if (k >= min_side && std::abs(s) < c.tail_threshold * peak) break;
            if (t > c.half_extent || nodes > c.max_nodes)
                throw numeric_error("meijer_g: contour tail did not decay within limits");
        }
        return total * (h / (2.0 * 3.14159265358979323846264338327950288));
    };

    double h = c.step;
    std::complex<double> prev = trapezoid(h);
    std::complex<double> cur = prev;
    double diff = kInf;
    for (int halvings = 0; halvings < 11; ++halvings) {
        h *= 0.5;
        cur = trapezoid(h);
        diff = std::abs(cur - prev);
        if (diff <= c.target_rel * std::abs(cur)) break;
        prev = cur;
    }
    if (!std::isfinite(cur.real()) || !std::isfinite(cur.imag()))
        throw numeric_error("meijer_g: non-finite contour sum");

    const double scale = std::exp(log_scale);
    MeijerGResult out;
    out.value = cur.real() * scale;
    out.error = (diff + c.tail_threshold * std::abs(cur)) * scale;
    out.abscissa = sigma;
    out.nodes = nodes;
    if (std::abs(cur.imag()) > 1e-8 * std::abs(cur.real()) + 1e-300) {
        std::ostringstream os;
        os << "meijer_g: imaginary residue " << cur.imag() * scale << " vs value "
           << out.value << " (abscissa " << sigma << ")";
        throw numeric_error(os.str());
    }
    return out;
}

MeijerGResult meijer_g(const MeijerGParams& p, const ContourSpec& c) {
    if (!(p.z > 0.0)) throw std::invalid_argument("meijer_g: z must be positive");
    return meijer_g_logz(p, std::log(p.z), c);
}

namespace {

// log|Gamma(x)| with the sign of Gamma(x); x must not be a nonpositive integer
struct SignedLog {
    double log_abs;
    double sign;
};

SignedLog signed_log_gamma(double x, const char* context) {
    if (x <= 0.0 && x == std::floor(x)) {
        std::ostringstream os;
        os << "meijer_g asymptotic: gamma pole at " << x << " (" << context << ")";
        throw numeric_error(os.str());
    }
    double sign = 1.0;
    if (x < 0.0) {
        const int k = int(std::floor(-x));   // x in (-k-1, -k): sign is (-1)^(k+1)
        if (k % 2 == 0) sign = -1.0;
    }
    return {std::lgamma(x), sign};
}

} // namespace

double meijer_g_leading_term_logz(const MeijerGParams& p, double log_z) {
    double total = 0.0;
    for (std::size_t j = 0; j < p.b_front.size(); ++j) {
        const double bj = p.b_front[j];
        double lg = 0.0, sign = 1.0;
        for (std::size_t h = 0; h < p.b_front.size(); ++h) {
            if (h == j) continue;
            const double d = p.b_front[h] - bj;
            if (d <= 0.0 && d == std::floor(d)) {
                std::ostringstream os;
                os << "meijer_g asymptotic: degenerate parameter pair b[" << j << "]="
                   << bj << ", b[" << h << "]=" << p.b_front[h];
                throw numeric_error(os.str());
            }
            const auto g = signed_log_gamma(d, "b-front difference");
            lg += g.log_abs;
            sign *= g.sign;
        }
        for (double a : p.a_front) {
            const auto g = signed_log_gamma(1.0 - a + bj, "a-front");
            lg += g.log_abs;
            sign *= g.sign;
        }
        for (double b : p.b_back) {
            const auto g = signed_log_gamma(1.0 + bj - b, "b-back");
            lg -= g.log_abs;
            sign *= g.sign;
        }
        for (double a : p.a_back) {
            const auto g = signed_log_gamma(a - bj, "a-back");
            lg -= g.log_abs;
            sign *= g.sign;
        }
        total += sign * std::exp(lg + bj * log_z);
    }
    return total;
}

} // namespace rissec
