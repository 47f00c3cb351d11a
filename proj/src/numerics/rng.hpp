#ifndef RISSEC_NUMERICS_RNG_HPP
#define RISSEC_NUMERICS_RNG_HPP

#include <cstdint>
#include <random>

namespace rissec::numerics {

/// Seedable, splittable random stream. Draw paths are implemented here rather
/// than via std::*_distribution so sequences are identical across standard
/// libraries for a given seed.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    /// Deterministic child stream: substream(i) depends only on (seed, i).
    RngStream substream(std::uint64_t index) const;

    double uniform();                 // open interval (0,1)
    double normal();                  // standard normal, Marsaglia polar
    double gamma(double shape);       // unit scale, Marsaglia & Tsang (2000)
    double exponential();

private:
    std::mt19937_64 eng_;
    std::uint64_t seed_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

} // namespace rissec::numerics

#endif
