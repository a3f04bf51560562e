#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace qde {

/// SplitMix64 counter generator. State transition per draw:
///   s += 0x9E3779B97F4A7C15
///   z = s; z = (z ^ (z >> 30)) * 0xBF58476D1FE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   output z ^ (z >> 31)
/// Uniforms map the top 53 bits to (0, 1]; Gaussian pairs are Box-Muller on
/// two consecutive uniforms. The whole stream is a pure function of the seed.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1FE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in (0, 1].
    double uniform01() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    /// Standard normal pair via Box-Muller: r = sqrt(-2 ln u1),
    /// (r cos(2 pi u2), r sin(2 pi u2)).
    std::pair<double, double> gaussian_pair() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

    /// Substream seed for (seed, index): skip `index` outputs of a fresh
    /// stream, return the next output. Distinct indices give decorrelated,
    /// reproducible substreams.
    static uint64_t substream(uint64_t seed, uint64_t index) {
        SplitMix64 g(seed);
        for (uint64_t i = 0; i < index; ++i) g.next();
        return g.next();
    }

  private:
    uint64_t state_;
};

}  // namespace qde
