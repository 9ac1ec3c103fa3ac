#ifndef MISOID_RNG_HPP
#define MISOID_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace misoid {
namespace rng {

/// splitmix64 finalizer; used to derive independent sub-streams from a
/// master seed (seed splitting rule: substream(seed, tag) below).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Sub-seed for stream `tag` of master `seed`. Input channel i uses tag i+1,
/// noise for variable m uses tag 1000+m, regularization jitter tag 9000.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t tag) {
    return mix64(seed ^ mix64(tag));
}

/// Uniform double in [0, 1) from the top 53 bits of a mt19937_64 draw.
/// Avoids std::uniform_real_distribution, whose output is
/// implementation-defined; this stream is reproducible everywhere.
inline double canonical(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Standard normal stream via Box-Muller on explicit uniforms.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : eng_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = canonical(eng_);
        const double u2 = canonical(eng_);
        const double r = std::sqrt(-2.0 * std::log1p(-u1));  // u1 < 1 always
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Maximal-length 31-bit LFSR (taps 31, 28) emitting +/-1.
class PrbsStream {
public:
    explicit PrbsStream(std::uint64_t seed) {
        state_ = static_cast<std::uint32_t>(mix64(seed) & 0x7fffffffULL);
        if (state_ == 0) state_ = 0x1234567u;
    }

    double next() {
        const std::uint32_t bit = ((state_ >> 30) ^ (state_ >> 27)) & 1u;
        state_ = ((state_ << 1) | bit) & 0x7fffffffu;
        return bit ? 1.0 : -1.0;
    }

private:
    std::uint32_t state_;
};

}  // namespace rng
}  // namespace misoid

#endif
