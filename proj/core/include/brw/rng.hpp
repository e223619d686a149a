#ifndef BRW_RNG_HPP
#define BRW_RNG_HPP

#include <cmath>
#include <cstdint>

namespace brw {

/// splitmix64 mixing step. Used for seeding and stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed for an independent substream, derived from (master seed, task index).
///
/// Serial and parallel runs agree because every sampler draws only from the
/// stream of its own task index, never from a shared generator.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s);
    s = master ^ (0xD1B54A32D192ED03ULL * (index + 1));
    std::uint64_t b = splitmix64(s);
    return a ^ (b + 0x9E3779B97F4A7C15ULL);
}

/// xoshiro256++ generator. Deterministic across platforms, explicit state,
/// cheap to construct per task.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : state_) w = splitmix64(s);
    }

    static Rng substream(std::uint64_t master, std::uint64_t index) {
        return Rng(stream_seed(master, index));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe as inverse-CDF argument.
    double uniform_pos() { return 1.0 - uniform(); }

    /// Unbiased uniform integer in [0, n), n >= 1. Rejection on the top range.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

/// Exact Poisson sampler. Sequential inversion for small means; recursive
/// halving (Poisson(m) = Poisson(m/2) + Poisson(m/2)) keeps the inversion
/// in a range where exp(-mean) does not underflow.
inline std::uint64_t poisson(Rng& rng, double mean) {
    if (mean <= 0.0) return 0;
    if (mean > 30.0) {
        return poisson(rng, mean / 2.0) + poisson(rng, mean / 2.0);
    }
    double p = std::exp(-mean);
    double cum = p;
    double u = rng.uniform();
    std::uint64_t k = 0;
    while (u > cum) {
        ++k;
        p *= mean / static_cast<double>(k);
        cum += p;
        if (k > 1000) break;  // cum has saturated in double precision
    }
    return k;
}

} // namespace brw

#endif
