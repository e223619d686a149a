#ifndef BRW_LAWS_HPP
#define BRW_LAWS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brw/rng.hpp"

namespace brw {

/// Alias-method sampler over a finite integer-valued pmf. O(1) per draw.
class DiscreteSampler {
public:
    DiscreteSampler() = default;
    DiscreteSampler(const std::vector<std::int64_t>& values,
                    const std::vector<double>& probs);

    std::int64_t sample(Rng& rng) const {
        // One 64-bit draw: top bits pick the slot, bottom 53 bits the
        // coin flip. Disjoint bit ranges for any support smaller than 2^11.
        std::uint64_t r = rng.next();
        auto slot = static_cast<std::size_t>(
            (static_cast<unsigned __int128>(r) * size_) >> 64);
        double u = static_cast<double>(r & ((1ULL << 53) - 1)) * 0x1.0p-53;
        return (u < threshold_[slot]) ? primary_[slot] : alias_[slot];
    }

private:
    std::uint64_t size_ = 0;
    std::vector<double> threshold_;
    std::vector<std::int64_t> primary_;
    std::vector<std::int64_t> alias_;
};

/// Validated critical offspring distribution: mean 1, variance in (0, inf).
struct OffspringLaw {
    std::vector<std::pair<std::uint64_t, double>> pmf;  // (k, p_k), sorted by k
    double mean = 0.0;
    double variance = 0.0;  // sigma_nu^2
    std::string name;
    DiscreteSampler sampler;

    std::uint64_t sample(Rng& rng) const {
        return static_cast<std::uint64_t>(sampler.sample(rng));
    }
    std::uint64_t max_offspring() const { return pmf.back().first; }

    /// True for the truncated-Poisson(1) preset, which admits an exact
    /// O(n) conditioned-sum sampler (multinomial ball placement).
    bool is_poisson1 = false;
};

/// Validated step distribution: mean 0, span 1, finite positive variance.
struct StepLaw {
    std::vector<std::pair<std::int64_t, double>> pmf;  // (j, q_j), sorted by j
    double variance = 0.0;  // sigma_F^2
    std::string name;
    DiscreteSampler sampler;

    std::int64_t sample(Rng& rng) const { return sampler.sample(rng); }
};

/// Validates a raw offspring pmf. Throws NotAProbability, NotCritical,
/// ZeroVariance.
OffspringLaw validate_offspring_law(
    std::vector<std::pair<std::uint64_t, double>> entries,
    std::string name = "custom");

/// Validates a raw step pmf. Throws NotAProbability, NonzeroMean, SpanNotOne,
/// ZeroVariance.
StepLaw validate_step_law(std::vector<std::pair<std::int64_t, double>> entries,
                          std::string name = "custom");

// Presets.
OffspringLaw poisson1_offspring();        // Poisson(1), tail < 1e-15 truncated, renormalized
OffspringLaw geometric_half_offspring();  // geometric(1/2) on {0,1,2,...}, sigma^2 = 2
OffspringLaw binary_offspring();          // (delta_0 + delta_2)/2, sigma^2 = 1
StepLaw uniform_step();                   // (delta_-1 + delta_0 + delta_1)/3, sigma^2 = 2/3
StepLaw lazy_step();                      // delta_-1/4 + delta_0/2 + delta_+1/4, sigma^2 = 1/2

/// Preset lookup by tag: "poisson1", "geometric_half", "binary" /
/// "uniform", "lazy". Throws ConfigError for unknown tags.
OffspringLaw offspring_preset(const std::string& tag);
StepLaw step_preset(const std::string& tag);

} // namespace brw

#endif
