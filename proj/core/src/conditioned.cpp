#include "brw/conditioned.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "brw/errors.hpp"

namespace brw {

namespace {

// Sum n-1 reachable as a sum of n support values?
void check_size_compatible(const OffspringLaw& nu, std::uint64_t n) {
    if (n < 1) throw IncompatibleSize("n must be >= 1");
    const auto k_min = nu.pmf.front().first;
    const auto k_max = nu.pmf.back().first;
    const auto target = n - 1;
    if (target < n * k_min || target > n * k_max)
        throw IncompatibleSize("sum n-1 outside reachable range");
    std::uint64_t g = 0;
    for (const auto& [k, p] : nu.pmf) g = std::gcd(g, k - k_min);
    if (g > 0 && (target - n * k_min) % g != 0)
        throw IncompatibleSize("sum n-1 unreachable on the support lattice");
}

// Rotate so the walk stays >= 1 until the final step (cycle lemma): start
// right after the first position where the Lukasiewicz walk attains its
// minimum.
void cycle_rotate(std::vector<std::uint32_t>& xi) {
    std::int64_t walk = 0, min_walk = 0;
    std::size_t argmin = xi.size() - 1;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        walk += static_cast<std::int64_t>(xi[i]) - 1;
        if (walk < min_walk) {
            min_walk = walk;
            argmin = i;
        }
    }
    std::size_t start = (argmin + 1) % xi.size();
    std::rotate(xi.begin(), xi.begin() + static_cast<std::ptrdiff_t>(start), xi.end());
}

// Multinomial placement of n-1 balls into n boxes == i.i.d. Poisson(1)
// offspring conditioned on sum n-1. A round is rejected if any box exceeds
// the truncated support (probability ~ 1e-14), which restores the truncated
// conditional law exactly.
std::vector<std::uint32_t> poisson_conditioned_counts(const OffspringLaw& nu,
                                                      std::uint64_t n, Rng& rng) {
    const std::uint64_t k_max = nu.max_offspring();
    std::vector<std::uint32_t> xi(n);
    for (;;) {
        std::fill(xi.begin(), xi.end(), 0u);
        bool ok = true;
        for (std::uint64_t ball = 0; ball < n - 1; ++ball) {
            std::uint32_t& box = xi[rng.uniform_below(n)];
            if (++box > k_max) ok = false;
        }
        if (ok) return xi;
    }
}

} // namespace

bool is_valid_tree_encoding(const std::vector<std::uint32_t>& offspring) {
    std::int64_t walk = 1;
    for (std::size_t i = 0; i < offspring.size(); ++i) {
        if (walk <= 0) return false;
        walk += static_cast<std::int64_t>(offspring[i]) - 1;
    }
    return walk == 0;
}

std::vector<std::uint32_t> sample_conditioned_sequence(
    const OffspringLaw& nu, std::uint64_t n, Rng& rng,
    std::uint64_t max_rejection_rounds) {
    check_size_compatible(nu, n);
    if (n == 1) return {0u};

    std::vector<std::uint32_t> xi;
    if (nu.is_poisson1) {
        xi = poisson_conditioned_counts(nu, n, rng);
    } else {
        // Rejection on the sum: expected O(sigma sqrt(n)) rounds.
        if (max_rejection_rounds == 0) {
            double sigma = std::sqrt(nu.variance);
            max_rejection_rounds = 200 + static_cast<std::uint64_t>(
                64.0 * sigma * std::sqrt(static_cast<double>(n)));
        }
        xi.resize(n);
        const std::uint64_t target = n - 1;
        bool accepted = false;
        for (std::uint64_t round = 0; round < max_rejection_rounds; ++round) {
            std::uint64_t sum = 0;
            for (auto& x : xi) {
                x = static_cast<std::uint32_t>(nu.sample(rng));
                sum += x;
            }
            if (sum == target) {
                accepted = true;
                break;
            }
        }
        if (!accepted) throw RejectionBudgetExceeded("conditioned sampler rejection budget");
    }

    cycle_rotate(xi);
    assert(is_valid_tree_encoding(xi));
    return xi;
}

OccupationMeasure occupation_from_sequence(const std::vector<std::uint32_t>& offspring,
                                           const StepLaw& f, Rng& rng) {
    OccupationAccumulator acc;
    struct Pending { std::int64_t position; std::uint32_t depth; };
    std::vector<Pending> stack;
    stack.push_back({0, 0});
    for (std::uint32_t children : offspring) {
        Pending v = stack.back();
        stack.pop_back();
        acc.add(v.position);
        acc.note_height(v.depth);
        for (std::uint32_t c = 0; c < children; ++c)
            stack.push_back({v.position + f.sample(rng), v.depth + 1});
    }
    assert(stack.empty());
    return std::move(acc).finish();
}

OccupationMeasure sample_conditioned_occupation(const OffspringLaw& nu,
                                                const StepLaw& f, std::uint64_t n,
                                                Rng& rng,
                                                std::uint64_t max_rejection_rounds) {
    auto xi = sample_conditioned_sequence(nu, n, rng, max_rejection_rounds);
    return occupation_from_sequence(xi, f, rng);
}

} // namespace brw
