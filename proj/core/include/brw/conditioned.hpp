#ifndef BRW_CONDITIONED_HPP
#define BRW_CONDITIONED_HPP

#include <cstdint>
#include <vector>

#include "brw/laws.hpp"
#include "brw/occupation.hpp"
#include "brw/rng.hpp"

namespace brw {

/// Preorder offspring sequence of a Galton-Watson tree conditioned on
/// exactly n vertices: i.i.d. offspring counts rejected until their sum is
/// n-1, then rotated by the cycle lemma to the unique valid tree encoding.
///
/// For the truncated-Poisson(1) preset the conditioned vector is drawn
/// directly as multinomial ball counts (exact, O(n) instead of O(n^{3/2})).
///
/// Throws IncompatibleSize, RejectionBudgetExceeded.
std::vector<std::uint32_t> sample_conditioned_sequence(
    const OffspringLaw& nu, std::uint64_t n, Rng& rng,
    std::uint64_t max_rejection_rounds = 0 /* 0 = auto */);

/// True iff the sequence is a valid Lukasiewicz encoding: the walk
/// 1 + sum(xi_i - 1) stays positive before the last step and ends at zero.
bool is_valid_tree_encoding(const std::vector<std::uint32_t>& offspring);

/// Labels a preorder offspring sequence with i.i.d. steps and accumulates
/// the occupation measure in one pass.
OccupationMeasure occupation_from_sequence(const std::vector<std::uint32_t>& offspring,
                                           const StepLaw& f, Rng& rng);

/// Occupation measure of a tree conditioned on |T| = n exactly.
OccupationMeasure sample_conditioned_occupation(const OffspringLaw& nu,
                                                const StepLaw& f, std::uint64_t n,
                                                Rng& rng,
                                                std::uint64_t max_rejection_rounds = 0);

} // namespace brw

#endif
