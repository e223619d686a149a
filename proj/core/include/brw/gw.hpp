#ifndef BRW_GW_HPP
#define BRW_GW_HPP

#include <cstdint>

#include "brw/laws.hpp"
#include "brw/occupation.hpp"
#include "brw/rng.hpp"

namespace brw {

/// One critical Galton-Watson tree with random-walk labels, streamed
/// depth-first (explicit stack of pending (depth, position) pairs; the tree
/// itself is never stored). Deterministic vertex order given the rng stream.
///
/// Throws VertexCapExceeded (with the partial total) once the tree grows
/// past vertex_cap; the cap guards the heavy-tailed size |T|, which has
/// infinite mean.
OccupationMeasure sample_tree_occupation(const OffspringLaw& nu, const StepLaw& f,
                                         Rng& rng, std::uint64_t vertex_cap);

/// Reduced per-tree statistics for experiments that never need the full
/// profile. `capped` is surfaced instead of thrown so ensemble experiments
/// can account for truncated heavy-tail trees explicitly.
struct TreeSummary {
    std::uint64_t total = 0;       // vertices generated (== min(|T|, cap))
    std::uint64_t zero_count = 0;  // X(0; T), over generated vertices
    std::uint32_t height = 0;
    bool capped = false;
};

/// Same walk as sample_tree_occupation, same rng consumption, no site table.
TreeSummary sample_tree_summary(const OffspringLaw& nu, const StepLaw& f,
                                Rng& rng, std::uint64_t vertex_cap);

/// Total progeny only (no labels): |T| as the first-passage time of the
/// Lukasiewicz walk. Fastest path for size-law experiments.
struct TotalResult {
    std::uint64_t total = 0;
    bool capped = false;
};
TotalResult sample_total_progeny(const OffspringLaw& nu, Rng& rng,
                                 std::uint64_t vertex_cap);

/// Fraction of `trials` Galton-Watson processes with Z_n > 0, simulating
/// generation sizes only. Extinction-time convention: zeta > n iff Z_n > 0.
double survival_probability_estimate(const OffspringLaw& nu, std::uint32_t n,
                                     std::uint64_t trials, Rng& rng);

} // namespace brw

#endif
