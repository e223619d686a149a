#include "brw/gw.hpp"

#include <vector>

#include "brw/errors.hpp"

namespace brw {

namespace {

struct PendingVertex {
    std::int64_t position;
    std::uint32_t depth;
};

} // namespace

OccupationMeasure sample_tree_occupation(const OffspringLaw& nu, const StepLaw& f,
                                         Rng& rng, std::uint64_t vertex_cap) {
    if (vertex_cap < 1) throw Error("vertex_cap must be >= 1");
    OccupationAccumulator acc;
    std::vector<PendingVertex> stack;
    stack.push_back({0, 0});
    while (!stack.empty()) {
        PendingVertex v = stack.back();
        stack.pop_back();
        if (acc.total() >= vertex_cap) throw VertexCapExceeded(acc.total());
        acc.add(v.position);
        acc.note_height(v.depth);
        std::uint64_t children = nu.sample(rng);
        for (std::uint64_t c = 0; c < children; ++c)
            stack.push_back({v.position + f.sample(rng), v.depth + 1});
    }
    return std::move(acc).finish();
}

TreeSummary sample_tree_summary(const OffspringLaw& nu, const StepLaw& f,
                                Rng& rng, std::uint64_t vertex_cap) {
    TreeSummary out;
    std::vector<PendingVertex> stack;
    stack.push_back({0, 0});
    while (!stack.empty()) {
        PendingVertex v = stack.back();
        stack.pop_back();
        if (out.total >= vertex_cap) {
            out.capped = true;
            return out;
        }
        ++out.total;
        if (v.position == 0) ++out.zero_count;
        if (v.depth > out.height) out.height = v.depth;
        std::uint64_t children = nu.sample(rng);
        for (std::uint64_t c = 0; c < children; ++c)
            stack.push_back({v.position + f.sample(rng), v.depth + 1});
    }
    return out;
}

TotalResult sample_total_progeny(const OffspringLaw& nu, Rng& rng,
                                 std::uint64_t vertex_cap) {
    // |T| = first n with 1 + sum_{i<=n} (xi_i - 1) = 0.
    std::int64_t walk = 1;
    std::uint64_t n = 0;
    while (walk > 0) {
        if (n >= vertex_cap) return {n, true};
        ++n;
        walk += static_cast<std::int64_t>(nu.sample(rng)) - 1;
    }
    return {n, false};
}

double survival_probability_estimate(const OffspringLaw& nu, std::uint32_t n,
                                     std::uint64_t trials, Rng& rng) {
    if (n < 1) throw Error("generation must be >= 1");
    if (trials < 1) throw Error("trials must be >= 1");
    std::uint64_t alive = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::uint64_t z = 1;
        for (std::uint32_t gen = 0; gen < n && z > 0; ++gen) {
            std::uint64_t next = 0;
            for (std::uint64_t i = 0; i < z; ++i) next += nu.sample(rng);
            z = next;
        }
        if (z > 0) ++alive;
    }
    return static_cast<double>(alive) / static_cast<double>(trials);
}

} // namespace brw
