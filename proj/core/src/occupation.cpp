#include "brw/occupation.hpp"

#include <algorithm>
#include <cstdio>

namespace brw {

OccupationMeasure::OccupationMeasure(std::vector<std::uint64_t> counts,
                                     std::int64_t min_site, std::uint64_t total,
                                     std::uint32_t height)
    : counts_(std::move(counts)), min_site_(min_site), total_(total), height_(height) {}

std::vector<std::pair<std::int64_t, std::uint64_t>> OccupationMeasure::sparse() const {
    std::vector<std::pair<std::int64_t, std::uint64_t>> out;
    for (std::size_t i = 0; i < counts_.size(); ++i)
        if (counts_[i] > 0)
            out.emplace_back(min_site_ + static_cast<std::int64_t>(i), counts_[i]);
    return out;
}

std::string OccupationMeasure::to_csv() const {
    std::string out = "site,count\n";
    char buf[64];
    for (const auto& [site, count] : sparse()) {
        std::snprintf(buf, sizeof(buf), "%lld,%llu\n",
                      static_cast<long long>(site),
                      static_cast<unsigned long long>(count));
        out += buf;
    }
    return out;
}

OccupationMeasure OccupationAccumulator::finish() && {
    // Trim zero margins.
    std::size_t lo = 0, hi = counts_.size();
    while (lo < hi && counts_[lo] == 0) ++lo;
    while (hi > lo && counts_[hi - 1] == 0) --hi;
    std::vector<std::uint64_t> trimmed(counts_.begin() + static_cast<std::ptrdiff_t>(lo),
                                       counts_.begin() + static_cast<std::ptrdiff_t>(hi));
    return OccupationMeasure(std::move(trimmed),
                             static_cast<std::int64_t>(lo) - offset_, total_, height_);
}

void OccupationAccumulator::grow(std::int64_t site) {
    std::int64_t lo = -offset_;
    std::int64_t hi = lo + static_cast<std::int64_t>(counts_.size());
    std::int64_t new_lo = std::min(lo, site - static_cast<std::int64_t>(counts_.size()));
    std::int64_t new_hi = std::max(hi, site + 1 + static_cast<std::int64_t>(counts_.size()));
    std::vector<std::uint64_t> bigger(static_cast<std::size_t>(new_hi - new_lo), 0);
    std::copy(counts_.begin(), counts_.end(),
              bigger.begin() + static_cast<std::ptrdiff_t>(lo - new_lo));
    counts_ = std::move(bigger);
    offset_ = -new_lo;
}

} // namespace brw
