#ifndef BRW_OCCUPATION_HPP
#define BRW_OCCUPATION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace brw {

/// Vertical profile of one labeled tree: site -> vertex count.
///
/// Stored densely over [min_site, max_site] (branching random walk supports
/// are narrow: width O(|T|^{1/4})); absent sites mean zero.
class OccupationMeasure {
public:
    OccupationMeasure() = default;
    OccupationMeasure(std::vector<std::uint64_t> counts, std::int64_t min_site,
                      std::uint64_t total, std::uint32_t height);

    std::uint64_t total() const { return total_; }
    std::uint32_t height() const { return height_; }
    std::int64_t min_site() const { return min_site_; }
    std::int64_t max_site() const { return min_site_ + static_cast<std::int64_t>(counts_.size()) - 1; }

    std::uint64_t count_at(std::int64_t site) const {
        std::int64_t i = site - min_site_;
        if (i < 0 || i >= static_cast<std::int64_t>(counts_.size())) return 0;
        return counts_[static_cast<std::size_t>(i)];
    }

    /// Dense storage, index 0 at min_site(). Entries at the ends are nonzero.
    const std::vector<std::uint64_t>& dense() const { return counts_; }

    /// Sparse view: (site, count) pairs sorted by site, counts >= 1.
    std::vector<std::pair<std::int64_t, std::uint64_t>> sparse() const;

    /// CSV lines "site,count" sorted by site.
    std::string to_csv() const;

    bool operator==(const OccupationMeasure&) const = default;

private:
    std::vector<std::uint64_t> counts_;
    std::int64_t min_site_ = 0;
    std::uint64_t total_ = 0;
    std::uint32_t height_ = 0;
};

/// Grow-on-demand accumulator used by the tree samplers.
class OccupationAccumulator {
public:
    OccupationAccumulator() : counts_(65, 0), offset_(32) {}

    void add(std::int64_t site) {
        std::int64_t i = site + offset_;
        if (i < 0 || i >= static_cast<std::int64_t>(counts_.size())) grow(site);
        ++counts_[static_cast<std::size_t>(site + offset_)];
        ++total_;
    }

    void note_height(std::uint32_t depth) {
        if (depth > height_) height_ = depth;
    }

    std::uint64_t total() const { return total_; }

    OccupationMeasure finish() &&;

private:
    void grow(std::int64_t site);
    std::vector<std::uint64_t> counts_;
    std::int64_t offset_;
    std::uint64_t total_ = 0;
    std::uint32_t height_ = 0;
};

} // namespace brw

#endif
