#ifndef BRW_VERIFY_HPP
#define BRW_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "brw/config.hpp"

namespace brw {

/// One verified claim: statistic against a threshold (interval or upper
/// bound), with the seed and sample budget that produced it.
struct CheckResult {
    std::string check_id;
    std::string paper_ref;       // which limit law / identity is being tested
    double statistic = 0.0;
    double threshold_low = 0.0;  // statistic must land in [low, high]
    double threshold_high = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
    std::uint64_t n_used = 0;
    double wall_time_s = 0.0;
    std::vector<std::string> warnings;
};

struct StatReport {
    std::string tool_version;
    std::uint64_t master_seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string to_json() const;
};

/// Removes wall_time_s entries so reports can be compared byte-for-byte
/// across runs and thread counts.
std::string strip_timing(const std::string& report_json);

/// Runs every statistical verification experiment (the full claim list:
/// tail asymptotics, theta law, stable indices, scaling, dual-path limit
/// checks, exact invariants, small-instance oracle, estimator calibration,
/// determinism) and returns a machine-readable pass/fail report.
///
/// Thread count never affects results: every replicate owns a substream
/// keyed by (master seed, check index, replicate index).
StatReport verify_suite(const RunConfig& config);

} // namespace brw

#endif
