#ifndef BRW_CONFIG_HPP
#define BRW_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brw/laws.hpp"

namespace brw {

/// Distribution spec: a preset tag or an explicit pmf.
struct LawSpec {
    std::string preset;                                  // empty if pmf given
    std::vector<std::pair<std::int64_t, double>> pmf;    // empty if preset given

    OffspringLaw make_offspring() const;
    StepLaw make_step() const;
};

/// Evaluation grid: either auto-detected from supports or explicit.
struct GridSpec {
    bool automatic = true;
    double x0 = 0.0;
    double dx = 0.0;
    std::size_t count = 0;
};

/// Budgets for the statistical verification suite. Defaults are sized for
/// the reference experiments in the README.
struct VerifyBudget {
    std::uint64_t survival_trials = 100000;
    std::uint32_t survival_generation = 200;
    std::uint64_t theta_replicates = 2000;
    std::uint64_t theta_ensemble = 500;
    std::uint64_t hill_ensembles = 20;
    std::uint64_t hill_ensemble_n = 1000;
    std::uint64_t scaling_replicates = 1500;
    std::uint64_t scaling_ensemble = 500;
    std::uint64_t dual_replicates = 1000;
    std::uint64_t dual_ensemble = 1000;
    std::uint64_t shape_replicates = 500;
    std::uint64_t shape_ensemble = 200;
    std::uint64_t chi2_samples = 100000;
    std::uint64_t calibration_repetitions = 200;
    std::uint64_t calibration_samples = 10000;
    std::uint64_t ppp_draws = 100000;
};

/// Whole-run configuration; round-trips losslessly through its JSON form.
struct RunConfig {
    std::uint64_t master_seed = 20260826;
    LawSpec offspring{.preset = "poisson1", .pmf = {}};
    LawSpec step{.preset = "uniform", .pmf = {}};
    std::uint64_t ensemble_scale = 1000;                 // N
    std::vector<double> s_grid = {0.1, 0.2, 0.3, 0.4, 0.5,
                                  0.6, 0.7, 0.8, 0.9, 1.0};
    GridSpec x_grid;
    double l_min = 1e-6;
    std::uint64_t n_ise = 100000;
    std::uint64_t replicates = 1;
    std::uint64_t vertex_cap = 100000000;
    std::uint64_t jump_count = 10;                       // m for the jumps command
    std::string output_dir = "out";
    unsigned threads = 1;
    VerifyBudget verify;

    void validate() const;  // throws ConfigError
};

/// JSON (de)serialization. parse_config accepts the same document shape that
/// config_to_json emits; missing keys fall back to defaults.
RunConfig parse_config(const std::string& json_text);
std::string config_to_json(const RunConfig& config);

} // namespace brw

#endif
