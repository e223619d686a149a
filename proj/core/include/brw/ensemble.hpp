#ifndef BRW_ENSEMBLE_HPP
#define BRW_ENSEMBLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "brw/occupation.hpp"

namespace brw {

/// Arithmetic evaluation grid x_i = x0 + i * dx with values attached.
struct DensityCurve {
    double x0 = 0.0;
    double dx = 0.0;
    std::vector<double> values;

    double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
    std::size_t size() const { return values.size(); }

    /// Trapezoidal integral over the grid.
    double integral() const;

    /// CSV "x,value" with a header, 17 significant digits.
    std::string to_csv() const;
};

/// One tree's contribution to g^N as a function, with its area (the jump of
/// theta) and rank among the ordered jumps.
struct JumpProfile {
    std::uint64_t tree_index = 0;  // 1-based
    double area = 0.0;             // |T_i| / N^2, exact
    DensityCurve curve;            // N^{-3/2} Xbar_i(sqrt(N) x) on the support grid
    std::uint32_t rank = 0;        // 1 = largest
};

/// Ordered per-tree occupation data for the rescaled step process
/// g^N_s(x) = N^{-3/2} Xbar^{floor(sN)}(sqrt(N) x). Immutable after build.
class EnsembleProcess {
public:
    EnsembleProcess(std::vector<OccupationMeasure> trees, std::uint64_t n_scale);

    std::uint64_t scale() const { return n_scale_; }
    std::size_t tree_count() const { return trees_.size(); }
    const OccupationMeasure& tree(std::size_t i) const { return trees_[i]; }

    /// Prefix sums A_m = sum of the first m tree totals, A_0 = 0.
    std::uint64_t cumulative_total(std::size_t m) const { return cumulative_[m]; }

    /// Number of trees entering g^N_s, floor(sN). Throws NotEnoughTrees.
    std::size_t trees_at(double s) const;

    /// Evaluates g^N_s on the grid. Grid spacing (and origin) must be an
    /// integer multiple of 1/sqrt(N); throws GridMisaligned otherwise.
    DensityCurve eval_density(double s, double x0, double dx, std::size_t count) const;

    /// Default support-covering grid with spacing 1/sqrt(N).
    DensityCurve eval_density(double s) const;

    /// theta^N_s = A_{floor(sN)} / N^2, exact from prefix sums.
    double area_process(double s) const;

    /// I^N_s = g^N_s(0), exact lattice value; no interpolation involved.
    double zero_process(double s) const;

    /// The m largest trees among the first floor(s_max N), by area, ties
    /// broken by smaller tree index.
    std::vector<JumpProfile> ordered_jumps(double s_max, std::size_t m) const;

    /// Single tree's rescaled curve N^{-3/2} Xbar_i(sqrt(N) x) on its own
    /// support grid (spacing 1/sqrt(N), one zero sample on each side).
    DensityCurve tree_curve(std::size_t tree_index_0based) const;

private:
    std::vector<OccupationMeasure> trees_;
    std::vector<std::uint64_t> cumulative_;
    std::uint64_t n_scale_;
};

/// Builds the process from trees in index order. Throws EmptyEnsemble.
EnsembleProcess build_ensemble(std::vector<OccupationMeasure> trees,
                               std::uint64_t n_scale);

/// JSON document with one curve per s value (the published-figure layout).
std::string curves_to_json(const std::vector<double>& s_values,
                           const std::vector<DensityCurve>& curves);

} // namespace brw

#endif
