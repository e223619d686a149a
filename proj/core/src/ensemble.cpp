#include "brw/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "brw/errors.hpp"
#include "brw/io.hpp"

namespace brw {

double DensityCurve::integral() const {
    if (values.size() < 2) return 0.0;
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
    return sum * dx;
}

std::string DensityCurve::to_csv() const {
    std::string out = "x,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += format_g17(x(i));
        out += ',';
        out += format_g17(values[i]);
        out += '\n';
    }
    return out;
}

EnsembleProcess::EnsembleProcess(std::vector<OccupationMeasure> trees,
                                 std::uint64_t n_scale)
    : trees_(std::move(trees)), n_scale_(n_scale) {
    cumulative_.resize(trees_.size() + 1, 0);
    for (std::size_t i = 0; i < trees_.size(); ++i)
        cumulative_[i + 1] = cumulative_[i] + trees_[i].total();
}

EnsembleProcess build_ensemble(std::vector<OccupationMeasure> trees,
                               std::uint64_t n_scale) {
    if (trees.empty()) throw EmptyEnsemble("ensemble needs at least one tree");
    if (n_scale < 1) throw EmptyEnsemble("ensemble scale N must be >= 1");
    return EnsembleProcess(std::move(trees), n_scale);
}

std::size_t EnsembleProcess::trees_at(double s) const {
    if (s < 0.0) throw Error("s must be nonnegative");
    auto m = static_cast<std::size_t>(std::floor(s * static_cast<double>(n_scale_)));
    if (m > trees_.size())
        throw NotEnoughTrees("need " + std::to_string(m) + " trees, have " +
                             std::to_string(trees_.size()));
    return m;
}

DensityCurve EnsembleProcess::eval_density(double s, double x0, double dx,
                                           std::size_t count) const {
    const std::size_t m = trees_at(s);
    const double sqrt_n = std::sqrt(static_cast<double>(n_scale_));
    const double step_sites = dx * sqrt_n;
    const double origin_sites = x0 * sqrt_n;
    auto stride = static_cast<std::int64_t>(std::llround(step_sites));
    auto origin = static_cast<std::int64_t>(std::llround(origin_sites));
    if (stride < 1 || std::abs(step_sites - static_cast<double>(stride)) > 1e-9 ||
        std::abs(origin_sites - static_cast<double>(origin)) > 1e-9)
        throw GridMisaligned("grid must lie on multiples of 1/sqrt(N)");

    DensityCurve curve;
    curve.x0 = x0;
    curve.dx = dx;
    curve.values.assign(count, 0.0);
    const double scale = std::pow(static_cast<double>(n_scale_), -1.5);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& tree = trees_[i];
        for (std::size_t j = 0; j < count; ++j) {
            std::int64_t site = origin + static_cast<std::int64_t>(j) * stride;
            curve.values[j] += static_cast<double>(tree.count_at(site));
        }
    }
    for (auto& v : curve.values) v *= scale;
    return curve;
}

DensityCurve EnsembleProcess::eval_density(double s) const {
    const std::size_t m = trees_at(s);
    std::int64_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < m; ++i) {
        lo = std::min(lo, trees_[i].min_site());
        hi = std::max(hi, trees_[i].max_site());
    }
    const double sqrt_n = std::sqrt(static_cast<double>(n_scale_));
    // One spacing of margin so the curve vanishes at both grid ends.
    lo -= 1;
    hi += 1;
    return eval_density(s, static_cast<double>(lo) / sqrt_n, 1.0 / sqrt_n,
                        static_cast<std::size_t>(hi - lo + 1));
}

double EnsembleProcess::area_process(double s) const {
    const std::size_t m = trees_at(s);
    const double n = static_cast<double>(n_scale_);
    return static_cast<double>(cumulative_[m]) / (n * n);
}

double EnsembleProcess::zero_process(double s) const {
    const std::size_t m = trees_at(s);
    std::uint64_t at_zero = 0;
    for (std::size_t i = 0; i < m; ++i) at_zero += trees_[i].count_at(0);
    return static_cast<double>(at_zero) * std::pow(static_cast<double>(n_scale_), -1.5);
}

DensityCurve EnsembleProcess::tree_curve(std::size_t tree_index_0based) const {
    const auto& tree = trees_[tree_index_0based];
    const double sqrt_n = std::sqrt(static_cast<double>(n_scale_));
    const double scale = std::pow(static_cast<double>(n_scale_), -1.5);
    std::int64_t lo = tree.min_site() - 1;
    std::int64_t hi = tree.max_site() + 1;
    DensityCurve curve;
    curve.x0 = static_cast<double>(lo) / sqrt_n;
    curve.dx = 1.0 / sqrt_n;
    curve.values.resize(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t site = lo; site <= hi; ++site)
        curve.values[static_cast<std::size_t>(site - lo)] =
            scale * static_cast<double>(tree.count_at(site));
    return curve;
}

std::vector<JumpProfile> EnsembleProcess::ordered_jumps(double s_max,
                                                        std::size_t m) const {
    const std::size_t available = trees_at(s_max);
    if (m == 0) return {};
    if (available == 0) throw NotEnoughTrees("no trees before s_max");
    std::vector<std::size_t> order(available);
    for (std::size_t i = 0; i < available; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return trees_[a].total() > trees_[b].total();  // ties: smaller index first
    });
    const double n = static_cast<double>(n_scale_);
    std::vector<JumpProfile> out;
    out.reserve(std::min(m, available));
    for (std::size_t r = 0; r < std::min(m, available); ++r) {
        JumpProfile jump;
        jump.tree_index = order[r] + 1;
        jump.area = static_cast<double>(trees_[order[r]].total()) / (n * n);
        jump.curve = tree_curve(order[r]);
        jump.rank = static_cast<std::uint32_t>(r + 1);
        out.push_back(std::move(jump));
    }
    return out;
}

std::string curves_to_json(const std::vector<double>& s_values,
                           const std::vector<DensityCurve>& curves) {
    std::string out = "{\n  \"curves\": [\n";
    for (std::size_t c = 0; c < curves.size(); ++c) {
        out += "    {\"s\": " + format_g17(s_values[c]) + ", \"x0\": " +
               format_g17(curves[c].x0) + ", \"dx\": " + format_g17(curves[c].dx) +
               ", \"values\": [";
        for (std::size_t i = 0; i < curves[c].values.size(); ++i) {
            if (i) out += ',';
            out += format_g17(curves[c].values[i]);
        }
        out += "]}";
        if (c + 1 < curves.size()) out += ',';
        out += '\n';
    }
    out += "  ]\n}\n";
    return out;
}

} // namespace brw
