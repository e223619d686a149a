#include "brw/ise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "brw/errors.hpp"

namespace brw {

double IseSample::mass() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return grid_step * sum;
}

double ise_gamma(double sigma_nu_sq, double sigma_f_sq) {
    return std::pow(sigma_nu_sq, 0.25) / std::sqrt(sigma_f_sq);
}

IseSample ise_from_occupation(const OccupationMeasure& occ, double sigma_nu_sq,
                              double sigma_f_sq, double grid_step) {
    if (grid_step <= 0.0) throw Error("grid_step must be positive");
    const double n = static_cast<double>(occ.total());
    const double gamma = ise_gamma(sigma_nu_sq, sigma_f_sq);
    // Lattice site k sits at y = gamma * n^{-1/4} * k with density value
    // gamma^{-1} n^{-3/4} X(k).
    const double delta = gamma * std::pow(n, -0.25);
    const auto stride = static_cast<std::int64_t>(
        std::max(1.0, std::floor(grid_step / delta + 0.5)));
    const double scale = std::pow(n, -0.75) / gamma;

    const std::int64_t lo_site = occ.min_site();
    const std::int64_t hi_site = occ.max_site();
    // Symmetric grid in units of stride sites, covering the support with a
    // zero value at both ends.
    std::int64_t radius = std::max(std::abs(lo_site), std::abs(hi_site)) / stride + 1;

    IseSample out;
    out.grid_step = delta * static_cast<double>(stride);
    out.center = static_cast<std::size_t>(radius);
    out.source_size = occ.total();
    out.values.resize(static_cast<std::size_t>(2 * radius + 1));
    for (std::int64_t j = -radius; j <= radius; ++j)
        out.values[static_cast<std::size_t>(j + radius)] =
            scale * static_cast<double>(occ.count_at(j * stride));
    return out;
}

IseSample ise_density_sample(const OffspringLaw& nu, const StepLaw& f,
                             std::uint64_t n, double grid_step, Rng& rng) {
    OccupationMeasure occ = sample_conditioned_occupation(nu, f, n, rng);
    return ise_from_occupation(occ, nu.variance, f.variance, grid_step);
}

} // namespace brw
