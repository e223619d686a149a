#ifndef BRW_ISE_HPP
#define BRW_ISE_HPP

#include <cstdint>
#include <vector>

#include "brw/conditioned.hpp"
#include "brw/laws.hpp"
#include "brw/rng.hpp"

namespace brw {

/// Approximate sample of the ISE density f_ISE on a symmetric grid.
///
/// Built from a size-n conditioned tree: u(x) = n^{-3/4} Xbar(n^{1/4} x),
/// then normalized by gamma = sqrt(sigma_nu) / sigma_F so that
/// fhat(y) = gamma^{-1} u(y / gamma) -> f_ISE as n -> infinity.
struct IseSample {
    double grid_step = 0.0;             // actual spacing (snapped to the lattice image)
    std::vector<double> values;         // y_j = (j - center) * grid_step
    std::size_t center = 0;             // index of y = 0
    std::uint64_t source_size = 0;      // conditioning size n

    double value_at(double y) const {   // linear interpolation, 0 off-grid
        double pos = y / grid_step + static_cast<double>(center);
        if (pos <= 0.0 || pos >= static_cast<double>(values.size() - 1)) return 0.0;
        auto i = static_cast<std::size_t>(pos);
        double frac = pos - static_cast<double>(i);
        return values[i] * (1.0 - frac) + values[i + 1] * frac;
    }

    /// grid_step * sum(values); equals 1 exactly when the grid hits every
    /// lattice image (the default), up to rounding.
    double mass() const;
};

/// gamma = sigma_F^{-1} sigma_nu^{1/2}.
double ise_gamma(double sigma_nu_sq, double sigma_f_sq);

/// Draws a size-n conditioned occupation measure and rescales it to an
/// ISE density sample. The requested grid_step is snapped to a positive
/// integer multiple of the lattice image spacing gamma * n^{-1/4}, so grid
/// points coincide with lattice points and the interpolation is exact there.
IseSample ise_density_sample(const OffspringLaw& nu, const StepLaw& f,
                             std::uint64_t n, double grid_step, Rng& rng);

/// Rescaling of an already-sampled conditioned occupation measure.
IseSample ise_from_occupation(const OccupationMeasure& occ, double sigma_nu_sq,
                              double sigma_f_sq, double grid_step);

} // namespace brw

#endif
