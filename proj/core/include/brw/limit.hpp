#ifndef BRW_LIMIT_HPP
#define BRW_LIMIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "brw/ensemble.hpp"
#include "brw/ise.hpp"
#include "brw/rng.hpp"

namespace brw {

/// One atom of the jump point process: time, size, and the profile sample
/// standing in for the ISE density of that jump.
struct LimitAtom {
    double t = 0.0;   // jump time in [0, s_max]
    double l = 0.0;   // jump size (area), >= l_min
    IseSample ise;    // may be empty until attached
};

/// Truncated Poisson point process N(dt, dl, dh) on [0,s_max] x [l_min,inf).
struct LimitJumpSet {
    double s_max = 0.0;
    double l_min = 0.0;
    std::vector<LimitAtom> atoms;  // sorted by (t, insertion index)
};

/// Jump intensity tail mass: Lambda(x) = integral_x^inf dl / sqrt(2 pi l^3)
/// = sqrt(2 / (pi x)).
double jump_intensity_tail(double x);

/// Atoms of the jump point process above the size truncation l_min:
/// count ~ Poisson(s_max * Lambda(l_min)), times i.i.d. uniform on
/// [0, s_max], sizes by exact inverse CDF l = l_min / U^2. Sorted by time.
std::vector<LimitAtom> sample_jump_atoms(double s_max, double l_min, Rng& rng);

/// Expected total area of the discarded jumps below l_min:
/// s * integral_0^{l_min} l dl / sqrt(2 pi l^3) = s * sqrt(2 l_min / pi).
double truncation_area_bound(double l_min, double s);

/// Assembles the limit density at time s on the grid:
/// g_s(x) = sum over atoms with t <= s of
///   (1 / (sigma_nu sigma_F)) l^{3/4} h(l^{-1/4} (sigma_nu / sigma_F) x).
/// Every contributing atom must carry an ISE sample (MissingIseSample).
DensityCurve assemble_limit_density(const LimitJumpSet& jumps, double sigma_nu_sq,
                                    double sigma_f_sq, double s, double x0,
                                    double dx, std::size_t count);

/// Value of the assembled density at a single point (same formula).
double assemble_limit_value(const LimitJumpSet& jumps, double sigma_nu_sq,
                            double sigma_f_sq, double s, double x);

/// JSON body {s_max, l_min, atoms: [{t, l, ise_ref}]}; ISE grids are written
/// as sidecar CSVs named by ise_ref so a path can be replayed later.
std::string limit_jump_set_to_json(const LimitJumpSet& jumps,
                                   const std::string& ise_ref_prefix);

/// Sidecar CSV for one atom's ISE sample: "y,value" rows.
std::string ise_sample_to_csv(const IseSample& sample);

} // namespace brw

#endif
