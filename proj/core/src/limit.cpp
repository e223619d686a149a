#include "brw/limit.hpp"

#include <algorithm>
#include <cmath>

#include "brw/errors.hpp"
#include "brw/io.hpp"

namespace brw {

double jump_intensity_tail(double x) {
    if (x <= 0.0) throw Error("tail cutoff must be positive");
    return std::sqrt(2.0 / (M_PI * x));
}

std::vector<LimitAtom> sample_jump_atoms(double s_max, double l_min, Rng& rng) {
    if (s_max <= 0.0) throw Error("s_max must be positive");
    if (l_min <= 0.0) throw Error("l_min must be positive");
    const double mean_count = s_max * jump_intensity_tail(l_min);
    const std::uint64_t count = poisson(rng, mean_count);
    std::vector<LimitAtom> atoms(count);
    for (auto& atom : atoms) {
        atom.t = s_max * rng.uniform();
        // P(l > x | l >= l_min) = sqrt(l_min / x)  =>  l = l_min / U^2.
        double u = rng.uniform_pos();
        atom.l = l_min / (u * u);
    }
    std::stable_sort(atoms.begin(), atoms.end(),
                     [](const LimitAtom& a, const LimitAtom& b) { return a.t < b.t; });
    return atoms;
}

double truncation_area_bound(double l_min, double s) {
    if (l_min <= 0.0) throw Error("l_min must be positive");
    return s * std::sqrt(2.0 * l_min / M_PI);
}

namespace {

double atom_value(const LimitAtom& atom, double inv_sigma_prod, double ratio,
                  double x) {
    if (atom.ise.values.empty()) throw MissingIseSample("atom has no attached ISE sample");
    const double l34 = std::pow(atom.l, 0.75);
    const double arg = std::pow(atom.l, -0.25) * ratio * x;
    return inv_sigma_prod * l34 * atom.ise.value_at(arg);
}

} // namespace

DensityCurve assemble_limit_density(const LimitJumpSet& jumps, double sigma_nu_sq,
                                    double sigma_f_sq, double s, double x0,
                                    double dx, std::size_t count) {
    const double inv_sigma_prod = 1.0 / std::sqrt(sigma_nu_sq * sigma_f_sq);
    const double ratio = std::sqrt(sigma_nu_sq / sigma_f_sq);
    DensityCurve curve;
    curve.x0 = x0;
    curve.dx = dx;
    curve.values.assign(count, 0.0);
    for (const auto& atom : jumps.atoms) {
        if (atom.t > s) continue;
        for (std::size_t i = 0; i < count; ++i)
            curve.values[i] += atom_value(atom, inv_sigma_prod, ratio, curve.x(i));
    }
    return curve;
}

double assemble_limit_value(const LimitJumpSet& jumps, double sigma_nu_sq,
                            double sigma_f_sq, double s, double x) {
    const double inv_sigma_prod = 1.0 / std::sqrt(sigma_nu_sq * sigma_f_sq);
    const double ratio = std::sqrt(sigma_nu_sq / sigma_f_sq);
    double value = 0.0;
    for (const auto& atom : jumps.atoms)
        if (atom.t <= s) value += atom_value(atom, inv_sigma_prod, ratio, x);
    return value;
}

std::string limit_jump_set_to_json(const LimitJumpSet& jumps,
                                   const std::string& ise_ref_prefix) {
    std::string out = "{\n  \"s_max\": " + format_g17(jumps.s_max) +
                      ",\n  \"l_min\": " + format_g17(jumps.l_min) +
                      ",\n  \"atoms\": [\n";
    for (std::size_t i = 0; i < jumps.atoms.size(); ++i) {
        const auto& atom = jumps.atoms[i];
        out += "    {\"t\": " + format_g17(atom.t) + ", \"l\": " + format_g17(atom.l) +
               ", \"ise_ref\": \"" + ise_ref_prefix + std::to_string(i) + ".csv\"}";
        if (i + 1 < jumps.atoms.size()) out += ',';
        out += '\n';
    }
    out += "  ]\n}\n";
    return out;
}

std::string ise_sample_to_csv(const IseSample& sample) {
    std::string out = "y,value\n";
    for (std::size_t i = 0; i < sample.values.size(); ++i) {
        double y = (static_cast<double>(i) - static_cast<double>(sample.center)) *
                   sample.grid_step;
        out += format_g17(y);
        out += ',';
        out += format_g17(sample.values[i]);
        out += '\n';
    }
    return out;
}

} // namespace brw
