#include <doctest.h>

#include <cmath>

#include "brw/errors.hpp"
#include "brw/ise.hpp"
#include "brw/limit.hpp"

using namespace brw;

TEST_CASE("intensity tail mass") {
    CHECK(jump_intensity_tail(1.0) ==
          doctest::Approx(std::sqrt(2.0 / M_PI)).epsilon(1e-12));
    CHECK(jump_intensity_tail(1e-4) == doctest::Approx(79.788456).epsilon(1e-6));
}

TEST_CASE("truncation area bound") {
    CHECK(truncation_area_bound(M_PI / 2.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(truncation_area_bound(1e-6, 1.0) ==
          doctest::Approx(7.9788456e-4).epsilon(1e-6));
    CHECK(truncation_area_bound(1e-6, 0.5) ==
          doctest::Approx(0.5 * 7.9788456e-4).epsilon(1e-6));
}

TEST_CASE("atom counts, times and sizes follow the truncated intensity") {
    Rng rng = Rng::substream(50, 0);
    const int reps = 40000;
    std::uint64_t count = 0, above_4lmin = 0, in_first_half = 0;
    const double l_min = 1.0;
    for (int i = 0; i < reps; ++i) {
        auto atoms = sample_jump_atoms(1.0, l_min, rng);
        count += atoms.size();
        double last_t = -1.0;
        for (const auto& a : atoms) {
            CHECK(a.l >= l_min);
            CHECK(a.t >= 0.0);
            CHECK(a.t <= 1.0);
            CHECK(a.t >= last_t);  // sorted by time
            last_t = a.t;
            if (a.l > 4.0 * l_min) ++above_4lmin;
            if (a.t < 0.5) ++in_first_half;
        }
    }
    double mean = static_cast<double>(count) / reps;
    CHECK(std::abs(mean / std::sqrt(2.0 / M_PI) - 1.0) < 0.02);
    // P(l > 4 l_min | l >= l_min) = sqrt(1/4) = 1/2; times are uniform.
    CHECK(std::abs(static_cast<double>(above_4lmin) / count - 0.5) < 0.01);
    CHECK(std::abs(static_cast<double>(in_first_half) / count - 0.5) < 0.01);
}

TEST_CASE("no atoms means a zero curve") {
    LimitJumpSet jumps;
    jumps.s_max = 1.0;
    jumps.l_min = 1.0;
    auto curve = assemble_limit_density(jumps, 1.0, 2.0 / 3.0, 1.0, -1.0, 0.1, 21);
    for (double v : curve.values) CHECK(v == 0.0);
    CHECK(assemble_limit_value(jumps, 1.0, 2.0 / 3.0, 1.0, 0.0) == 0.0);
}

TEST_CASE("atoms after s do not contribute") {
    auto nu = poisson1_offspring();
    auto f = uniform_step();
    Rng rng = Rng::substream(51, 0);
    LimitJumpSet jumps;
    jumps.s_max = 1.0;
    jumps.l_min = 0.1;
    LimitAtom a;
    a.t = 0.8;
    a.l = 2.0;
    a.ise = ise_density_sample(nu, f, 2000, 0.05, rng);
    jumps.atoms.push_back(a);
    CHECK(assemble_limit_value(jumps, nu.variance, f.variance, 0.5, 0.0) == 0.0);
    CHECK(assemble_limit_value(jumps, nu.variance, f.variance, 0.9, 0.0) > 0.0);
}

TEST_CASE("missing profiles are an error") {
    LimitJumpSet jumps;
    jumps.s_max = 1.0;
    jumps.l_min = 0.1;
    jumps.atoms.push_back(LimitAtom{0.5, 1.0, IseSample{}});
    CHECK_THROWS_AS(assemble_limit_value(jumps, 1.0, 2.0 / 3.0, 1.0, 0.0),
                    MissingIseSample);
}

TEST_CASE("a single atom's curve integrates to l over sigma_nu^2") {
    auto nu = geometric_half_offspring();  // sigma_nu^2 = 2
    auto f = uniform_step();
    Rng rng = Rng::substream(52, 0);
    LimitJumpSet jumps;
    jumps.s_max = 1.0;
    jumps.l_min = 0.1;
    LimitAtom a;
    a.t = 0.3;
    a.l = 2.5;
    a.ise = ise_density_sample(nu, f, 5000, 0.02, rng);
    jumps.atoms.push_back(a);

    // Quadrature grid matched to the rescaled profile so interpolation is
    // exact at the nodes: x = (sigma_F / sigma_nu) l^{1/4} y.
    double rescale = std::sqrt(f.variance / nu.variance) * std::pow(a.l, 0.25);
    double dx = a.ise.grid_step * rescale;
    std::size_t count = a.ise.values.size();
    double x0 = -static_cast<double>(a.ise.center) * dx;
    auto curve = assemble_limit_density(jumps, nu.variance, f.variance, 1.0, x0, dx,
                                        count);
    double riemann = 0.0;
    for (double v : curve.values) riemann += v;
    riemann *= dx;
    CHECK(riemann == doctest::Approx(a.l / nu.variance).epsilon(1e-9));
}
