#include <doctest.h>

#include <cmath>

#include "brw/ise.hpp"

using namespace brw;

TEST_CASE("gamma normalization constant") {
    CHECK(ise_gamma(1.0, 2.0 / 3.0) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
    CHECK(ise_gamma(2.0, 0.5) ==
          doctest::Approx(std::pow(2.0, 0.25) / std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("density sample integrates to one on the snapped grid") {
    auto nu = poisson1_offspring();
    auto f = uniform_step();
    Rng rng = Rng::substream(30, 0);
    for (std::uint64_t n : {50, 500, 20000}) {
        auto s = ise_density_sample(nu, f, n, 0.01, rng);
        CHECK(s.source_size == n);
        CHECK(s.mass() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(s.values.front() == 0.0);
        CHECK(s.values.back() == 0.0);
    }
}

TEST_CASE("grid step snaps to the lattice image spacing") {
    auto nu = poisson1_offspring();
    auto f = uniform_step();
    Rng rng = Rng::substream(31, 0);
    const std::uint64_t n = 4096;
    double delta = ise_gamma(nu.variance, f.variance) * std::pow(static_cast<double>(n), -0.25);
    auto fine = ise_density_sample(nu, f, n, delta / 10.0, rng);
    CHECK(fine.grid_step == doctest::Approx(delta).epsilon(1e-12));
    auto coarse = ise_density_sample(nu, f, n, 3.4 * delta, rng);
    CHECK(coarse.grid_step == doctest::Approx(3.0 * delta).epsilon(1e-12));
}

TEST_CASE("value_at interpolates linearly and vanishes off-grid") {
    IseSample s;
    s.grid_step = 0.5;
    s.values = {0.0, 2.0, 4.0, 0.0};
    s.center = 1;
    CHECK(s.value_at(0.0) == doctest::Approx(2.0));
    CHECK(s.value_at(0.25) == doctest::Approx(3.0));
    CHECK(s.value_at(10.0) == 0.0);
    CHECK(s.value_at(-10.0) == 0.0);
}

TEST_CASE("profile mean is near zero by symmetry") {
    auto nu = poisson1_offspring();
    auto f = uniform_step();
    Rng rng = Rng::substream(32, 0);
    double mean_sum = 0.0;
    const int reps = 400;
    for (int i = 0; i < reps; ++i) {
        auto s = ise_density_sample(nu, f, 2000, 0.05, rng);
        double m = 0.0;
        for (std::size_t j = 0; j < s.values.size(); ++j) {
            double y = (static_cast<double>(j) - static_cast<double>(s.center)) *
                       s.grid_step;
            m += y * s.values[j] * s.grid_step;
        }
        mean_sum += m;
    }
    CHECK(std::abs(mean_sum / reps) < 0.03);
}
