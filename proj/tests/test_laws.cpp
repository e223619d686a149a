#include <doctest.h>

#include <cmath>

#include "brw/errors.hpp"
#include "brw/laws.hpp"
#include "brw/rng.hpp"

using namespace brw;

TEST_CASE("offspring presets are critical with the right variance") {
    auto p = poisson1_offspring();
    CHECK(p.mean == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.variance == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(p.is_poisson1);

    auto g = geometric_half_offspring();
    CHECK(g.mean == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.variance == doctest::Approx(2.0).epsilon(1e-9));
    CHECK_FALSE(g.is_poisson1);

    auto b = binary_offspring();
    CHECK(b.mean == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.variance == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("step presets are centered with span one") {
    auto u = uniform_step();
    CHECK(u.variance == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    auto l = lazy_step();
    CHECK(l.variance == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("validation rejects malformed laws") {
    CHECK_THROWS_AS(validate_offspring_law({{0, 0.4}, {2, 0.4}}), NotAProbability);
    CHECK_THROWS_AS(validate_offspring_law({{0, 0.3}, {2, 0.7}}), NotCritical);
    CHECK_THROWS_AS(validate_offspring_law({{1, 1.0}}), ZeroVariance);
    CHECK_THROWS_AS(validate_step_law({{0, 0.5}, {1, 0.5}}), NonzeroMean);
    CHECK_THROWS_AS(validate_step_law({{-2, 0.25}, {0, 0.5}, {2, 0.25}}), SpanNotOne);
    CHECK_THROWS_AS(validate_step_law({{0, 1.0}}), ZeroVariance);
}

TEST_CASE("preset lookup by tag") {
    CHECK(offspring_preset("geometric_half").variance == doctest::Approx(2.0));
    CHECK(step_preset("lazy").variance == doctest::Approx(0.5));
    CHECK_THROWS_AS(offspring_preset("nope"), ConfigError);
    CHECK_THROWS_AS(step_preset("nope"), ConfigError);
}

TEST_CASE("alias sampler reproduces the pmf") {
    auto g = geometric_half_offspring();
    Rng rng = Rng::substream(11, 0);
    const int n = 400000;
    std::vector<std::uint64_t> counts(16, 0);
    for (int i = 0; i < n; ++i) {
        auto k = g.sample(rng);
        if (k < counts.size()) ++counts[k];
    }
    for (std::size_t k = 0; k < 8; ++k) {
        double expected = std::pow(0.5, static_cast<double>(k) + 1.0);
        double freq = static_cast<double>(counts[k]) / n;
        CHECK(std::abs(freq - expected) < 5.0 * std::sqrt(expected / n) + 1e-4);
    }
}
