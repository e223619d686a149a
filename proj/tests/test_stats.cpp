#include <doctest.h>

#include <cmath>
#include <vector>

#include "brw/errors.hpp"
#include "brw/rng.hpp"
#include "brw/stats.hpp"

using namespace brw;

TEST_CASE("hill estimator recovers exact Pareto indices") {
    Rng rng = Rng::substream(60, 1);
    for (double alpha : {0.5, 2.0 / 3.0, 1.5}) {
        const std::size_t n = 50000;
        std::vector<double> xs(n);
        for (auto& x : xs) x = std::pow(rng.uniform_pos(), -1.0 / alpha);
        auto est = hill_estimator(xs, hill_default_k(n));
        CHECK(std::abs(est.alpha_hat / alpha - 1.0) < 0.1);
        CHECK(est.ci_low < alpha);
        CHECK(alpha < est.ci_high);
        CHECK(est.ci_low < est.alpha_hat);
        CHECK(est.alpha_hat < est.ci_high);
    }
}

TEST_CASE("hill estimator rejects unusable input") {
    CHECK_THROWS_AS(hill_estimator({}, 1), TooFewSamples);
    CHECK_THROWS_AS(hill_estimator({1.0, 2.0}, 5), TooFewSamples);
    CHECK_THROWS_AS(hill_estimator({-1.0, 2.0, 3.0, 4.0}, 2), NonPositiveSample);
    CHECK_THROWS_AS(hill_estimator({2.0, 2.0, 2.0, 2.0}, 2), DegenerateTail);
}

TEST_CASE("default order statistics count") {
    CHECK(hill_default_k(1000) == static_cast<std::size_t>(
                                      std::ceil(std::pow(1000.0, 0.6))));
    CHECK(hill_default_k(100000) >= 1000);
}

TEST_CASE("theta cdf closed-form values") {
    // 2(1 - Phi(1)) at s = sigma_nu^2 = t = 1.
    CHECK(levy_theta_cdf(1.0, 1.0, 1.0) == doctest::Approx(0.31731051).epsilon(1e-6));
    CHECK(levy_theta_cdf(1.0, 1.0, 0.0) == 0.0);
    CHECK(levy_theta_cdf(1.0, 1.0, 1e12) == doctest::Approx(1.0).epsilon(1e-5));
    // Scaling: t -> t / sigma_nu^2.
    CHECK(levy_theta_cdf(1.0, 2.0, 0.5) ==
          doctest::Approx(levy_theta_cdf(1.0, 1.0, 1.0)).epsilon(1e-12));
    // Median of theta_1 at unit variance.
    CHECK(levy_theta_quantile(1.0, 1.0, 0.5) == doctest::Approx(2.1980).epsilon(1e-3));
    CHECK(levy_theta_cdf(1.0, 1.0, levy_theta_quantile(1.0, 1.0, 0.9)) ==
          doctest::Approx(0.9).epsilon(1e-9));
}

TEST_CASE("theta cdf matches a random-walk local-time simulation") {
    // Time of the L-th return to zero of a simple random walk, divided by
    // L^2, converges to the inverse local time whose cdf is levy_theta_cdf
    // with s = sigma_nu^2 = 1.
    Rng rng = Rng::substream(61, 0);
    const int reps = 500;
    const std::uint64_t L = 100;
    const std::uint64_t step_cap = 20000000;
    std::vector<double> samples(reps);
    for (int r = 0; r < reps; ++r) {
        std::int64_t pos = 0;
        std::uint64_t visits = 0, steps = 0;
        while (visits < L && steps < step_cap) {
            pos += (rng.next() & 1) ? 1 : -1;
            ++steps;
            if (pos == 0) ++visits;
        }
        samples[r] = static_cast<double>(steps) / static_cast<double>(L * L);
    }
    auto ks = ks_one_sample(samples, [](double t) {
        return levy_theta_cdf(1.0, 1.0, t);
    });
    CHECK(ks.d_stat < 0.08);
}

TEST_CASE("kolmogorov tail reference points") {
    CHECK(kolmogorov_tail(1.3581) == doctest::Approx(0.05).epsilon(1e-2));
    CHECK(kolmogorov_tail(1.6276) == doctest::Approx(0.01).epsilon(1e-2));
    CHECK(kolmogorov_tail(0.05) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("ks one-sample accepts its own null") {
    Rng rng = Rng::substream(62, 0);
    std::vector<double> xs(2000);
    for (auto& x : xs) x = rng.uniform();
    auto ks = ks_one_sample(xs, [](double u) {
        return u < 0.0 ? 0.0 : (u > 1.0 ? 1.0 : u);
    });
    CHECK(ks.p_value > 0.05);
    CHECK(ks.d_stat < 0.03);
}

TEST_CASE("ks two-sample separates shifted samples and accepts equal ones") {
    Rng rng = Rng::substream(63, 0);
    std::vector<double> a(1500), b(1500), c(1500);
    for (auto& x : a) x = rng.uniform();
    for (auto& x : b) x = rng.uniform();
    for (auto& x : c) x = rng.uniform() + 0.3;
    auto same = ks_two_sample(a, b);
    CHECK(same.p_value > 0.05);
    auto diff = ks_two_sample(a, c);
    CHECK(diff.d_stat > 0.25);
    CHECK(diff.p_value < 1e-6);
    CHECK_THROWS_AS(ks_two_sample({}, a), EmptySample);
}

TEST_CASE("chi-squared survival function reference points") {
    CHECK(chi_squared_sf(0.0, 3.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(chi_squared_sf(3.841, 1.0) == doctest::Approx(0.05).epsilon(2e-3));
    CHECK(chi_squared_sf(2.706, 1.0) == doctest::Approx(0.10).epsilon(2e-3));
    CHECK(chi_squared_sf(9.488, 4.0) == doctest::Approx(0.05).epsilon(2e-3));
}

TEST_CASE("normal cdf symmetry") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447).epsilon(1e-6));
    CHECK(normal_cdf(-1.0) + normal_cdf(1.0) == doctest::Approx(1.0).epsilon(1e-12));
}
