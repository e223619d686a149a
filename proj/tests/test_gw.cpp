#include <doctest.h>

#include <cmath>

#include "brw/errors.hpp"
#include "brw/gw.hpp"

using namespace brw;

TEST_CASE("tree sampling is deterministic per substream") {
    auto nu = poisson1_offspring();
    auto f = uniform_step();
    Rng a = Rng::substream(5, 1), b = Rng::substream(5, 1);
    CHECK(sample_tree_occupation(nu, f, a, 1000000) ==
          sample_tree_occupation(nu, f, b, 1000000));
}

TEST_CASE("occupation measure counts every vertex once") {
    auto nu = geometric_half_offspring();
    auto f = lazy_step();
    Rng rng = Rng::substream(6, 0);
    for (int i = 0; i < 200; ++i) {
        auto occ = sample_tree_occupation(nu, f, rng, 1000000);
        std::uint64_t sum = 0;
        for (auto c : occ.dense()) sum += c;
        CHECK(sum == occ.total());
        CHECK(occ.count_at(occ.min_site()) > 0);
        CHECK(occ.count_at(occ.max_site()) > 0);
        CHECK(occ.count_at(occ.min_site() - 1) == 0);
    }
}

TEST_CASE("summary agrees with the full occupation on the same stream") {
    auto nu = poisson1_offspring();
    auto f = uniform_step();
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng a = Rng::substream(7, i), b = Rng::substream(7, i);
        auto occ = sample_tree_occupation(nu, f, a, 1000000);
        auto sum = sample_tree_summary(nu, f, b, 1000000);
        CHECK(sum.total == occ.total());
        CHECK(sum.zero_count == occ.count_at(0));
        CHECK(sum.height == occ.height());
        CHECK_FALSE(sum.capped);
    }
}

TEST_CASE("binary offspring trees have odd size") {
    auto nu = binary_offspring();
    Rng rng = Rng::substream(8, 0);
    for (int i = 0; i < 2000; ++i) {
        auto t = sample_total_progeny(nu, rng, 1000001);
        if (!t.capped) CHECK(t.total % 2 == 1);
    }
}

TEST_CASE("vertex cap throws with the partial count") {
    auto nu = binary_offspring();
    auto f = uniform_step();
    bool hit = false;
    for (std::uint64_t i = 0; i < 64 && !hit; ++i) {
        Rng rng = Rng::substream(9, i);
        try {
            sample_tree_occupation(nu, f, rng, 2);
        } catch (const VertexCapExceeded& e) {
            CHECK(e.partial_total >= 2);
            hit = true;
        }
    }
    CHECK(hit);
}

TEST_CASE("survival probability: one binary generation is a fair coin") {
    auto nu = binary_offspring();
    Rng rng = Rng::substream(10, 0);
    double p1 = survival_probability_estimate(nu, 1, 40000, rng);
    CHECK(std::abs(p1 - 0.5) < 0.01);
    double p4 = survival_probability_estimate(nu, 4, 40000, rng);
    CHECK(p4 < p1);
    CHECK_THROWS_AS(survival_probability_estimate(nu, 0, 10, rng), Error);
}
