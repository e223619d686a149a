#include <doctest.h>

#include <cmath>
#include <set>

#include "brw/rng.hpp"

using namespace brw;

TEST_CASE("stream seeds are deterministic and distinct") {
    CHECK(stream_seed(42, 0) == stream_seed(42, 0));
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(stream_seed(42, i));
    CHECK(seen.size() == 1000);
    CHECK(stream_seed(42, 0) != stream_seed(43, 0));
}

TEST_CASE("substreams reproduce exactly") {
    Rng a = Rng::substream(7, 3);
    Rng b = Rng::substream(7, 3);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng c = Rng::substream(7, 4);
    CHECK(a.next() != c.next());
}

TEST_CASE("uniform draws stay in range") {
    Rng rng = Rng::substream(1, 0);
    for (int i = 0; i < 10000; ++i) {
        double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(rng.uniform_pos() > 0.0);
        CHECK(rng.uniform_below(7) < 7);
    }
}

TEST_CASE("uniform_below is close to uniform") {
    Rng rng = Rng::substream(2, 0);
    std::uint64_t counts[5] = {0, 0, 0, 0, 0};
    const int n = 100000;
    for (int i = 0; i < n; ++i) ++counts[rng.uniform_below(5)];
    for (auto c : counts)
        CHECK(std::abs(static_cast<double>(c) / n - 0.2) < 0.01);
}

TEST_CASE("poisson sampler matches mean and variance") {
    Rng rng = Rng::substream(3, 0);
    for (double lambda : {0.8, 4.0, 120.0}) {
        const int n = 200000;
        double sum = 0.0, sumsq = 0.0;
        for (int i = 0; i < n; ++i) {
            auto k = static_cast<double>(poisson(rng, lambda));
            sum += k;
            sumsq += k * k;
        }
        double mean = sum / n;
        double var = sumsq / n - mean * mean;
        CHECK(std::abs(mean - lambda) < 4.0 * std::sqrt(lambda / n) + 1e-9);
        CHECK(std::abs(var / lambda - 1.0) < 0.05);
    }
}
