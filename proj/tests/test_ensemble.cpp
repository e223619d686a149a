#include <doctest.h>

#include <cmath>

#include "brw/ensemble.hpp"
#include "brw/errors.hpp"
#include "brw/gw.hpp"

using namespace brw;

namespace {

std::vector<OccupationMeasure> sample_trees(std::uint64_t n, std::uint64_t seed) {
    auto nu = poisson1_offspring();
    auto f = uniform_step();
    std::vector<OccupationMeasure> trees;
    std::uint64_t stream = 0;
    while (trees.size() < n) {
        Rng rng = Rng::substream(seed, stream++);
        try {
            trees.push_back(sample_tree_occupation(nu, f, rng, 1000000));
        } catch (const VertexCapExceeded&) {
        }
    }
    return trees;
}

} // namespace

TEST_CASE("empty ensembles are rejected") {
    CHECK_THROWS_AS(build_ensemble({}, 10), EmptyEnsemble);
}

TEST_CASE("prefix sums and the area process agree") {
    const std::uint64_t n = 50;
    auto trees = sample_trees(n, 40);
    std::vector<std::uint64_t> totals;
    for (const auto& t : trees) totals.push_back(t.total());
    auto ens = build_ensemble(std::move(trees), n);

    CHECK(ens.cumulative_total(0) == 0);
    std::uint64_t runner = 0;
    for (std::size_t m = 1; m <= n; ++m) {
        runner += totals[m - 1];
        CHECK(ens.cumulative_total(m) == runner);
    }
    double n_d = static_cast<double>(n);
    CHECK(ens.area_process(1.0) == static_cast<double>(runner) / (n_d * n_d));
    CHECK(ens.area_process(0.0) == 0.0);
    CHECK_THROWS_AS(ens.trees_at(1.5), NotEnoughTrees);
}

TEST_CASE("density at zero matches the exact lattice count") {
    const std::uint64_t n = 50;
    auto trees = sample_trees(n, 41);
    std::uint64_t zeros = 0;
    for (const auto& t : trees) zeros += t.count_at(0);
    auto ens = build_ensemble(std::move(trees), n);

    double expected = static_cast<double>(zeros) * std::pow(static_cast<double>(n), -1.5);
    CHECK(ens.zero_process(1.0) == expected);
    auto curve = ens.eval_density(1.0);
    bool found = false;
    for (std::size_t i = 0; i < curve.size(); ++i)
        if (std::abs(curve.x(i)) < 1e-12) {
            CHECK(curve.values[i] == doctest::Approx(expected).epsilon(1e-15));
            found = true;
        }
    CHECK(found);
}

TEST_CASE("grids must sit on the lattice") {
    auto ens = build_ensemble(sample_trees(16, 42), 16);
    double dx = 1.0 / 4.0;  // lattice spacing for N = 16
    CHECK_NOTHROW(ens.eval_density(1.0, -1.0, dx, 9));
    CHECK_THROWS_AS(ens.eval_density(1.0, 0.0, 0.3, 5), GridMisaligned);
    CHECK_THROWS_AS(ens.eval_density(1.0, 0.1, dx, 5), GridMisaligned);
}

TEST_CASE("density is monotone in s and flat between tree arrivals") {
    const std::uint64_t n = 20;
    auto ens = build_ensemble(sample_trees(n, 43), n);
    auto full = ens.eval_density(1.0);
    std::vector<double> prev(full.size(), 0.0);
    for (double s : {0.0, 0.3, 0.65, 1.0}) {
        auto c = ens.eval_density(s, full.x0, full.dx, full.size());
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(c.values[i] >= prev[i]);
        prev = c.values;
    }
    // s values with the same floor(sN) give identical curves.
    CHECK(ens.eval_density(0.51).values == ens.eval_density(0.549).values);
}

TEST_CASE("ordered jumps rank trees by area, ties to the earlier tree") {
    std::vector<OccupationMeasure> trees;
    trees.emplace_back(std::vector<std::uint64_t>{3}, 0, 3, 0);
    trees.emplace_back(std::vector<std::uint64_t>{7}, 0, 7, 0);
    trees.emplace_back(std::vector<std::uint64_t>{3}, 0, 3, 0);
    trees.emplace_back(std::vector<std::uint64_t>{1}, 0, 1, 0);
    auto ens = build_ensemble(std::move(trees), 4);
    CHECK(ens.ordered_jumps(1.0, 0).empty());
    auto jumps = ens.ordered_jumps(1.0, 3);
    REQUIRE(jumps.size() == 3);
    CHECK(jumps[0].tree_index == 2);
    CHECK(jumps[0].rank == 1);
    CHECK(jumps[0].area == 7.0 / 16.0);
    CHECK(jumps[1].tree_index == 1);
    CHECK(jumps[2].tree_index == 3);
}

TEST_CASE("curve integral approximates the area of the jump") {
    const std::uint64_t n = 30;
    auto ens = build_ensemble(sample_trees(n, 44), n);
    auto jumps = ens.ordered_jumps(1.0, 1);
    REQUIRE(jumps.size() == 1);
    // Riemann sum over the lattice grid: dx * sum(values) = area exactly.
    double sum = 0.0;
    for (double v : jumps[0].curve.values) sum += v;
    CHECK(sum * jumps[0].curve.dx == doctest::Approx(jumps[0].area).epsilon(1e-12));
}
