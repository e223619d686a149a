#include "brw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>

#include <json.hpp>

#include "brw/conditioned.hpp"
#include "brw/ensemble.hpp"
#include "brw/errors.hpp"
#include "brw/gw.hpp"
#include "brw/io.hpp"
#include "brw/ise.hpp"
#include "brw/limit.hpp"
#include "brw/parallel.hpp"
#include "brw/stats.hpp"
#include "brw/version.hpp"

namespace brw {

using nlohmann::json;

bool StatReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::string StatReport::to_json() const {
    json j;
    j["tool_version"] = tool_version;
    j["master_seed"] = master_seed;
    json arr = json::array();
    for (const auto& c : checks) {
        json jc;
        jc["check_id"] = c.check_id;
        jc["paper_ref"] = c.paper_ref;
        jc["statistic"] = c.statistic;
        jc["threshold"] = json::array({c.threshold_low, c.threshold_high});
        jc["pass"] = c.pass;
        jc["seed"] = c.seed;
        jc["n_used"] = c.n_used;
        jc["wall_time_s"] = c.wall_time_s;
        if (!c.warnings.empty()) jc["warnings"] = c.warnings;
        arr.push_back(jc);
    }
    j["checks"] = arr;
    return j.dump(2) + "\n";
}

std::string strip_timing(const std::string& report_json) {
    json j = json::parse(report_json);
    if (j.contains("checks"))
        for (auto& c : j["checks"]) c.erase("wall_time_s");
    return j.dump(2) + "\n";
}

namespace {

constexpr std::uint64_t kCheckStride = 1ULL << 40;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

CheckResult make_check(std::string id, std::string claim, double stat, double lo,
                       double hi, std::uint64_t seed, std::uint64_t n_used,
                       double secs, std::vector<std::string> warnings = {}) {
    CheckResult c;
    c.check_id = std::move(id);
    c.paper_ref = std::move(claim);
    c.statistic = stat;
    c.threshold_low = lo;
    c.threshold_high = hi;
    c.pass = warnings.empty() && stat >= lo && stat <= hi;
    c.seed = seed;
    c.n_used = n_used;
    c.wall_time_s = secs;
    c.warnings = std::move(warnings);
    return c;
}

// Parallel survival estimate: trials split over fixed chunks so the thread
// count cannot change the result.
double survival_parallel(const OffspringLaw& nu, std::uint32_t gen,
                         std::uint64_t trials, std::uint64_t master,
                         std::uint64_t check_index, unsigned threads) {
    const std::size_t chunks = 64;
    std::vector<double> fractions(chunks, 0.0);
    std::vector<std::uint64_t> counts(chunks, 0);
    parallel_for(chunks, threads, [&](std::size_t i) {
        std::uint64_t lo = trials * i / chunks;
        std::uint64_t hi = trials * (i + 1) / chunks;
        if (hi == lo) return;
        Rng rng = Rng::substream(master, check_index * kCheckStride + i);
        fractions[i] = survival_probability_estimate(nu, gen, hi - lo, rng);
        counts[i] = hi - lo;
    });
    double hits = 0.0;
    for (std::size_t i = 0; i < chunks; ++i)
        hits += fractions[i] * static_cast<double>(counts[i]);
    return hits / static_cast<double>(trials);
}

// Exact P(Z_n > 0) by iterating the generating function of the law.
double survival_exact(const OffspringLaw& nu, std::uint32_t gen) {
    double q = 0.0;  // extinction by generation g
    for (std::uint32_t g = 0; g < gen; ++g) {
        double next = 0.0;
        for (const auto& [k, p] : nu.pmf) next += p * std::pow(q, static_cast<double>(k));
        q = next;
    }
    return 1.0 - q;
}

// Per-replicate ensemble reductions used by several checks.
struct EnsembleReduction {
    double theta = 0.0;        // A_N / N^2
    double zero_value = 0.0;   // I_1 = N^{-3/2} sum X_i(0)
    std::uint64_t largest_total = 0;
    std::uint64_t largest_zero_count = 0;
    std::uint64_t capped_trees = 0;
};

EnsembleReduction reduce_ensemble(const OffspringLaw& nu, const StepLaw& f,
                                  std::uint64_t tree_count, std::uint64_t cap,
                                  Rng& rng) {
    EnsembleReduction out;
    std::uint64_t total_sum = 0, zero_sum = 0;
    for (std::uint64_t i = 0; i < tree_count; ++i) {
        TreeSummary t = sample_tree_summary(nu, f, rng, cap);
        total_sum += t.total;
        zero_sum += t.zero_count;
        if (t.capped) ++out.capped_trees;
        if (t.total > out.largest_total) {
            out.largest_total = t.total;
            out.largest_zero_count = t.zero_count;
        }
    }
    double n = static_cast<double>(tree_count);
    out.theta = static_cast<double>(total_sum) / (n * n);
    out.zero_value = static_cast<double>(zero_sum) * std::pow(n, -1.5);
    return out;
}

std::vector<std::string> budget_warning(bool ok, const std::string& what) {
    if (ok) return {};
    return {"budget below minimum for " + what};
}

} // namespace

StatReport verify_suite(const RunConfig& config) {
    const VerifyBudget& budget = config.verify;
    if (budget.theta_replicates < 2 || budget.scaling_replicates < 2 ||
        budget.dual_replicates < 2 || budget.shape_replicates < 2)
        throw BudgetTooSmall("verification requires at least 2 replicates per arm");

    const OffspringLaw nu = config.offspring.make_offspring();
    const StepLaw f = config.step.make_step();
    const double sigma_nu_sq = nu.variance;
    const std::uint64_t master = config.master_seed;
    const unsigned threads = std::max(1u, config.threads);
    const std::uint64_t cap = config.vertex_cap;

    StatReport report;
    report.tool_version = kToolVersion;
    report.master_seed = master;

    // --- 1. Extinction-tail asymptotics: n P(zeta > n) -> 2 / sigma_nu^2.
    {
        Timer t;
        const auto gen = budget.survival_generation;
        double p_hat = survival_parallel(nu, gen, budget.survival_trials, master, 1,
                                         threads);
        report.checks.push_back(make_check(
            "1a-extinction-tail", "critical extinction-time tail, offspring law " + nu.name,
            static_cast<double>(gen) * p_hat, 2.0 / sigma_nu_sq * 0.85,
            2.0 / sigma_nu_sq * 1.15, stream_seed(master, 1 * kCheckStride),
            budget.survival_trials, t.seconds(),
            budget_warning(budget.survival_trials >= 10000, "extinction-tail trials")));
    }
    {
        Timer t;
        const auto gen = budget.survival_generation;
        const OffspringLaw geo = geometric_half_offspring();
        double p_hat = survival_parallel(geo, gen, budget.survival_trials, master, 2,
                                         threads);
        report.checks.push_back(make_check(
            "1b-extinction-tail-geometric",
            "critical extinction-time tail, geometric(1/2) offspring",
            static_cast<double>(gen) * p_hat, 2.0 / geo.variance * 0.85,
            2.0 / geo.variance * 1.15, stream_seed(master, 2 * kCheckStride),
            budget.survival_trials, t.seconds(),
            budget_warning(budget.survival_trials >= 10000, "extinction-tail trials")));
        // Cross-check against the exact generating-function recursion.
        double exact = survival_exact(geo, gen);
        double se = std::sqrt(exact * (1.0 - exact) /
                              static_cast<double>(budget.survival_trials));
        report.checks.push_back(make_check(
            "1c-extinction-exact-recursion",
            "survival estimate vs exact pgf iteration, geometric(1/2)",
            std::abs(p_hat - exact) / se, 0.0, 5.0,
            stream_seed(master, 2 * kCheckStride), budget.survival_trials, t.seconds()));
    }

    // --- 2. Total-area law: theta^N_1 vs the inverse-local-time CDF.
    {
        Timer t;
        const std::uint64_t reps = budget.theta_replicates;
        const std::uint64_t n_trees = budget.theta_ensemble;
        std::vector<double> thetas(reps);
        parallel_for(reps, threads, [&](std::size_t r) {
            Rng rng = Rng::substream(master, 3 * kCheckStride + r);
            std::uint64_t sum = 0;
            for (std::uint64_t i = 0; i < n_trees; ++i)
                sum += sample_total_progeny(nu, rng, cap).total;
            thetas[r] = static_cast<double>(sum) /
                        (static_cast<double>(n_trees) * static_cast<double>(n_trees));
        });
        auto ks = ks_one_sample(thetas, [&](double x) {
            return levy_theta_cdf(1.0, sigma_nu_sq, x);
        });
        report.checks.push_back(make_check(
            "2-theta-law", "total rescaled occupation density is stable-1/2",
            ks.d_stat, 0.0, 0.06, stream_seed(master, 3 * kCheckStride), reps,
            t.seconds(),
            budget_warning(reps >= 200 && n_trees >= 100, "theta-law replicates")));
    }

    // --- 3. Stable indices via Hill on pooled jump sizes.
    {
        Timer t;
        const std::uint64_t ensembles = budget.hill_ensembles;
        const std::uint64_t n_trees = budget.hill_ensemble_n;
        std::vector<std::vector<double>> theta_jumps(ensembles), zero_jumps(ensembles);
        const double n_scale = static_cast<double>(n_trees);
        parallel_for(ensembles, threads, [&](std::size_t e) {
            Rng rng = Rng::substream(master, 4 * kCheckStride + e);
            theta_jumps[e].reserve(n_trees);
            zero_jumps[e].reserve(n_trees);
            for (std::uint64_t i = 0; i < n_trees; ++i) {
                TreeSummary s = sample_tree_summary(nu, f, rng, cap);
                theta_jumps[e].push_back(static_cast<double>(s.total) /
                                         (n_scale * n_scale));
                zero_jumps[e].push_back(static_cast<double>(s.zero_count) *
                                        std::pow(n_scale, -1.5));
            }
        });
        std::vector<double> pooled_theta, pooled_zero;
        for (std::size_t e = 0; e < ensembles; ++e) {
            pooled_theta.insert(pooled_theta.end(), theta_jumps[e].begin(),
                                theta_jumps[e].end());
            pooled_zero.insert(pooled_zero.end(), zero_jumps[e].begin(),
                               zero_jumps[e].end());
        }
        auto warn = budget_warning(ensembles >= 5 && n_trees >= 200, "hill ensembles");
        std::size_t k = hill_default_k(pooled_theta.size());
        auto est_theta = hill_estimator(pooled_theta, k);
        report.checks.push_back(make_check(
            "3a-stable-index-theta", "area-process jumps: stable exponent 1/2",
            est_theta.alpha_hat, 0.44, 0.56, stream_seed(master, 4 * kCheckStride),
            pooled_theta.size(), t.seconds(), warn));
        auto est_zero = hill_estimator(pooled_zero, k);
        report.checks.push_back(make_check(
            "3b-stable-index-zero", "occupation density at zero: stable exponent 2/3",
            est_zero.alpha_hat, 0.57, 0.77, stream_seed(master, 4 * kCheckStride),
            pooled_zero.size(), t.seconds(), warn));
    }

    // --- 4. Scaling relation at a point: 4^{3/2} g_{1/4}(0) =d g_1(0).
    {
        Timer t;
        const std::uint64_t reps = budget.scaling_replicates;
        const std::uint64_t n_full = budget.scaling_ensemble;
        const std::uint64_t n_quarter = n_full / 4;
        std::vector<double> quarter(reps), full(reps);
        parallel_for(2 * reps, threads, [&](std::size_t task) {
            Rng rng = Rng::substream(master, 5 * kCheckStride + task);
            bool is_quarter = task < reps;
            std::uint64_t n_trees = is_quarter ? n_quarter : n_full;
            std::uint64_t zero_sum = 0;
            for (std::uint64_t i = 0; i < n_trees; ++i)
                zero_sum += sample_tree_summary(nu, f, rng, cap).zero_count;
            double value = static_cast<double>(zero_sum) *
                           std::pow(static_cast<double>(n_full), -1.5);
            if (is_quarter)
                quarter[task] = value * 8.0;  // 4^{3/2}
            else
                full[task - reps] = value;
        });
        auto ks = ks_two_sample(quarter, full);
        report.checks.push_back(make_check(
            "4-scaling-relation", "pointwise scaling g_s(x) =d s^{3/2} g_1(x/sqrt(s))",
            ks.d_stat, 0.0, 0.06, stream_seed(master, 5 * kCheckStride), 2 * reps,
            t.seconds(),
            budget_warning(reps >= 200 && n_full >= 100, "scaling replicates")));
    }

    // --- 5. Dual-path check: assembled limit g_1(0) vs ensemble I^N_1.
    {
        Timer t;
        const std::uint64_t reps = budget.dual_replicates;
        const std::uint64_t n_trees = budget.dual_ensemble;
        std::vector<double> ensemble_values(reps), limit_values(reps);
        parallel_for(2 * reps, threads, [&](std::size_t task) {
            Rng rng = Rng::substream(master, 6 * kCheckStride + task);
            if (task < reps) {
                std::uint64_t zero_sum = 0;
                for (std::uint64_t i = 0; i < n_trees; ++i)
                    zero_sum += sample_tree_summary(nu, f, rng, cap).zero_count;
                ensemble_values[task] = static_cast<double>(zero_sum) *
                                        std::pow(static_cast<double>(n_trees), -1.5);
            } else {
                LimitJumpSet jumps;
                jumps.s_max = 1.0;
                jumps.l_min = config.l_min;
                jumps.atoms = sample_jump_atoms(1.0, config.l_min, rng);
                for (auto& atom : jumps.atoms)
                    atom.ise = ise_density_sample(nu, f, config.n_ise, 0.05, rng);
                limit_values[task - reps] =
                    assemble_limit_value(jumps, sigma_nu_sq, f.variance, 1.0, 0.0);
            }
        });
        auto ks = ks_two_sample(ensemble_values, limit_values);
        report.checks.push_back(make_check(
            "5-dual-path-zero-law",
            "jump point-process representation matches the ensemble at x = 0",
            ks.d_stat, 0.0, 0.08, stream_seed(master, 6 * kCheckStride), 2 * reps,
            t.seconds(),
            budget_warning(reps >= 200 && n_trees >= 200 && config.n_ise >= 1000,
                           "dual-path replicates")));
    }

    // --- 6. Largest-jump profile vs the conditioned-tree oracle at x = 0.
    {
        Timer t;
        const std::uint64_t reps = budget.shape_replicates;
        const std::uint64_t n_trees = budget.shape_ensemble;
        std::vector<double> jump_values(reps), oracle_values(reps);
        parallel_for(reps, threads, [&](std::size_t r) {
            Rng rng = Rng::substream(master, 7 * kCheckStride + r);
            EnsembleReduction red = reduce_ensemble(nu, f, n_trees, cap, rng);
            // J^N_1(|J|^{1/4} x) / |J|^{3/4} at x = 0; N cancels exactly.
            jump_values[r] = static_cast<double>(red.largest_zero_count) *
                             std::pow(static_cast<double>(red.largest_total), -0.75);
            IseSample ise = ise_density_sample(nu, f, red.largest_total, 0.05, rng);
            double gamma = ise_gamma(sigma_nu_sq, f.variance);
            oracle_values[r] = gamma * ise.value_at(0.0);
        });
        auto ks = ks_two_sample(jump_values, oracle_values);
        report.checks.push_back(make_check(
            "6-ise-jump-shape", "rescaled largest jump converges to an ISE density",
            ks.d_stat, 0.0, 0.1, stream_seed(master, 7 * kCheckStride), reps,
            t.seconds(),
            budget_warning(reps >= 100 && n_trees >= 50, "jump-shape replicates")));
    }

    // --- 7. Exact per-realization invariants.
    {
        Timer t;
        Rng rng = Rng::substream(master, 8 * kCheckStride);
        const std::uint64_t n_scale = 64;
        std::vector<OccupationMeasure> trees;
        std::uint64_t attempt = 0;
        while (trees.size() < n_scale) {
            Rng tree_rng = Rng::substream(master, 8 * kCheckStride + 1 + attempt);
            ++attempt;
            try {
                trees.push_back(sample_tree_occupation(nu, f, tree_rng, 1000000));
            } catch (const VertexCapExceeded&) {
                // retry with the next substream
            }
        }
        auto ens = build_ensemble(std::move(trees), n_scale);

        double violation = 0.0;
        DensityCurve g_full = ens.eval_density(1.0);
        // Monotonicity in s, on the common full-support grid.
        DensityCurve prev = ens.eval_density(0.0, g_full.x0, g_full.dx, g_full.size());
        for (double s : {0.25, 0.5, 0.75, 1.0}) {
            DensityCurve cur = ens.eval_density(s, g_full.x0, g_full.dx, g_full.size());
            for (std::size_t i = 0; i < cur.size(); ++i)
                violation = std::max(violation, prev.values[i] - cur.values[i]);
            prev = std::move(cur);
        }
        // Pure-jump reconstruction: summing increments recovers g_1 exactly.
        std::vector<double> rebuilt(g_full.size(), 0.0);
        DensityCurve last = ens.eval_density(0.0, g_full.x0, g_full.dx, g_full.size());
        for (std::uint64_t k = 1; k <= n_scale; ++k) {
            DensityCurve cur =
                ens.eval_density(static_cast<double>(k) / static_cast<double>(n_scale),
                                 g_full.x0, g_full.dx, g_full.size());
            for (std::size_t i = 0; i < rebuilt.size(); ++i)
                rebuilt[i] += cur.values[i] - last.values[i];
            last = std::move(cur);
        }
        for (std::size_t i = 0; i < rebuilt.size(); ++i)
            violation = std::max(violation, std::abs(rebuilt[i] - g_full.values[i]));
        // Area identity: (1/sqrt(N)) sum_x g_1(x) = A_N / N^2, 1e-12 relative.
        double lattice_sum = 0.0;
        for (double v : g_full.values) lattice_sum += v;
        double area_lhs = lattice_sum / std::sqrt(static_cast<double>(n_scale));
        double area_rhs = ens.area_process(1.0);
        violation = std::max(violation, std::abs(area_lhs - area_rhs) /
                                            std::max(1.0, std::abs(area_rhs)));
        // Conditioned sampler exactness and cycle-lemma validity.
        for (int i = 0; i < 50; ++i) {
            auto seq = sample_conditioned_sequence(nu, 501, rng);
            if (!is_valid_tree_encoding(seq)) violation = std::max(violation, 1.0);
            auto occ = occupation_from_sequence(seq, f, rng);
            if (occ.total() != 501) violation = std::max(violation, 1.0);
        }
        report.checks.push_back(make_check(
            "7-exact-invariants",
            "monotonicity, pure-jump reconstruction, area identity, conditioning",
            violation, 0.0, 1e-12, stream_seed(master, 8 * kCheckStride), n_scale,
            t.seconds()));
    }

    // --- 8. Small-instance oracle: conditioned shapes vs brute-force enumeration.
    {
        Timer t;
        const OffspringLaw binary = binary_offspring();
        const std::uint64_t n = 5;
        // Enumerate valid preorder encodings with their conditional weights.
        std::vector<std::vector<std::uint32_t>> shapes;
        std::vector<double> weights;
        std::vector<std::uint32_t> seq(n);
        double weight_total = 0.0;
        auto recurse = [&](auto&& self, std::size_t depth, double w) -> void {
            if (depth == n) {
                if (is_valid_tree_encoding(seq)) {
                    shapes.push_back(seq);
                    weights.push_back(w);
                    weight_total += w;
                }
                return;
            }
            for (const auto& [k, p] : binary.pmf) {
                seq[depth] = static_cast<std::uint32_t>(k);
                self(self, depth + 1, w * p);
            }
        };
        recurse(recurse, 0, 1.0);
        std::map<std::vector<std::uint32_t>, std::uint64_t> observed;
        const std::uint64_t draws = budget.chi2_samples;
        Rng rng = Rng::substream(master, 9 * kCheckStride);
        for (std::uint64_t i = 0; i < draws; ++i)
            ++observed[sample_conditioned_sequence(binary, n, rng)];
        double chi2 = 0.0;
        for (std::size_t s = 0; s < shapes.size(); ++s) {
            double expected = static_cast<double>(draws) * weights[s] / weight_total;
            double obs = static_cast<double>(observed[shapes[s]]);
            chi2 += (obs - expected) * (obs - expected) / expected;
        }
        double p = shapes.size() > 1
                       ? chi_squared_sf(chi2, static_cast<double>(shapes.size() - 1))
                       : 1.0;
        report.checks.push_back(make_check(
            "8-conditioned-shape-oracle",
            "size-conditioned tree shapes match exact enumeration (chi-squared)",
            p, 0.001, 1.0, stream_seed(master, 9 * kCheckStride), draws, t.seconds(),
            budget_warning(draws >= 10000, "chi-squared draws")));
    }

    // --- 9. Estimator calibration.
    {
        Timer t;
        double min_coverage = 1.0;
        const std::uint64_t reps = budget.calibration_repetitions;
        const std::uint64_t n_samples = budget.calibration_samples;
        std::uint64_t task = 0;
        for (double alpha : {0.5, 2.0 / 3.0}) {
            std::uint64_t covered = 0;
            for (std::uint64_t r = 0; r < reps; ++r) {
                Rng rng = Rng::substream(master, 10 * kCheckStride + (task++));
                std::vector<double> samples(n_samples);
                for (auto& x : samples)
                    x = std::pow(rng.uniform_pos(), -1.0 / alpha);  // exact Pareto
                auto est = hill_estimator(samples, hill_default_k(n_samples));
                if (est.ci_low <= alpha && alpha <= est.ci_high) ++covered;
            }
            min_coverage = std::min(
                min_coverage, static_cast<double>(covered) / static_cast<double>(reps));
        }
        report.checks.push_back(make_check(
            "9a-hill-coverage", "Hill confidence band coverage on exact Pareto tails",
            min_coverage, 0.9, 1.0, stream_seed(master, 10 * kCheckStride), 2 * reps,
            t.seconds(),
            budget_warning(reps >= 50 && n_samples >= 1000, "calibration repetitions")));
    }
    {
        Timer t;
        const std::uint64_t draws = budget.ppp_draws;
        const std::size_t chunks = 64;
        std::vector<std::uint64_t> atom_counts(chunks, 0);
        parallel_for(chunks, threads, [&](std::size_t i) {
            std::uint64_t lo = draws * i / chunks, hi = draws * (i + 1) / chunks;
            Rng rng = Rng::substream(master, 11 * kCheckStride + i);
            std::uint64_t count = 0;
            for (std::uint64_t d = lo; d < hi; ++d)
                count += sample_jump_atoms(1.0, 1.0, rng).size();
            atom_counts[i] = count;
        });
        std::uint64_t total =
            std::accumulate(atom_counts.begin(), atom_counts.end(), std::uint64_t{0});
        double mean = static_cast<double>(total) / static_cast<double>(draws);
        double expected = std::sqrt(2.0 / M_PI);
        report.checks.push_back(make_check(
            "9b-ppp-atom-count", "jump point-process intensity tail mass",
            std::abs(mean / expected - 1.0), 0.0, 0.01,
            stream_seed(master, 11 * kCheckStride), draws, t.seconds(),
            budget_warning(draws >= 10000, "atom-count draws")));
    }

    // --- 10. Determinism across thread counts.
    {
        Timer t;
        auto run_once = [&](unsigned thread_count) {
            const std::size_t tasks = 96;
            std::vector<std::string> slots(tasks);
            parallel_for(tasks, thread_count, [&](std::size_t i) {
                Rng rng = Rng::substream(master, 12 * kCheckStride + i);
                TreeSummary s = sample_tree_summary(nu, f, rng, 1000000);
                auto atoms = sample_jump_atoms(1.0, 0.01, rng);
                auto seq = sample_conditioned_sequence(nu, 64, rng);
                std::string blob = std::to_string(s.total) + ":" +
                                   std::to_string(s.zero_count) + ":" +
                                   std::to_string(atoms.size()) + ":";
                for (const auto& a : atoms) blob += format_g17(a.l) + ",";
                for (auto x : seq) blob += std::to_string(x);
                slots[i] = blob;
            });
            std::string all;
            for (const auto& s : slots) all += s + "\n";
            return fnv1a_hex(all);
        };
        std::string h1 = run_once(1);
        std::string h4 = run_once(4);
        std::string h1_again = run_once(1);
        double mismatch = (h1 == h4 && h1 == h1_again) ? 0.0 : 1.0;
        report.checks.push_back(make_check(
            "10-determinism", "fixed seed reproduces results for any thread count",
            mismatch, 0.0, 0.0, stream_seed(master, 12 * kCheckStride), 96,
            t.seconds()));
    }

    return report;
}

} // namespace brw
