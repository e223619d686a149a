// brwsim: Monte Carlo driver for critical branching random walk ensembles.
//
// Subcommands:
//   simulate      sample an ensemble and write the step-process curves
//   jumps         write the largest rescaled per-tree profiles of an ensemble
//   limit-sample  draw the truncated jump point process with ISE profiles
//   verify        run the statistical verification suite
//
// Exit codes: 0 success / all checks pass, 1 usage error, 2 runtime failure,
// 3 verification failure.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brw/config.hpp"
#include "brw/ensemble.hpp"
#include "brw/errors.hpp"
#include "brw/gw.hpp"
#include "brw/io.hpp"
#include "brw/ise.hpp"
#include "brw/limit.hpp"
#include "brw/parallel.hpp"
#include "brw/rng.hpp"
#include "brw/verify.hpp"
#include "brw/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::optional<std::string> out;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON config file");
    cmd->add_option("--seed", args.seed, "master seed (overrides config)");
    cmd->add_option("--threads", args.threads, "worker thread count");
    cmd->add_option("--out", args.out, "output directory (overrides config)");
}

brw::RunConfig load_config(const CommonArgs& args) {
    brw::RunConfig config;
    if (!args.config_path.empty())
        config = brw::parse_config(brw::read_file(args.config_path));
    if (args.seed) config.master_seed = *args.seed;
    if (args.threads) {
        config.threads = *args.threads;
    } else if (const char* env = std::getenv("BRW_THREADS")) {
        config.threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }
    if (args.out) config.output_dir = *args.out;
    config.validate();
    return config;
}

/// Collects output files and writes the manifest (config, seed, version,
/// checksums) once the command is done.
class OutputSet {
public:
    explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {}

    void add(const std::string& name, const std::string& bytes) {
        brw::write_file(dir_ / name, bytes);
        checksums_[name] = brw::fnv1a_hex(bytes);
    }

    void finish(const std::string& command, const brw::RunConfig& config,
                json extras = json::object()) {
        json m;
        m["tool_version"] = brw::kToolVersion;
        m["command"] = command;
        m["master_seed"] = config.master_seed;
        m["config"] = json::parse(brw::config_to_json(config));
        m["files"] = checksums_;
        for (auto& [k, v] : extras.items()) m[k] = v;
        brw::write_file(dir_ / "manifest.json", m.dump(2) + "\n");
    }

private:
    fs::path dir_;
    std::map<std::string, std::string> checksums_;
};

/// Samples the ensemble's trees in parallel, one substream per tree; a tree
/// hitting the vertex cap is resampled from a disjoint retry stream.
std::vector<brw::OccupationMeasure> sample_ensemble_trees(
    const brw::RunConfig& config, std::uint64_t& capped_retries) {
    const brw::OffspringLaw nu = config.offspring.make_offspring();
    const brw::StepLaw f = config.step.make_step();
    const std::uint64_t n = config.ensemble_scale;
    std::vector<brw::OccupationMeasure> trees(n);
    std::vector<std::uint64_t> retries(n, 0);
    brw::parallel_for(n, config.threads, [&](std::size_t i) {
        std::uint64_t attempt = 0;
        for (;;) {
            std::uint64_t stream =
                attempt == 0 ? i : (1ULL << 32) + i * 1024 + attempt;
            brw::Rng rng = brw::Rng::substream(config.master_seed, stream);
            try {
                trees[i] = brw::sample_tree_occupation(nu, f, rng, config.vertex_cap);
                retries[i] = attempt;
                return;
            } catch (const brw::VertexCapExceeded&) {
                if (++attempt > 64)
                    throw brw::Error("tree resampling exhausted its retry budget");
            }
        }
    });
    capped_retries = 0;
    for (auto r : retries) capped_retries += r;
    return trees;
}

std::string s_label(double s) {
    std::string label = brw::format_g17(s);
    for (auto& c : label)
        if (c == '.') c = 'p';
    return label;
}

int run_simulate(const brw::RunConfig& config) {
    std::uint64_t capped_retries = 0;
    auto trees = sample_ensemble_trees(config, capped_retries);
    auto ens = brw::build_ensemble(std::move(trees), config.ensemble_scale);

    OutputSet out{config.output_dir};
    std::vector<brw::DensityCurve> curves;
    for (double s : config.s_grid) {
        brw::DensityCurve curve =
            config.x_grid.automatic
                ? ens.eval_density(s)
                : ens.eval_density(s, config.x_grid.x0, config.x_grid.dx,
                                   config.x_grid.count);
        out.add("curves_s" + s_label(s) + ".csv", curve.to_csv());
        curves.push_back(std::move(curve));
    }
    out.add("curves.json", brw::curves_to_json(config.s_grid, curves));

    json extras;
    extras["capped_retries"] = capped_retries;
    json areas = json::object(), zeros = json::object();
    for (double s : config.s_grid) {
        areas[s_label(s)] = ens.area_process(s);
        zeros[s_label(s)] = ens.zero_process(s);
    }
    extras["area_process"] = areas;
    extras["zero_process"] = zeros;
    out.finish("simulate", config, extras);
    return 0;
}

/// Self-similar rescaling of one jump: y = x / area^{1/4},
/// value = curve / area^{3/4}, so profiles of different sizes are comparable.
brw::DensityCurve rescale_jump(const brw::JumpProfile& j) {
    brw::DensityCurve out;
    double quarter = std::pow(j.area, 0.25);
    out.x0 = j.curve.x0 / quarter;
    out.dx = j.curve.dx / quarter;
    out.values.reserve(j.curve.size());
    double scale = std::pow(j.area, -0.75);
    for (double v : j.curve.values) out.values.push_back(v * scale);
    return out;
}

int run_jumps(const brw::RunConfig& config) {
    std::uint64_t capped_retries = 0;
    auto trees = sample_ensemble_trees(config, capped_retries);
    auto ens = brw::build_ensemble(std::move(trees), config.ensemble_scale);
    auto jumps = ens.ordered_jumps(1.0, config.jump_count);

    OutputSet out{config.output_dir};
    json summary = json::array();
    for (const auto& j : jumps) {
        std::string name = "jump_rank" + std::to_string(j.rank) + ".csv";
        out.add(name, rescale_jump(j).to_csv());
        json row;
        row["rank"] = j.rank;
        row["tree_index"] = j.tree_index;
        row["area"] = j.area;
        row["curve"] = name;
        summary.push_back(row);
    }
    out.add("jumps.json", summary.dump(2) + "\n");

    json extras;
    extras["capped_retries"] = capped_retries;
    extras["theta"] = ens.area_process(1.0);  // equals the sum of all jump areas
    double top_area_sum = 0.0;
    for (const auto& j : jumps) top_area_sum += j.area;
    extras["top_jump_area_sum"] = top_area_sum;
    out.finish("jumps", config, extras);
    return 0;
}

int run_limit_sample(const brw::RunConfig& config) {
    const brw::OffspringLaw nu = config.offspring.make_offspring();
    const brw::StepLaw f = config.step.make_step();

    brw::LimitJumpSet jumps;
    jumps.s_max = 1.0;
    jumps.l_min = config.l_min;
    {
        brw::Rng rng = brw::Rng::substream(config.master_seed, 0);
        jumps.atoms = brw::sample_jump_atoms(jumps.s_max, jumps.l_min, rng);
    }
    brw::parallel_for(jumps.atoms.size(), config.threads, [&](std::size_t i) {
        brw::Rng rng = brw::Rng::substream(config.master_seed, 1 + i);
        jumps.atoms[i].ise = brw::ise_density_sample(nu, f, config.n_ise, 0.05, rng);
    });

    OutputSet out{config.output_dir};
    out.add("atoms.json", brw::limit_jump_set_to_json(jumps, "ise_atom"));
    for (std::size_t i = 0; i < jumps.atoms.size(); ++i)
        out.add("ise_atom" + std::to_string(i) + ".csv",
                brw::ise_sample_to_csv(jumps.atoms[i].ise));

    // Assembled curves at the s grid. Auto grid: cover the union of the
    // rescaled atom supports.
    double x0 = config.x_grid.x0, dx = config.x_grid.dx;
    std::size_t count = config.x_grid.count;
    if (config.x_grid.automatic) {
        double lo = -1.0, hi = 1.0;
        for (const auto& a : jumps.atoms) {
            double stretch = std::sqrt(f.variance / nu.variance) * std::pow(a.l, 0.25);
            double half = stretch * a.ise.grid_step *
                          static_cast<double>(a.ise.values.size()) / 2.0;
            lo = std::min(lo, -half);
            hi = std::max(hi, half);
        }
        count = 801;
        dx = (hi - lo) / static_cast<double>(count - 1);
        x0 = lo;
    }
    for (double s : config.s_grid) {
        auto curve = brw::assemble_limit_density(jumps, nu.variance, f.variance, s,
                                                 x0, dx, count);
        out.add("limit_curve_s" + s_label(s) + ".csv", curve.to_csv());
    }

    json extras;
    extras["atom_count"] = jumps.atoms.size();
    extras["truncation_area_bound"] =
        brw::truncation_area_bound(jumps.l_min, jumps.s_max);
    out.finish("limit-sample", config, extras);
    return 0;
}

int run_verify(const brw::RunConfig& config) {
    brw::StatReport report = brw::verify_suite(config);
    OutputSet out{config.output_dir};
    std::string body = report.to_json();
    out.add("report.json", body);
    out.finish("verify", config);
    for (const auto& c : report.checks)
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.check_id
                  << "  statistic=" << brw::format_g17(c.statistic) << "\n";
    if (!report.all_pass()) {
        std::cerr << "verification failed\n";
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"critical branching random walk ensembles and their scaling limit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", brw::kToolVersion);

    CommonArgs args;
    auto* simulate = app.add_subcommand("simulate", "sample an ensemble, write curves");
    auto* jumps = app.add_subcommand("jumps", "largest rescaled per-tree profiles");
    auto* limit = app.add_subcommand("limit-sample", "draw the limit jump point process");
    auto* verify = app.add_subcommand("verify", "run the statistical check suite");
    for (auto* cmd : {simulate, jumps, limit, verify}) add_common(cmd, args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        brw::RunConfig config = load_config(args);
        if (simulate->parsed()) return run_simulate(config);
        if (jumps->parsed()) return run_jumps(config);
        if (limit->parsed()) return run_limit_sample(config);
        return run_verify(config);
    } catch (const brw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
