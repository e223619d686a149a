#include "brw/config.hpp"

#include <json.hpp>

#include "brw/errors.hpp"

namespace brw {

using nlohmann::json;

OffspringLaw LawSpec::make_offspring() const {
    if (!preset.empty()) return offspring_preset(preset);
    std::vector<std::pair<std::uint64_t, double>> entries;
    for (const auto& [k, p] : pmf) {
        if (k < 0) throw ConfigError("offspring support must be nonnegative");
        entries.emplace_back(static_cast<std::uint64_t>(k), p);
    }
    return validate_offspring_law(std::move(entries));
}

StepLaw LawSpec::make_step() const {
    if (!preset.empty()) return step_preset(preset);
    return validate_step_law(pmf);
}

void RunConfig::validate() const {
    if (ensemble_scale < 1) throw ConfigError("N must be >= 1");
    if (replicates < 1) throw ConfigError("replicates must be >= 1");
    if (vertex_cap < 1) throw ConfigError("vertex_cap must be >= 1");
    if (l_min <= 0.0) throw ConfigError("l_min must be positive");
    if (n_ise < 1) throw ConfigError("n_ise must be >= 1");
    if (s_grid.empty()) throw ConfigError("s_grid must be nonempty");
    for (double s : s_grid)
        if (s < 0.0 || s > 1.0)
            throw ConfigError("s values must lie in [0, 1]");
    if (!x_grid.automatic && x_grid.count < 2)
        throw ConfigError("explicit x_grid needs at least 2 points");
    // Law specs must validate.
    offspring.make_offspring();
    step.make_step();
}

namespace {

json law_to_json(const LawSpec& law) {
    if (!law.preset.empty()) return json{{"preset", law.preset}};
    json entries = json::array();
    for (const auto& [k, p] : law.pmf) entries.push_back(json::array({k, p}));
    return json{{"pmf", entries}};
}

LawSpec law_from_json(const json& j) {
    LawSpec law;
    if (j.contains("preset")) {
        law.preset = j.at("preset").get<std::string>();
    } else if (j.contains("pmf")) {
        for (const auto& entry : j.at("pmf"))
            law.pmf.emplace_back(entry.at(0).get<std::int64_t>(),
                                 entry.at(1).get<double>());
    } else {
        throw ConfigError("law spec needs 'preset' or 'pmf'");
    }
    return law;
}

json grid_to_json(const GridSpec& grid) {
    if (grid.automatic) return json{{"auto", true}};
    return json{{"x0", grid.x0}, {"dx", grid.dx}, {"count", grid.count}};
}

GridSpec grid_from_json(const json& j) {
    GridSpec grid;
    if (j.contains("auto") && j.at("auto").get<bool>()) return grid;
    grid.automatic = false;
    grid.x0 = j.at("x0").get<double>();
    grid.dx = j.at("dx").get<double>();
    grid.count = j.at("count").get<std::size_t>();
    return grid;
}

} // namespace

std::string config_to_json(const RunConfig& c) {
    json j;
    j["master_seed"] = c.master_seed;
    j["offspring"] = law_to_json(c.offspring);
    j["step"] = law_to_json(c.step);
    j["N"] = c.ensemble_scale;
    j["s_grid"] = c.s_grid;
    j["x_grid"] = grid_to_json(c.x_grid);
    j["l_min"] = c.l_min;
    j["n_ise"] = c.n_ise;
    j["replicates"] = c.replicates;
    j["vertex_cap"] = c.vertex_cap;
    j["jump_count"] = c.jump_count;
    j["output_dir"] = c.output_dir;
    j["threads"] = c.threads;
    json v;
    v["survival_trials"] = c.verify.survival_trials;
    v["survival_generation"] = c.verify.survival_generation;
    v["theta_replicates"] = c.verify.theta_replicates;
    v["theta_ensemble"] = c.verify.theta_ensemble;
    v["hill_ensembles"] = c.verify.hill_ensembles;
    v["hill_ensemble_n"] = c.verify.hill_ensemble_n;
    v["scaling_replicates"] = c.verify.scaling_replicates;
    v["scaling_ensemble"] = c.verify.scaling_ensemble;
    v["dual_replicates"] = c.verify.dual_replicates;
    v["dual_ensemble"] = c.verify.dual_ensemble;
    v["shape_replicates"] = c.verify.shape_replicates;
    v["shape_ensemble"] = c.verify.shape_ensemble;
    v["chi2_samples"] = c.verify.chi2_samples;
    v["calibration_repetitions"] = c.verify.calibration_repetitions;
    v["calibration_samples"] = c.verify.calibration_samples;
    v["ppp_draws"] = c.verify.ppp_draws;
    j["verify"] = v;
    return j.dump(2) + "\n";
}

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    RunConfig c;
    try {
        if (j.contains("master_seed")) c.master_seed = j.at("master_seed").get<std::uint64_t>();
        if (j.contains("offspring")) c.offspring = law_from_json(j.at("offspring"));
        if (j.contains("step")) c.step = law_from_json(j.at("step"));
        if (j.contains("N")) c.ensemble_scale = j.at("N").get<std::uint64_t>();
        if (j.contains("s_grid")) c.s_grid = j.at("s_grid").get<std::vector<double>>();
        if (j.contains("x_grid")) c.x_grid = grid_from_json(j.at("x_grid"));
        if (j.contains("l_min")) c.l_min = j.at("l_min").get<double>();
        if (j.contains("n_ise")) c.n_ise = j.at("n_ise").get<std::uint64_t>();
        if (j.contains("replicates")) c.replicates = j.at("replicates").get<std::uint64_t>();
        if (j.contains("vertex_cap")) c.vertex_cap = j.at("vertex_cap").get<std::uint64_t>();
        if (j.contains("jump_count")) c.jump_count = j.at("jump_count").get<std::uint64_t>();
        if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
        if (j.contains("threads")) c.threads = j.at("threads").get<unsigned>();
        if (j.contains("verify")) {
            const json& v = j.at("verify");
            auto get = [&](const char* key, auto& field) {
                if (v.contains(key)) field = v.at(key).get<std::decay_t<decltype(field)>>();
            };
            get("survival_trials", c.verify.survival_trials);
            get("survival_generation", c.verify.survival_generation);
            get("theta_replicates", c.verify.theta_replicates);
            get("theta_ensemble", c.verify.theta_ensemble);
            get("hill_ensembles", c.verify.hill_ensembles);
            get("hill_ensemble_n", c.verify.hill_ensemble_n);
            get("scaling_replicates", c.verify.scaling_replicates);
            get("scaling_ensemble", c.verify.scaling_ensemble);
            get("dual_replicates", c.verify.dual_replicates);
            get("dual_ensemble", c.verify.dual_ensemble);
            get("shape_replicates", c.verify.shape_replicates);
            get("shape_ensemble", c.verify.shape_ensemble);
            get("chi2_samples", c.verify.chi2_samples);
            get("calibration_repetitions", c.verify.calibration_repetitions);
            get("calibration_samples", c.verify.calibration_samples);
            get("ppp_draws", c.verify.ppp_draws);
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    }
    c.validate();
    return c;
}

} // namespace brw
