#include "brw/laws.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "brw/errors.hpp"

namespace brw {

DiscreteSampler::DiscreteSampler(const std::vector<std::int64_t>& values,
                                 const std::vector<double>& probs) {
    // Vose alias construction.
    const std::size_t n = values.size();
    size_ = n;
    threshold_.assign(n, 1.0);
    primary_ = values;
    alias_ = values;
    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = probs[i] * static_cast<double>(n);
    std::vector<std::size_t> small, large;
    for (std::size_t i = 0; i < n; ++i)
        (scaled[i] < 1.0 ? small : large).push_back(i);
    while (!small.empty() && !large.empty()) {
        std::size_t s = small.back(); small.pop_back();
        std::size_t l = large.back(); large.pop_back();
        threshold_[s] = scaled[s];
        alias_[s] = values[l];
        scaled[l] -= 1.0 - scaled[s];
        (scaled[l] < 1.0 ? small : large).push_back(l);
    }
    // Leftovers are 1 within rounding.
}

namespace {

// Shared pmf checks: sorted unique support, nonneg weights, unit mass.
template <typename K>
void check_probability(std::vector<std::pair<K, double>>& entries) {
    if (entries.empty()) throw NotAProbability("empty pmf");
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i].first == entries[i + 1].first)
            throw NotAProbability("duplicate support point");
    double total = 0.0;
    for (const auto& [k, p] : entries) {
        if (p < 0.0 || !std::isfinite(p)) throw NotAProbability("negative or non-finite mass");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) throw NotAProbability("pmf mass != 1");
}

} // namespace

OffspringLaw validate_offspring_law(
    std::vector<std::pair<std::uint64_t, double>> entries, std::string name) {
    check_probability(entries);
    double mean = 0.0, second = 0.0;
    for (const auto& [k, p] : entries) {
        mean += static_cast<double>(k) * p;
        second += static_cast<double>(k) * static_cast<double>(k) * p;
    }
    if (std::abs(mean - 1.0) > 1e-9) throw NotCritical("offspring mean != 1");
    double variance = second - mean * mean;
    if (variance <= 1e-12) throw ZeroVariance("offspring variance is zero");

    OffspringLaw law;
    law.pmf = std::move(entries);
    law.mean = mean;
    law.variance = variance;
    law.name = std::move(name);
    std::vector<std::int64_t> vals;
    std::vector<double> probs;
    for (const auto& [k, p] : law.pmf) {
        vals.push_back(static_cast<std::int64_t>(k));
        probs.push_back(p);
    }
    law.sampler = DiscreteSampler(vals, probs);
    return law;
}

StepLaw validate_step_law(std::vector<std::pair<std::int64_t, double>> entries,
                          std::string name) {
    check_probability(entries);
    double mean = 0.0, second = 0.0;
    for (const auto& [j, q] : entries) {
        mean += static_cast<double>(j) * q;
        second += static_cast<double>(j) * static_cast<double>(j) * q;
    }
    if (std::abs(mean) > 1e-9) throw NonzeroMean("step mean != 0");
    double variance = second - mean * mean;
    if (variance <= 1e-12) throw ZeroVariance("step variance is zero");
    // Span: gcd of pairwise support differences must be 1.
    std::int64_t g = 0;
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].second == 0.0 || entries[0].second == 0.0) continue;
        g = std::gcd(g, entries[i].first - entries[0].first);
    }
    std::int64_t base = entries[0].first;
    for (std::size_t i = 1; i < entries.size(); ++i)
        g = std::gcd(g, entries[i].first - base);
    if (g != 1) throw SpanNotOne("step support has span != 1");

    StepLaw law;
    law.pmf = std::move(entries);
    law.variance = variance;
    law.name = std::move(name);
    std::vector<std::int64_t> vals;
    std::vector<double> probs;
    for (const auto& [j, q] : law.pmf) {
        vals.push_back(j);
        probs.push_back(q);
    }
    law.sampler = DiscreteSampler(vals, probs);
    return law;
}

OffspringLaw poisson1_offspring() {
    // Poisson(1) truncated where the remaining tail mass drops below 1e-15,
    // then renormalized. Criticality is re-validated after renormalization.
    std::vector<std::pair<std::uint64_t, double>> pmf;
    double p = std::exp(-1.0);
    double cum = 0.0;
    for (std::uint64_t k = 0;; ++k) {
        pmf.emplace_back(k, p);
        cum += p;
        if (1.0 - cum < 1e-15 && k >= 2) break;
        p /= static_cast<double>(k + 1);
    }
    double total = 0.0;
    for (auto& [k, q] : pmf) total += q;
    double mean = 0.0;
    for (auto& [k, q] : pmf) {
        q /= total;
        mean += static_cast<double>(k) * q;
    }
    // Nudge mass between 0 and 1 so the truncated law is exactly critical.
    double shift = mean - 1.0;
    pmf[1].second -= shift;
    pmf[0].second += shift;
    auto law = validate_offspring_law(std::move(pmf), "poisson1");
    law.is_poisson1 = true;
    return law;
}

OffspringLaw geometric_half_offspring() {
    std::vector<std::pair<std::uint64_t, double>> pmf;
    double p = 0.5;
    double cum = 0.0;
    for (std::uint64_t k = 0;; ++k) {
        pmf.emplace_back(k, p);
        cum += p;
        if (1.0 - cum < 1e-15 && k >= 2) break;
        p *= 0.5;
    }
    double total = 0.0;
    for (auto& [k, q] : pmf) total += q;
    double mean = 0.0;
    for (auto& [k, q] : pmf) {
        q /= total;
        mean += static_cast<double>(k) * q;
    }
    double shift = mean - 1.0;
    pmf[1].second -= shift;
    pmf[0].second += shift;
    return validate_offspring_law(std::move(pmf), "geometric_half");
}

OffspringLaw binary_offspring() {
    return validate_offspring_law({{0, 0.5}, {2, 0.5}}, "binary");
}

StepLaw uniform_step() {
    return validate_step_law({{-1, 1.0 / 3}, {0, 1.0 / 3}, {1, 1.0 / 3}}, "uniform");
}

StepLaw lazy_step() {
    return validate_step_law({{-1, 0.25}, {0, 0.5}, {1, 0.25}}, "lazy");
}

OffspringLaw offspring_preset(const std::string& tag) {
    if (tag == "poisson1") return poisson1_offspring();
    if (tag == "geometric_half") return geometric_half_offspring();
    if (tag == "binary") return binary_offspring();
    throw ConfigError("unknown offspring preset: " + tag);
}

StepLaw step_preset(const std::string& tag) {
    if (tag == "uniform") return uniform_step();
    if (tag == "lazy") return lazy_step();
    throw ConfigError("unknown step preset: " + tag);
}

} // namespace brw
