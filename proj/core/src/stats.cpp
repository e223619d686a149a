#include "brw/stats.hpp"

#include <algorithm>
#include <cmath>

#include "brw/errors.hpp"

namespace brw {

std::size_t hill_default_k(std::size_t n) {
    return static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), 0.6)));
}

TailEstimate hill_estimator(std::vector<double> samples, std::size_t k) {
    if (k < 2) throw TooFewSamples("hill needs k >= 2");
    if (samples.size() <= k) throw TooFewSamples("hill needs more samples than k");
    for (double x : samples)
        if (!(x > 0.0)) throw NonPositiveSample("hill needs strictly positive samples");
    // Bring the k+1 largest to the front.
    std::partial_sort(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(k + 1),
                      samples.end(), std::greater<>());
    const double pivot = samples[k];
    double log_sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) log_sum += std::log(samples[i] / pivot);
    if (log_sum <= 0.0) throw DegenerateTail("all top order statistics equal");
    TailEstimate out;
    out.alpha_hat = static_cast<double>(k) / log_sum;
    out.k_used = k;
    const double half_width = 1.96 / std::sqrt(static_cast<double>(k));
    out.ci_low = out.alpha_hat * (1.0 - half_width);
    out.ci_high = out.alpha_hat * (1.0 + half_width);
    return out;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double levy_theta_cdf(double s, double sigma_nu_sq, double t) {
    if (s <= 0.0 || sigma_nu_sq <= 0.0) throw Error("levy_theta_cdf domain");
    if (t <= 0.0) return 0.0;
    return 2.0 * (1.0 - normal_cdf(s / std::sqrt(sigma_nu_sq * t)));
}

double levy_theta_quantile(double s, double sigma_nu_sq, double p) {
    if (p <= 0.0 || p >= 1.0) throw Error("quantile needs p in (0,1)");
    double lo = 1e-12, hi = 1.0;
    while (levy_theta_cdf(s, sigma_nu_sq, hi) < p) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (levy_theta_cdf(s, sigma_nu_sq, mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double kolmogorov_tail(double lambda) {
    if (lambda <= 0.0) return 1.0;
    double sum = 0.0;
    for (int j = 1; j <= 100; ++j) {
        double term = 2.0 * ((j % 2) ? 1.0 : -1.0) *
                      std::exp(-2.0 * static_cast<double>(j) * static_cast<double>(j) *
                               lambda * lambda);
        sum += term;
        if (std::abs(term) < 1e-16) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

namespace {

double ks_p_value(double d, double n_eff) {
    double sqrt_n = std::sqrt(n_eff);
    return kolmogorov_tail((sqrt_n + 0.12 + 0.11 / sqrt_n) * d);
}

} // namespace

KsResult ks_one_sample(std::vector<double> samples,
                       const std::function<double(double)>& cdf) {
    if (samples.empty()) throw EmptySample("ks_one_sample: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double f = cdf(samples[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return {d, n, ks_p_value(d, n)};
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw EmptySample("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    double n_eff = na * nb / (na + nb);
    return {d, n_eff, ks_p_value(d, n_eff)};
}

namespace {

// Regularized incomplete gamma functions (series / continued fraction).
double gamma_p_series(double a, double x) {
    double sum = 1.0 / a, term = sum, ap = a;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double chi_squared_sf(double x, double dof) {
    if (x <= 0.0) return 1.0;
    const double a = dof / 2.0, half_x = x / 2.0;
    if (half_x < a + 1.0) return 1.0 - gamma_p_series(a, half_x);
    return gamma_q_cf(a, half_x);
}

} // namespace brw
