#ifndef BRW_STATS_HPP
#define BRW_STATS_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace brw {

/// Heavy-tail index estimate with a normal-approximation 95% band.
struct TailEstimate {
    double alpha_hat = 0.0;
    std::size_t k_used = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

/// Kolmogorov-Smirnov result. n_eff is n for one-sample, nm/(n+m) for
/// two-sample; the p-value uses the asymptotic Kolmogorov distribution.
struct KsResult {
    double d_stat = 0.0;
    double n_eff = 0.0;
    double p_value = 1.0;
};

/// Hill estimator on the k largest order statistics:
/// alpha_hat = k / sum_{i<=k} log(X_(i) / X_(k+1)).
/// Throws TooFewSamples, NonPositiveSample, DegenerateTail.
TailEstimate hill_estimator(std::vector<double> samples, std::size_t k);

/// Default order-statistics count: ceil(n^0.6).
std::size_t hill_default_k(std::size_t n);

/// Standard normal CDF.
double normal_cdf(double z);

/// P(theta_s <= t) = 2 (1 - Phi(s / sqrt(sigma_nu^2 t))) for the total-area
/// law theta_s (inverse-local-time form, scaled by sigma_nu^{-2}).
double levy_theta_cdf(double s, double sigma_nu_sq, double t);

/// Quantile of the theta_s law by bisection on levy_theta_cdf.
double levy_theta_quantile(double s, double sigma_nu_sq, double p);

/// Asymptotic Kolmogorov distribution tail Q(lambda) = P(K > lambda).
double kolmogorov_tail(double lambda);

KsResult ks_one_sample(std::vector<double> samples,
                       const std::function<double(double)>& cdf);
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Upper tail of the chi-squared distribution with dof degrees of freedom.
double chi_squared_sf(double x, double dof);

} // namespace brw

#endif
