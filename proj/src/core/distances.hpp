// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_CORE_DISTANCES_HPP
#define SVGSTEIN_CORE_DISTANCES_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "core/svg.hpp"

namespace svgstein::metric {

enum class Metric { Kolmogorov, Wasserstein, BoundedWasserstein };

struct MetricValue {
    Metric metric = Metric::Kolmogorov;
    double value = 0.0;
    std::size_t n = 0;
    double se_hint = 0.0;  // resampling standard error when requested
};

// Continuous target for one-sample estimators.  upper_partial_mean(u) is
// E[X 1(X > u)], used for the exact tail/interval integrals of the
// Wasserstein estimator.
struct Target {
    std::function<double(double)> cdf;
    std::function<double(double)> quantile;
    std::function<double(double)> upper_partial_mean;
    double mean = 0.0;
    std::vector<double> atoms;  // discontinuities of the cdf (discrete targets)
};

// SVG target backed by the tabulated CDF (fast enough for 1e5+ evaluations).
Target make_svg_target(const dist::SvgParams& p);

// One-sample Kolmogorov-Smirnov statistic sup_x |F_n(x) - F(x)|, computed
// exactly at the jump points of F_n (and of F, for discrete targets).
MetricValue kolmogorov_empirical(std::span<const double> sample, const Target& target);
MetricValue kolmogorov_empirical(std::span<const double> sample,
                                 const std::function<double(double)>& cdf);

// One-sample 1-Wasserstein distance int |F_n - F| dx with exact per-interval
// integrals between order statistics and exact tails.
MetricValue wasserstein_empirical(std::span<const double> sample, const Target& target);

// min(d_W, 2 d_K): a documented upper proxy for the bounded Wasserstein
// distance (reporting only, never used in acceptance comparisons).
MetricValue bounded_wasserstein_proxy(std::span<const double> sample, const Target& target);

// Efron bootstrap standard error of the estimator (B resamples).
double bootstrap_se(std::span<const double> sample, const Target& target, Metric metric, int B,
                    std::uint64_t seed);

// d_K(W, Z) from d_W(W, Z) for Z ~ SVG(r, sigma, mu):
//   r > 1 :  sqrt( (1/(sigma sqrt(pi))) Gamma((r-1)/2)/Gamma(r/2) d_W )
//   r = 1 :  {2 + log(2/sqrt(pi)) + (1/2) log(sigma/d_W)} sqrt(d_W/(pi sigma)),
//            valid for d_W/sigma < 0.676 (throws domain_error otherwise)
//   r < 1 :  2 ( Gamma((1-r)/2) / (sqrt(pi) 2^{r-1} Gamma(r/2)) )^{1/(r+1)}
//              (d_W/sigma)^{r/(r+1)}
double kolmogorov_from_wasserstein(const dist::SvgParams& p, double d_w);

// C_{r,sigma,alpha}: bound on P(a <= Z <= b) with alpha = b - a:
//   r > 1 :  alpha Gamma((r-1)/2) / (2 sigma sqrt(pi) Gamma(r/2))
//   r = 1 :  (alpha/(pi sigma)) (1 + log(2 sigma/alpha))
//   r < 1 :  Gamma((1-r)/2) / (sqrt(pi) 2^r Gamma(r/2+1)) (alpha/sigma)^r
double concentration_bound(const dist::SvgParams& p, double alpha);

}  // namespace svgstein::metric

#endif
