// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_CORE_DIST_SPEC_HPP
#define SVGSTEIN_CORE_DIST_SPEC_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace svgstein::transform {

// A distribution the bias transformations can consume: finite discrete
// support with probabilities, an analytic density on an interval, or a bare
// sampler (the output form of the transformations themselves).
class DistributionSpec {
public:
    enum class Kind { FiniteDiscrete, AnalyticDensity, Sampler };

    static DistributionSpec finite_discrete(std::vector<double> values,
                                            std::vector<double> probs);
    // pdf on [lo, hi] (either side may be infinite); mean/variance declared and
    // spot-checked.  upper_partial_mean(u) = E[W 1(W>u)] and cdf may be passed
    // when closed forms exist; otherwise they are derived by quadrature.
    static DistributionSpec analytic(std::function<double(double)> pdf, double lo, double hi,
                                     double mean, double variance,
                                     std::function<double(double)> upper_partial_mean = nullptr,
                                     std::function<double(double)> cdf = nullptr,
                                     std::function<double(std::mt19937_64&)> sampler = nullptr);
    static DistributionSpec sampler(std::function<double(std::mt19937_64&)> gen, double mean,
                                    double variance);

    // mean-zero SVG(r, sigma, 0) with exact partial-mean/cdf/sampler hooks
    static DistributionSpec svg(double r, double sigma);
    static DistributionSpec rademacher();  // +-1 with probability 1/2

    Kind kind() const { return kind_; }
    double mean() const { return mean_; }
    double variance() const { return variance_; }
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }

    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& probs() const { return probs_; }

    double pdf(double x) const;                  // AnalyticDensity only
    double cdf(double x) const;                  // discrete or analytic
    double upper_partial_mean(double u) const;   // E[W 1(W > u)]
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;
    double sample_one(std::mt19937_64& eng) const;

    // square-bias W-square of a discrete law: atoms v_i with mass v_i^2 p_i / E W^2
    DistributionSpec square_bias_discrete() const;

private:
    DistributionSpec() = default;
    Kind kind_ = Kind::Sampler;
    double mean_ = 0.0, variance_ = 1.0;
    double lo_ = 0.0, hi_ = 0.0;
    std::vector<double> values_, probs_, cum_;
    std::function<double(double)> pdf_, cdf_, upm_;
    std::function<double(std::mt19937_64&)> gen_;
    double quad_window() const;
};

}  // namespace svgstein::transform

#endif
