// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_CORE_TRANSFORMS_HPP
#define SVGSTEIN_CORE_TRANSFORMS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "core/dist_spec.hpp"

namespace svgstein::transform {

// W-zero-bias distribution W* of a mean-zero W:
//   E W f(W) = Var(W) E f'(W*),  density  f*(w) = E[W 1(W>w)] / Var(W).
// Discrete inputs yield the exact piecewise-uniform representation; analytic
// inputs go through a tabulated CDF inverted by monotone interpolation
// (CDF error budget 1e-6).
class ZeroBias {
public:
    explicit ZeroBias(const DistributionSpec& w);
    double density(double w) const;
    double cdf(double w) const;
    double quantile(double q) const;
    double sample_one(std::mt19937_64& eng) const;
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }

private:
    double var_;
    double lo_, hi_;
    bool discrete_;
    // discrete path: interval mixture
    std::vector<double> knots_, g_;  // G value on [knots_i, knots_{i+1})
    std::vector<double> mix_cum_;
    // analytic path: tabulated CDF with derivative density
    std::vector<double> xs_, fs_, ds_;
    std::function<double(double)> upm_;
};

double zero_bias_density(const DistributionSpec& w, double x);

// W-centered equilibrium distribution of order r, realised as B_r W* with
// B_r ~ Beta(r,1) independent of W*.  SVG(r, sigma, 0) with sigma^2 = Var/r
// is its unique fixed point.
class CenteredEquilibrium {
public:
    CenteredEquilibrium(const DistributionSpec& w, double r);
    double density(double w) const;  // requires r > 1 (quadrature of the mixture)
    double sample_one(std::mt19937_64& eng) const;
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

private:
    DistributionSpec w_;
    ZeroBias star_;
    double r_;
    double sigma2_;  // Var(W)/r
};

std::vector<double> centered_equilibrium_sample(const DistributionSpec& w, double r,
                                                std::size_t n, std::uint64_t seed);
double centered_equilibrium_density(const DistributionSpec& w, double r, double x);

// E[(W^{V_r})^p] (or E|W^{V_r}|^p) from E[W^{p+2}] (resp. E|W|^{p+2}):
//   E[(W^{V_r})^p] = E[W^{p+2}] / (sigma^2 (p+1)(p+r)),  sigma^2 = Var(W)/r.
double transform_moment(double e_w_p_plus_2, double variance, double r, double p);

// G_r f(x) = (x/r) E f(x U B_r): the right-inverse of T_r D
// (T_r D G_r f = f), and a left-inverse on twice-differentiable f with
// f(0) = 0 when r >= 1.
double g_r_apply(const std::function<double(double)>& f, double r, double x);

}  // namespace svgstein::transform

#endif
