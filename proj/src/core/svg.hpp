// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_CORE_SVG_HPP
#define SVGSTEIN_CORE_SVG_HPP

#include <cstdint>
#include <vector>

#include "core/errors.hpp"

namespace svgstein::dist {

// Symmetric variance-gamma SVG(r, sigma, mu): scale r > 0, tail sigma > 0,
// location mu.  Density (1/(sigma sqrt(pi) Gamma(r/2))) (|x-mu|/2sigma)^nu K_nu(|x-mu|/sigma)
// with nu = (r-1)/2.
struct SvgParams {
    double r;
    double sigma;
    double mu;

    SvgParams(double r_, double sigma_, double mu_);
    double nu() const { return 0.5 * (r - 1.0); }
    double variance() const { return r * sigma * sigma; }
};

// Variance-gamma VG(r, theta, sigma, mu) with skew theta.
struct VgParams {
    double r;
    double theta;
    double sigma;
    double mu;

    VgParams(double r_, double theta_, double sigma_, double mu_);
    double mean() const { return mu + r * theta; }
    double variance() const { return r * (sigma * sigma + 2.0 * theta * theta); }
};

double svg_pdf(const SvgParams& p, double x);      // singularity_error at x = mu for r <= 1
double svg_log_pdf(const SvgParams& p, double x);  // same domain
double svg_cdf(const SvgParams& p, double x);      // exact 1/2 at the mode
double svg_quantile(const SvgParams& p, double q);
std::vector<double> svg_sample(const SvgParams& p, std::size_t n, std::uint64_t seed);

// E|Z-mu|^k, k > 0.  Derived from the normal/gamma mixture
// Z - mu = sigma sqrt(X) Y, X ~ Gamma(r/2, rate 1/2), Y ~ N(0,1):
//   E|Z-mu|^k = 2^k sigma^k Gamma((r+k)/2) Gamma((k+1)/2) / (sqrt(pi) Gamma(r/2)).
// Returns r sigma^2 exactly at k = 2.
double svg_absolute_moment(const SvgParams& p, double k);

struct SvgCumulants {
    double k2, k4, k6;
};
SvgCumulants svg_cumulants(const SvgParams& p);  // (r s^2, 6 r s^4, 120 r s^6)

// E[Z 1(Z > u)]; closed form via int_u^inf t^{nu+1} K_nu(t) dt = u^{nu+1} K_{nu+1}(u).
double svg_upper_partial_mean(const SvgParams& p, double u);

double vg_pdf(const VgParams& p, double x);
double vg_log_pdf(const VgParams& p, double x);
std::vector<double> vg_sample(const VgParams& p, std::size_t n, std::uint64_t seed);

// Tabulated CDF for estimator-heavy code paths.  Built once at construction
// (absolute error ~ 1e-11); immutable afterwards, safe for concurrent reads.
class SvgCdf {
public:
    explicit SvgCdf(const SvgParams& p);
    const SvgParams& params() const { return params_; }
    double cdf(double x) const;
    double quantile(double q) const;
    double upper_partial_mean(double u) const { return svg_upper_partial_mean(params_, u); }

private:
    double canonical_cdf_upper(double z) const;  // z >= 0
    SvgParams params_;
    std::vector<double> ys_, cdf_, pdf_;  // canonical grid on [0, ymax], F and F'
    double ymax_;
};

}  // namespace svgstein::dist

#endif
