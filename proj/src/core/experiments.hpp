// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_CORE_EXPERIMENTS_HPP
#define SVGSTEIN_CORE_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/dist_spec.hpp"
#include "core/svg.hpp"

namespace svgstein::expt {

// rademacher: +-1 equiprobable; skewed: {-1, 2} w.p. {2/3, 1/3} (mean zero,
// nonzero third moment); uniform: U(-sqrt(3), sqrt(3)).
enum class Increment { Rademacher, Skewed, Uniform };
Increment increment_from_string(const std::string& s);
transform::DistributionSpec increment_spec(Increment inc);

struct ResultRow {
    std::string experiment;
    std::uint64_t seed = 0;
    long m = 0, n = 0;        // sizes (d2) / sample size n
    double p = 0.0;           // geometric parameter
    double r = 0.0, sigma = 0.0;
    long trials = 0;
    double empirical_dk = 0.0, empirical_dw = 0.0;
    double bound_dk = 0.0, bound_dw = 0.0;    // <= 0 marks "not applicable"
    double ratio_dk = 0.0, ratio_dw = 0.0;    // empirical/bound where bound > 0
    double se_dk = 0.0, se_dw = 0.0;          // bootstrap standard errors
    double extra = 0.0;                       // per-experiment auxiliary value
    double wall_time_s = 0.0;
};

struct CfRow {
    double t = 0.0;
    double im_phi = 0.0;         // exact Im phi_W(t) from the geometric compound
    double leading = 0.0;        // -(1/6) sqrt(p) t^3 E X^3 / (1 + sigma^2 t^2/2)
    double ratio = 0.0;          // im_phi / leading (0 when leading == 0)
};

// standardised binary 1-tuple co-occurrence statistic
// W = [(X - m/2)/sqrt(m/4)][(Y - n/2)/sqrt(n/4)], X ~ Bin(m,1/2), Y ~ Bin(n,1/2),
// measured against SVG(1,1,0)
ResultRow run_d2(long m, long n, long trials, std::uint64_t seed, int threads = 0);

// W = sqrt(p) sum_{i<=N} X_i, N ~ Geo(p) on {1,2,...}, measured against
// Laplace(0, sigma_X/sqrt(2)) = SVG(2, sigma_X/sqrt(2), 0)
ResultRow run_random_sum(double p, Increment inc, long trials, std::uint64_t seed,
                         int threads = 0);

// exact Im phi_W(t) for the geometric random sum against its small-p
// leading order
std::vector<CfRow> run_cf_diagnostic(double p, Increment inc, const std::vector<double>& t_grid);

ResultRow run_vg_compare(const dist::VgParams& p1, const dist::SvgParams& p2, long trials,
                         std::uint64_t seed);

// KS distance between a centered-equilibrium sample of SVG(r,sigma,0) and the
// SVG cdf; `extra` carries the self-distance baseline of a fresh SVG sample.
ResultRow run_fixed_point(double r, double sigma, long n, std::uint64_t seed);

struct ExperimentConfig {
    std::string experiment = "d2";  // d2|random_sum|cf|vg_compare|fixed_point|inequality
    long m = 1000, n = 1000;
    double p = 0.01;
    long trials = 100000;
    std::uint64_t seed = 1;
    double r = 2.0, sigma = 1.0;
    double r1 = 2.0, theta1 = 0.1, sigma1 = 1.0, mu1 = 0.0;
    double r2 = 2.0, sigma2 = 1.0, mu2 = 0.0;
    std::string x_dist = "rademacher";
    std::vector<double> t_grid = {0.25, 0.5, 1.0, 2.0};
    int threads = 0;
    std::string out_path;        // empty = stdout
    std::string format = "csv";  // csv|json

    static ExperimentConfig from_key_values(const std::string& text);
    std::string to_key_values() const;
};

struct RunOutcome {
    bool bound_violation = false;  // empirical beyond bound + 3 SE where applicable
    std::string output;            // rendered CSV or JSON
};

RunOutcome run_experiment(const ExperimentConfig& cfg);

}  // namespace svgstein::expt

#endif
