// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_CORE_BOUNDS_HPP
#define SVGSTEIN_CORE_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/svg.hpp"

namespace svgstein::bound {

struct BoundReport {
    std::string bound_id;
    double value = 0.0;
    // same formula with unrounded constants, when the headline constant is a
    // printed rounding (e.g. 17.04 for sqrt(2)(17/2 + 2 sqrt(pi)))
    std::optional<double> value_exact_constants;
    bool valid = true;
    std::string notes;
    std::map<std::string, double> inputs;
};

// Kolmogorov / Wasserstein error bounds from a coupling (W, W^{V_r}) of a
// mean-zero, variance r sigma^2 random variable with its centered equilibrium
// transform; Delta = W - W^{V_r}:
//   k_w    : d_K(W,Z)       <= (2 + 3/r + pi G(r/2)/G((r+1)/2)) beta/sigma
//                              + (5/2) C_{r,sigma,4beta} + (10 + 2/r) P(|Delta|>beta)
//   k_v    : d_K(W^{V_r},Z) <= (1 + 3/(2r) + pi G(r/2)/(2 G((r+1)/2))) beta/sigma
//                              + (3 + 1/r) P(|Delta|>beta)
//   w_w    : d_W(W,Z)       <= (9/4)(5 + 1/(r+1)) E|Delta|
//   w_v    : d_W(W^{V_r},Z) <= (1/4)(41 + 9/(r+1)) E|Delta|
//   k_v_e  : d_K(W^{V_r},Z) <= (1/sigma)(1 + 3/(2r) + pi G(r/2)/(2 G((r+1)/2))) E|Delta|
struct CouplingInputs {
    double r = 1.0;
    double sigma = 1.0;
    double beta = 0.0;                        // smoothing radius, > 0
    double p_exceed = 0.0;                    // P(|Delta| > beta)
    std::optional<double> mean_abs_delta;     // E|Delta|, required for the _e bounds
};
std::vector<BoundReport> general_coupling_bounds(const CouplingInputs& in);

// beta = (E[Delta^2])^{1/3}, the choice optimising the Kolmogorov coupling
// bound against Markov's inequality.
double suggest_beta(double e_delta_sq);

// Wasserstein / Kolmogorov bounds between VG(r1,theta1,sigma1,mu1) and
// SVG(r2,sigma2,mu2); the Kolmogorov branch requires mu1 = mu2.  The report
// also carries the first-moment lower bound |r1 theta1 + mu1 - mu2| <= d_W.
std::vector<BoundReport> vg_svg_bounds(const dist::VgParams& p1, const dist::SvgParams& p2);

// d_W(F_n, Z) <= 9/(sigma^2(r+1)) sqrt(kappa6/120 - sigma^2 kappa4/3
//                 + kappa3^2/4 + sigma^4 kappa2), for E F_n^2 = r sigma^2.
// The radicand vanishes identically at the SVG cumulants; values inside the
// double-rounding noise floor of the inputs are reported as exactly zero, and
// a radicand below the floor is an invalid report.
BoundReport six_moment_bound(double r, double sigma, double k2, double k3, double k4, double k6);

// Product of standardised sums W = (sum X_i/sqrt(m))(sum Y_j/sqrt(n)) against
// SVG(1,1,0):
//   product_w: d_W <= (1287/64)(1/sqrt(m) + 1/sqrt(n)) E|X|^3 E|Y|^3
//   product_k: d_K <= {44.33 + 2.02[log(1/(EX^4 EY^4)) + log(mn/(m+n))]}
//                     (1/m + 1/n)^{1/3} (EX^4 EY^4)^{1/3}
//              (requires vanishing third moments and finite fourth moments)
struct ProductCltInputs {
    double m = 0, n = 0;
    double e_abs_x3 = 0, e_abs_y3 = 0;
    std::optional<double> e_x4, e_y4;
    bool third_moments_vanish = false;
};
std::vector<BoundReport> product_clt_bounds(const ProductCltInputs& in);

// Geometric random sum W = sqrt(p) sum_{i<=N} X_i against Laplace(0, sigma/sqrt(2)):
//   randsum_k: d_K <= 17.04 (sqrt(p)/sigma) sup||F^{-1}_X - F^{-1}_{X^L}||
//   randsum_w: d_W <= 12 sqrt(p) (sigma + rho/(3 sigma^2))
// General-N variants (mu_N = E N supplied):
//   randsum_k_gen: d_K <= (17.04/(sigma sqrt(mu))) (quantile_gap + C K)
//   randsum_w_gen: d_W <= 12 mu^{-1/2} (e_xl_gap + sup_sigma_i E|N-M|^{1/2})
struct RandomSumInputs {
    double p_geo = 0.0;                  // geometric parameter in (0,1)
    double sigma = 1.0;                  // Var(X_i) = sigma^2
    std::optional<double> rho;           // sup E|X_i|^3
    std::optional<double> quantile_gap;  // sup ||F^{-1}_{X} - F^{-1}_{X^L}||
    std::optional<double> C, K;          // |X_i| <= C, |N - M| <= K
    std::optional<double> mu_N;          // E N for the general branch
    std::optional<double> e_xl_gap;      // E|X_M - X_M^L| (general branch)
    std::optional<double> e_nm_sqrt;     // sup sigma_i E|N-M|^{1/2} (general branch)
};
std::vector<BoundReport> random_sum_bounds(const RandomSumInputs& in);

}  // namespace svgstein::bound

#endif
