// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#include "core/bounds.hpp"

#include <cmath>

#include "core/bessel.hpp"
#include "core/distances.hpp"
#include "core/errors.hpp"

namespace svgstein::bound {

namespace sf = svgstein::sf;

namespace {

double gamma_ratio(double a, double b) { return std::exp(sf::log_gamma(a) - sf::log_gamma(b)); }

// two-product compensated accumulation for the six-moment radicand
struct DD {
    double hi = 0.0, lo = 0.0;
    void add(double x) {
        // Kahan-Neumaier
        const double t = hi + x;
        if (std::fabs(hi) >= std::fabs(x))
            lo += (hi - t) + x;
        else
            lo += (x - t) + hi;
        hi = t;
    }
    double value() const { return hi + lo; }
};

}  // namespace

double suggest_beta(double e_delta_sq) {
    if (!(e_delta_sq >= 0.0)) throw domain_error("suggest_beta: E[Delta^2] must be >= 0");
    return std::cbrt(e_delta_sq);
}

std::vector<BoundReport> general_coupling_bounds(const CouplingInputs& in) {
    if (!(in.r > 0.0) || !(in.sigma > 0.0))
        throw domain_error("general_coupling_bounds: r, sigma must be > 0");
    if (!(in.beta > 0.0)) throw domain_error("general_coupling_bounds: beta must be > 0");
    if (in.p_exceed < 0.0 || in.p_exceed > 1.0)
        throw domain_error("general_coupling_bounds: p_exceed must lie in [0,1]");
    const double r = in.r, s = in.sigma, beta = in.beta, pe = in.p_exceed;
    const double gr = gamma_ratio(0.5 * r, 0.5 * (r + 1.0));
    const dist::SvgParams target(r, s, 0.0);

    std::vector<BoundReport> out;
    {
        BoundReport b{"k_w"};
        b.value = (2.0 + 3.0 / r + M_PI * gr) * beta / s +
                  2.5 * metric::concentration_bound(target, 4.0 * beta) + (10.0 + 2.0 / r) * pe;
        b.inputs = {{"r", r}, {"sigma", s}, {"beta", beta}, {"p_exceed", pe}};
        out.push_back(std::move(b));
    }
    {
        BoundReport b{"k_v"};
        b.value = (1.0 + 1.5 / r + 0.5 * M_PI * gr) * beta / s + (3.0 + 1.0 / r) * pe;
        b.inputs = {{"r", r}, {"sigma", s}, {"beta", beta}, {"p_exceed", pe}};
        out.push_back(std::move(b));
    }
    for (const char* id : {"w_w", "w_v", "k_v_e"}) {
        BoundReport b{id};
        if (!in.mean_abs_delta) {
            b.valid = false;
            b.notes = "requires mean_abs_delta = E|W - W^{V_r}|";
        } else {
            const double ed = *in.mean_abs_delta;
            if (ed < 0.0) throw domain_error("general_coupling_bounds: E|Delta| must be >= 0");
            if (b.bound_id == "w_w") b.value = 2.25 * (5.0 + 1.0 / (r + 1.0)) * ed;
            if (b.bound_id == "w_v") b.value = 0.25 * (41.0 + 9.0 / (r + 1.0)) * ed;
            if (b.bound_id == "k_v_e") b.value = (1.0 + 1.5 / r + 0.5 * M_PI * gr) * ed / s;
            b.inputs = {{"r", r}, {"sigma", s}, {"mean_abs_delta", ed}};
        }
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<BoundReport> vg_svg_bounds(const dist::VgParams& p1, const dist::SvgParams& p2) {
    const double r1 = p1.r, t1 = p1.theta, s1 = p1.sigma, m1 = p1.mu;
    const double r2 = p2.r, s2 = p2.sigma, m2 = p2.mu;
    const double s1sq = s1 * s1, s2sq = s2 * s2;

    std::vector<BoundReport> out;
    {
        BoundReport b{"vg_svg_w"};
        const double grL = gamma_ratio(0.5 * (r2 + 1.0), 0.5 * r2 + 1.0);
        b.value = 4.5 * (1.0 + 0.5 / (r2 + 1.0)) * std::fabs(s1sq - s2sq) / s2 +
                  (4.5 / s2) * (1.0 / (r2 + 1.0) + 0.5 * M_PI * grL) *
                      (std::fabs(s1sq * r1 - s2sq * r2) + 2.0 * std::fabs(t1 * (m1 - m2))) +
                  (3.5 + 9.0 * s1sq / (s2sq * (r2 + 1.0))) * std::fabs(m1 - m2) +
                  (3.5 * r1 + 13.5 + 4.5 / (r2 + 1.0)) * std::fabs(t1);
        b.notes = "first-moment lower bound |r1 theta1 + mu1 - mu2| <= d_W";
        b.inputs = {{"lower_bound", std::fabs(r1 * t1 + m1 - m2)}};
        out.push_back(std::move(b));
    }
    {
        BoundReport b{"vg_svg_k"};
        if (m1 != m2) {
            b.valid = false;
            b.notes = "Kolmogorov branch requires mu1 = mu2";
        } else {
            const double gr = gamma_ratio(0.5 * r2, 0.5 * (r2 + 1.0));
            b.value = 0.5 * (9.0 + 1.0 / r2) * std::fabs(1.0 - s1sq / s2sq) +
                      2.0 * std::fabs(1.0 - s1sq * r1 / (s2sq * r2)) +
                      (std::fabs(t1) / s2) * (2.0 + (r1 + 1.0) / r2 + 0.5 * M_PI * r1 * gr);
            b.inputs = {{"lower_bound", std::fabs(r1 * t1)}};
        }
        out.push_back(std::move(b));
    }
    return out;
}

BoundReport six_moment_bound(double r, double sigma, double k2, double k3, double k4, double k6) {
    if (!(r > 0.0) || !(sigma > 0.0)) throw domain_error("six_moment_bound: r, sigma > 0");
    const double s2 = sigma * sigma;
    DD rad;
    rad.add(k6 / 120.0);
    rad.add(-s2 * k4 / 3.0);
    rad.add(0.25 * k3 * k3);
    rad.add(s2 * s2 * k2);
    const double radicand = rad.value();
    // rounding noise floor of the four input terms
    const double scale = std::fabs(k6) / 120.0 + std::fabs(s2 * k4) / 3.0 + 0.25 * k3 * k3 +
                         s2 * s2 * std::fabs(k2);
    const double floor = 32.0 * 2.220446049250313e-16 * scale;

    BoundReport b{"six_moment"};
    b.inputs = {{"r", r},  {"sigma", sigma}, {"k2", k2},
                {"k3", k3}, {"k4", k4},      {"k6", k6},
                {"radicand", radicand}};
    if (std::fabs(radicand) <= floor) {
        // indistinguishable from the SVG fixed point at double precision
        b.value = 0.0;
        return b;
    }
    if (radicand < 0.0) {
        b.valid = false;
        b.notes = "negative radicand: cumulants incompatible with the second-moment identity";
        return b;
    }
    b.value = 9.0 / (s2 * (r + 1.0)) * std::sqrt(radicand);
    return b;
}

std::vector<BoundReport> product_clt_bounds(const ProductCltInputs& in) {
    if (!(in.m >= 2.0) || !(in.n >= 2.0))
        throw domain_error("product_clt_bounds: m, n must be >= 2");
    std::vector<BoundReport> out;
    {
        BoundReport b{"product_w"};
        // 1287/64 = (9/4)(5 + 1/2)(13/8); 20.11 as printed
        const double c = 1287.0 / 64.0;
        b.value = c * (1.0 / std::sqrt(in.m) + 1.0 / std::sqrt(in.n)) * in.e_abs_x3 * in.e_abs_y3;
        b.value_exact_constants = b.value;
        b.notes = "constant carried exactly as 1287/64 = 20.109375";
        out.push_back(std::move(b));
    }
    {
        BoundReport b{"product_k"};
        if (!in.third_moments_vanish || !in.e_x4 || !in.e_y4) {
            b.valid = false;
            b.notes = "requires E X^3 = E Y^3 = 0 and finite fourth moments";
        } else {
            const double q4 = *in.e_x4 * *in.e_y4;
            const double inv = 1.0 / in.m + 1.0 / in.n;
            const double logterm = std::log(1.0 / q4) + std::log(in.m * in.n / (in.m + in.n));
            b.value = (44.33 + 2.02 * logterm) * std::cbrt(inv) * std::cbrt(q4);
            // unrounded chain: {A + B log(3/(20 q4 inv))} (20 q4 inv/3)^{1/3} with
            // A = 17 + pi^{3/2} + (10/pi)(1 + log(1/2)), B = 10/(3 pi)
            const double A = 17.0 + std::pow(M_PI, 1.5) + (10.0 / M_PI) * (1.0 + std::log(0.5));
            const double B = 10.0 / (3.0 * M_PI);
            const double e2 = (20.0 / 3.0) * inv * q4;
            b.value_exact_constants = (A + B * std::log(1.0 / e2)) * std::cbrt(e2);
        }
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<BoundReport> random_sum_bounds(const RandomSumInputs& in) {
    const double kKol = 17.04;  // printed rounding of sqrt(2)(17/2 + 2 sqrt(pi))
    const double kKolExact = std::sqrt(2.0) * (8.5 + 2.0 * std::sqrt(M_PI));
    std::vector<BoundReport> out;
    const bool general = in.mu_N.has_value();
    const double mu = general ? *in.mu_N : (in.p_geo > 0.0 ? 1.0 / in.p_geo : 0.0);
    if (!general && !(in.p_geo > 0.0 && in.p_geo < 1.0))
        throw domain_error("random_sum_bounds: p_geo must lie in (0,1)");
    if (!(in.sigma > 0.0)) throw domain_error("random_sum_bounds: sigma must be > 0");

    {
        BoundReport b{general ? "randsum_k_gen" : "randsum_k"};
        std::optional<double> gap = in.quantile_gap;
        if (!gap) {
            b.valid = false;
            b.notes = "requires quantile_gap = sup||F^{-1}_X - F^{-1}_{X^L}|| "
                      "(finite support [a,b] gives the envelope b-a)";
        } else {
            double extra = 0.0;
            if (general) {
                if (in.C && in.K) extra = *in.C * *in.K;
                else if (!(in.K && *in.K == 0.0)) {
                    b.valid = false;
                    b.notes = "general branch needs C (|X_i| <= C) and K (|N-M| <= K), or K = 0";
                }
            }
            if (b.valid) {
                b.value = kKol / (in.sigma * std::sqrt(mu)) * (*gap + extra);
                b.value_exact_constants = kKolExact / (in.sigma * std::sqrt(mu)) * (*gap + extra);
            }
        }
        out.push_back(std::move(b));
    }
    {
        BoundReport b{general ? "randsum_w_gen" : "randsum_w"};
        if (general) {
            if (!in.e_xl_gap) {
                b.valid = false;
                b.notes = "general branch requires e_xl_gap = E|X_M - X_M^L|";
            } else {
                b.value = 12.0 / std::sqrt(mu) * (*in.e_xl_gap + in.e_nm_sqrt.value_or(0.0));
            }
        } else if (!in.rho) {
            b.valid = false;
            b.notes = "requires rho = sup E|X_i|^3";
        } else {
            b.value = 12.0 * std::sqrt(in.p_geo) *
                      (in.sigma + *in.rho / (3.0 * in.sigma * in.sigma));
        }
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace svgstein::bound
