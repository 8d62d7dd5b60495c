// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#include "core/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/quadrature.hpp"
#include "core/rng.hpp"

namespace svgstein::transform {

namespace {

void require_mean_zero(const DistributionSpec& w, const char* op) {
    if (std::fabs(w.mean()) > 1e-9 * (1.0 + std::sqrt(w.variance())))
        throw domain_error(std::string(op) + ": requires a mean-zero distribution");
    if (!(w.variance() > 0.0)) throw domain_error(std::string(op) + ": requires Var(W) > 0");
}

}  // namespace

ZeroBias::ZeroBias(const DistributionSpec& w) : var_(w.variance()) {
    require_mean_zero(w, "zero_bias");
    discrete_ = w.kind() == DistributionSpec::Kind::FiniteDiscrete;
    if (discrete_) {
        // G(u) = E[W 1(W>u)] is constant between atoms; W* is the mixture of
        // uniforms on [v_j, v_{j+1}] with weights G(v_j)(v_{j+1}-v_j)/Var
        knots_ = w.values();
        lo_ = knots_.front();
        hi_ = knots_.back();
        double gsum = 0.0;
        for (std::size_t j = 0; j + 1 < knots_.size(); ++j) {
            const double g = w.upper_partial_mean(knots_[j]);
            g_.push_back(g);
            gsum += g * (knots_[j + 1] - knots_[j]) / var_;
            mix_cum_.push_back(gsum);
        }
        if (std::fabs(gsum - 1.0) > 1e-9)
            throw domain_error("zero_bias: interval weights do not sum to 1");
        mix_cum_.back() = 1.0;
        return;
    }
    if (w.kind() == DistributionSpec::Kind::Sampler)
        throw domain_error("zero_bias: sampler specs carry no density information");

    // analytic path: tabulate F*(x) = int G / Var on a uniform grid
    upm_ = [&w](double u) { return w.upper_partial_mean(u); };
    const double sd = std::sqrt(var_);
    lo_ = std::max(w.support_lo(), w.mean() - 80.0 * sd - 10.0);
    hi_ = std::min(w.support_hi(), w.mean() + 80.0 * sd + 10.0);
    const int n = 4097;
    xs_.resize(n);
    fs_.resize(n);
    ds_.resize(n);
    const double h = (hi_ - lo_) / (n - 1);
    std::vector<double> gmid(n - 1);
    for (int i = 0; i < n; ++i) {
        xs_[i] = lo_ + h * i;
        ds_[i] = upm_(xs_[i]) / var_;
    }
    for (int i = 0; i + 1 < n; ++i) gmid[i] = upm_(xs_[i] + 0.5 * h) / var_;
    fs_[0] = 0.0;
    for (int i = 0; i + 1 < n; ++i)  // Simpson panel
        fs_[i + 1] = fs_[i] + h / 6.0 * (ds_[i] + 4.0 * gmid[i] + ds_[i + 1]);
    // normalise the tiny truncation defect
    const double total = fs_.back();
    if (std::fabs(total - 1.0) > 1e-6)
        throw domain_error("zero_bias: tabulated CDF misses mass; support window too small");
    for (auto& f : fs_) f /= total;
    for (auto& d : ds_) d /= total;
}

double ZeroBias::density(double w) const {
    if (w < lo_ || w > hi_) return 0.0;
    if (discrete_) {
        auto it = std::upper_bound(knots_.begin(), knots_.end(), w);
        if (it == knots_.begin() || it == knots_.end()) return 0.0;
        return g_[static_cast<std::size_t>(it - knots_.begin()) - 1] / var_;
    }
    return upm_(w) / var_;
}

double ZeroBias::cdf(double w) const {
    if (w <= lo_) return 0.0;
    if (w >= hi_) return 1.0;
    if (discrete_) {
        auto it = std::upper_bound(knots_.begin(), knots_.end(), w);
        const std::size_t j = static_cast<std::size_t>(it - knots_.begin()) - 1;
        const double base = (j == 0) ? 0.0 : mix_cum_[j - 1];
        return base + g_[j] * (w - knots_[j]) / var_;
    }
    auto it = std::upper_bound(xs_.begin(), xs_.end(), w);
    const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    if (i == 0) return 0.0;
    const double a = xs_[i - 1], b = xs_[i];
    const double t = (w - a) / (b - a);
    const double f0 = fs_[i - 1], f1 = fs_[i];
    const double d0 = ds_[i - 1] * (b - a), d1 = ds_[i] * (b - a);
    const double t2 = t * t, t3 = t2 * t;
    double v = (2 * t3 - 3 * t2 + 1) * f0 + (t3 - 2 * t2 + t) * d0 + (-2 * t3 + 3 * t2) * f1 +
               (t3 - t2) * d1;
    return std::clamp(v, f0, f1);
}

double ZeroBias::quantile(double q) const {
    if (!(q >= 0.0 && q <= 1.0)) throw domain_error("zero_bias quantile: q in [0,1]");
    if (discrete_) {
        auto it = std::lower_bound(mix_cum_.begin(), mix_cum_.end(), q);
        const std::size_t j =
            std::min(static_cast<std::size_t>(it - mix_cum_.begin()), mix_cum_.size() - 1);
        const double base = (j == 0) ? 0.0 : mix_cum_[j - 1];
        const double seg = mix_cum_[j] - base;
        const double t = (seg > 0.0) ? (q - base) / seg : 0.5;
        return knots_[j] + t * (knots_[j + 1] - knots_[j]);
    }
    auto it = std::lower_bound(fs_.begin(), fs_.end(), q);
    std::size_t i = std::min(static_cast<std::size_t>(it - fs_.begin()), fs_.size() - 1);
    double a = (i == 0) ? xs_.front() : xs_[i - 1];
    double b = xs_[i];
    for (int k = 0; k < 60; ++k) {
        const double m = 0.5 * (a + b);
        (cdf(m) < q ? a : b) = m;
    }
    return 0.5 * (a + b);
}

double ZeroBias::sample_one(std::mt19937_64& eng) const {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    return quantile(unif(eng));
}

std::vector<double> ZeroBias::sample(std::size_t n, std::uint64_t seed) const {
    std::vector<double> out(n);
    auto eng = make_engine(seed);
    for (auto& v : out) v = sample_one(eng);
    return out;
}

double zero_bias_density(const DistributionSpec& w, double x) {
    return ZeroBias(w).density(x);
}

CenteredEquilibrium::CenteredEquilibrium(const DistributionSpec& w, double r)
    : w_(w), star_(w), r_(r), sigma2_(w.variance() / r) {
    if (!(r > 0.0)) throw domain_error("centered_equilibrium: r must be > 0");
}

double CenteredEquilibrium::sample_one(std::mt19937_64& eng) const {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    // Beta(r,1) via inverse CDF
    const double b = std::pow(unif(eng), 1.0 / r_);
    return b * star_.sample_one(eng);
}

std::vector<double> CenteredEquilibrium::sample(std::size_t n, std::uint64_t seed) const {
    std::vector<double> out(n);
    auto eng = make_engine(seed);
    for (auto& v : out) v = sample_one(eng);
    return out;
}

double CenteredEquilibrium::density(double x) const {
    // f(w) = (1/sigma^2) int_0^1 t^{r-2} G(w/t) dt; substituting t = u^{1/(r-1)}
    // removes the endpoint weight for r > 1.
    if (!(r_ > 1.0))
        throw domain_error(
            "centered_equilibrium density: direct quadrature needs r > 1 (sample instead)");
    auto G = [&](double u) { return w_.upper_partial_mean(u); };
    if (w_.kind() == DistributionSpec::Kind::FiniteDiscrete) {
        // G(w/t) is piecewise constant in t: integrate t^{r-2} exactly between
        // the atom crossings t = x / v
        const auto& vals = w_.values();
        const double p = r_ - 1.0;
        auto prim = [&](double t) { return std::pow(t, p) / p; };  // int t^{r-2}
        double total = 0.0;
        if (x == 0.0) {
            total = G(0.0) * prim(1.0);
        } else {
            // collect crossing points in (0,1)
            std::vector<double> ts{1.0};
            for (double v : vals) {
                if ((x > 0.0) == (v > 0.0) && v != 0.0) {
                    const double t = x / v;
                    if (t > 0.0 && t < 1.0) ts.push_back(t);
                }
            }
            ts.push_back(0.0);
            std::sort(ts.begin(), ts.end());
            for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
                const double tm = 0.5 * (ts[i] + ts[i + 1]);
                if (tm <= 0.0) continue;
                total += G(x / tm) * (prim(ts[i + 1]) - prim(ts[i]));
            }
        }
        return total / sigma2_;
    }
    // t = u^{1/(r-1)} turns t^{r-2} dt into du/(r-1)
    const double p = 1.0 / (r_ - 1.0);
    auto f = [&](double u) { return G(x / std::pow(u, p)); };
    QuadResult q = integrate_segments(f, {0.0, 0.5, 1.0}, {1e-13, 1e-10, 44, true});
    return q.value * p / sigma2_;
}

std::vector<double> centered_equilibrium_sample(const DistributionSpec& w, double r,
                                                std::size_t n, std::uint64_t seed) {
    return CenteredEquilibrium(w, r).sample(n, seed);
}

double centered_equilibrium_density(const DistributionSpec& w, double r, double x) {
    return CenteredEquilibrium(w, r).density(x);
}

double transform_moment(double e_w_p_plus_2, double variance, double r, double p) {
    if (!(r > 0.0)) throw domain_error("transform_moment: r must be > 0");
    if (!(p >= 0.0)) throw domain_error("transform_moment: p must be >= 0");
    if (!(variance > 0.0)) throw domain_error("transform_moment: variance must be > 0");
    const double sigma2 = variance / r;
    return e_w_p_plus_2 / (sigma2 * (p + 1.0) * (p + r));
}

double g_r_apply(const std::function<double(double)>& f, double r, double x) {
    if (!(r > 0.0)) throw domain_error("g_r_apply: r must be > 0");
    if (x == 0.0) return 0.0;
    QuadOptions opt{1e-13, 1e-11, 44, true};
    if (r == 1.0) {
        // kernel of U B_1 = U1 U2 is -log t
        auto g = [&](double t) { return f(x * t) * std::log(1.0 / t); };
        return x * integrate_graded_left(g, 1e-14, 1.0, opt).value;
    }
    // G_r f(x) = (x/(r-1)) [ int_0^1 f(xt) dt - int_0^1 f(xt) t^{r-1} dt ],
    // second term via u = t^r
    auto plain = [&](double t) { return f(x * t); };
    auto weighted = [&](double u) { return f(x * std::pow(u, 1.0 / r)) / r; };
    const double p0 = integrate(plain, 0.0, 1.0, opt).value;
    const double p1 = integrate(weighted, 0.0, 1.0, opt).value;
    return x / (r - 1.0) * (p0 - p1);
}

}  // namespace svgstein::transform
