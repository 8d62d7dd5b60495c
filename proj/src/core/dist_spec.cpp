// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#include "core/dist_spec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "core/errors.hpp"
#include "core/quadrature.hpp"
#include "core/rng.hpp"
#include "core/svg.hpp"

namespace svgstein::transform {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

DistributionSpec DistributionSpec::finite_discrete(std::vector<double> values,
                                                   std::vector<double> probs) {
    if (values.empty() || values.size() != probs.size())
        throw domain_error("finite_discrete: need matching nonempty values/probs");
    // sort atoms jointly
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return values[a] < values[b]; });

    DistributionSpec d;
    d.kind_ = Kind::FiniteDiscrete;
    double psum = 0.0, m1 = 0.0, m2 = 0.0;
    for (auto i : idx) {
        if (!(probs[i] >= 0.0)) throw domain_error("finite_discrete: negative probability");
        d.values_.push_back(values[i]);
        d.probs_.push_back(probs[i]);
        psum += probs[i];
        m1 += values[i] * probs[i];
        m2 += values[i] * values[i] * probs[i];
    }
    if (std::fabs(psum - 1.0) > 1e-12)
        throw domain_error("finite_discrete: probabilities must sum to 1");
    d.mean_ = m1;
    d.variance_ = m2 - m1 * m1;
    d.lo_ = d.values_.front();
    d.hi_ = d.values_.back();
    d.cum_.resize(d.probs_.size());
    std::partial_sum(d.probs_.begin(), d.probs_.end(), d.cum_.begin());
    return d;
}

DistributionSpec DistributionSpec::analytic(std::function<double(double)> pdf, double lo,
                                            double hi, double mean, double variance,
                                            std::function<double(double)> upper_partial_mean,
                                            std::function<double(double)> cdf,
                                            std::function<double(std::mt19937_64&)> sampler) {
    if (!pdf) throw domain_error("analytic: pdf required");
    if (!(variance > 0.0)) throw domain_error("analytic: variance must be > 0");
    DistributionSpec d;
    d.kind_ = Kind::AnalyticDensity;
    d.pdf_ = std::move(pdf);
    d.lo_ = lo;
    d.hi_ = hi;
    d.mean_ = mean;
    d.variance_ = variance;
    d.upm_ = std::move(upper_partial_mean);
    d.cdf_ = std::move(cdf);
    d.gen_ = std::move(sampler);

    // declared moments must match the density
    const double W = d.quad_window();
    const double a = std::max(lo, mean - W), b = std::min(hi, mean + W);
    QuadOptions opt{1e-11, 1e-9, 40, true};
    const double mass = integrate_segments(d.pdf_, {a, mean, b}, opt).value;
    const double m1 =
        integrate_segments([&](double t) { return t * d.pdf_(t); }, {a, mean, b}, opt).value;
    const double m2 = integrate_segments([&](double t) { return (t - mean) * (t - mean) * d.pdf_(t); },
                                         {a, mean, b}, opt).value;
    if (std::fabs(mass - 1.0) > 1e-6) throw domain_error("analytic: density does not integrate to 1");
    const double sd = std::sqrt(variance);
    if (std::fabs(m1 - mean) > 1e-6 * (1.0 + sd))
        throw domain_error("analytic: declared mean inconsistent with density");
    if (std::fabs(m2 - variance) > 1e-5 * variance)
        throw domain_error("analytic: declared variance inconsistent with density");
    return d;
}

DistributionSpec DistributionSpec::sampler(std::function<double(std::mt19937_64&)> gen,
                                           double mean, double variance) {
    if (!gen) throw domain_error("sampler: generator required");
    DistributionSpec d;
    d.kind_ = Kind::Sampler;
    d.gen_ = std::move(gen);
    d.mean_ = mean;
    d.variance_ = variance;
    d.lo_ = -kInf;
    d.hi_ = kInf;
    return d;
}

DistributionSpec DistributionSpec::svg(double r, double sigma) {
    dist::SvgParams p(r, sigma, 0.0);
    DistributionSpec d;
    d.kind_ = Kind::AnalyticDensity;
    d.lo_ = -kInf;
    d.hi_ = kInf;
    d.mean_ = 0.0;
    d.variance_ = p.variance();
    d.pdf_ = [p](double x) { return dist::svg_pdf(p, x); };
    d.cdf_ = [p](double x) { return dist::svg_cdf(p, x); };
    d.upm_ = [p](double u) { return dist::svg_upper_partial_mean(p, u); };
    d.gen_ = [p](std::mt19937_64& eng) {
        std::gamma_distribution<double> gamma(0.5 * p.r, 2.0);
        std::normal_distribution<double> normal(0.0, 1.0);
        return p.sigma * std::sqrt(gamma(eng)) * normal(eng);
    };
    return d;
}

DistributionSpec DistributionSpec::rademacher() {
    return finite_discrete({-1.0, 1.0}, {0.5, 0.5});
}

double DistributionSpec::quad_window() const {
    // generous window for subexponential tails; bounded supports use [lo, hi]
    return 80.0 * std::sqrt(variance_) + 10.0;
}

double DistributionSpec::pdf(double x) const {
    if (kind_ != Kind::AnalyticDensity) throw domain_error("pdf: not an analytic density");
    if (x < lo_ || x > hi_) return 0.0;
    return pdf_(x);
}

double DistributionSpec::cdf(double x) const {
    switch (kind_) {
        case Kind::FiniteDiscrete: {
            auto it = std::upper_bound(values_.begin(), values_.end(), x);
            if (it == values_.begin()) return 0.0;
            return cum_[static_cast<std::size_t>(it - values_.begin()) - 1];
        }
        case Kind::AnalyticDensity: {
            if (cdf_) return cdf_(x);
            if (x <= lo_) return 0.0;
            if (x >= hi_) return 1.0;
            const double a = std::max(lo_, mean_ - quad_window());
            if (x <= a) return 0.0;
            return integrate_segments(pdf_, {a, std::min(x, mean_), x}, {1e-12, 1e-10, 40, true})
                .value;
        }
        case Kind::Sampler: throw domain_error("cdf: unavailable for sampler specs");
    }
    return 0.0;
}

double DistributionSpec::upper_partial_mean(double u) const {
    switch (kind_) {
        case Kind::FiniteDiscrete: {
            double g = 0.0;
            for (std::size_t i = values_.size(); i-- > 0;) {
                if (values_[i] > u) g += values_[i] * probs_[i];
                else break;
            }
            return g;
        }
        case Kind::AnalyticDensity: {
            if (upm_) return upm_(u);
            const double b = std::min(hi_, mean_ + quad_window());
            if (u >= b) return 0.0;
            return integrate_segments([&](double t) { return t * pdf_(t); },
                                      {u, std::min(std::max(u, mean_), b), b},
                                      {1e-12, 1e-10, 40, true})
                .value;
        }
        case Kind::Sampler:
            throw domain_error("upper_partial_mean: unavailable for sampler specs");
    }
    return 0.0;
}

double DistributionSpec::sample_one(std::mt19937_64& eng) const {
    switch (kind_) {
        case Kind::FiniteDiscrete: {
            std::uniform_real_distribution<double> unif(0.0, 1.0);
            const double u = unif(eng);
            auto it = std::lower_bound(cum_.begin(), cum_.end(), u);
            const auto i = std::min(static_cast<std::size_t>(it - cum_.begin()),
                                    values_.size() - 1);
            return values_[i];
        }
        case Kind::AnalyticDensity:
        case Kind::Sampler:
            if (!gen_) throw domain_error("sample: no sampler attached to this spec");
            return gen_(eng);
    }
    return 0.0;
}

std::vector<double> DistributionSpec::sample(std::size_t n, std::uint64_t seed) const {
    std::vector<double> out(n);
    auto eng = make_engine(seed);
    for (auto& v : out) v = sample_one(eng);
    return out;
}

DistributionSpec DistributionSpec::square_bias_discrete() const {
    if (kind_ != Kind::FiniteDiscrete)
        throw domain_error("square_bias_discrete: discrete spec required");
    const double m2 = variance_ + mean_ * mean_;
    std::vector<double> vals = values_, probs(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        probs[i] = values_[i] * values_[i] * probs_[i] / m2;
    return finite_discrete(std::move(vals), std::move(probs));
}

}  // namespace svgstein::transform
