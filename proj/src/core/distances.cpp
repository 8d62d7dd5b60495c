// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#include "core/distances.hpp"

#include <algorithm>
#include <cmath>

#include "core/bessel.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

namespace svgstein::metric {

namespace sf = svgstein::sf;

Target make_svg_target(const dist::SvgParams& p) {
    auto table = std::make_shared<dist::SvgCdf>(p);
    Target t;
    t.cdf = [table](double x) { return table->cdf(x); };
    t.quantile = [table](double q) { return table->quantile(q); };
    t.upper_partial_mean = [table](double u) { return table->upper_partial_mean(u); };
    t.mean = p.mu;
    return t;
}

namespace {

std::vector<double> sorted(std::span<const double> sample) {
    if (sample.empty()) throw domain_error("empirical metric: sample must be nonempty");
    std::vector<double> s(sample.begin(), sample.end());
    std::sort(s.begin(), s.end());
    return s;
}

double ks_statistic(const std::vector<double>& s, const std::function<double(double)>& cdf,
                    const std::vector<double>& atoms) {
    const double n = static_cast<double>(s.size());
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double f = cdf(s[i]);
        d = std::max({d, std::fabs(f - (i + 1) / n), std::fabs(f - i / n)});
    }
    // for a discontinuous target, also probe just left of its atoms
    for (double a : atoms) {
        const double fm = cdf(a - 1e-12 * (1.0 + std::fabs(a)));
        const double fn =
            static_cast<double>(std::upper_bound(s.begin(), s.end(),
                                                 a - 2e-12 * (1.0 + std::fabs(a))) -
                                s.begin()) /
            n;
        d = std::max(d, std::fabs(fm - fn));
    }
    return d;
}

}  // namespace

MetricValue kolmogorov_empirical(std::span<const double> sample, const Target& target) {
    auto s = sorted(sample);
    return {Metric::Kolmogorov, ks_statistic(s, target.cdf, target.atoms), s.size(), 0.0};
}

MetricValue kolmogorov_empirical(std::span<const double> sample,
                                 const std::function<double(double)>& cdf) {
    auto s = sorted(sample);
    return {Metric::Kolmogorov, ks_statistic(s, cdf, {}), s.size(), 0.0};
}

MetricValue wasserstein_empirical(std::span<const double> sample, const Target& target) {
    auto s = sorted(sample);
    const double n = static_cast<double>(s.size());
    const auto& F = target.cdf;
    const auto& G = target.upper_partial_mean;

    // int_a^b F dx = b F(b) - a F(a) - (G(a) - G(b))
    auto int_F = [&](double a, double b, double Fa, double Fb) {
        return b * Fb - a * Fa - (G(a) - G(b));
    };

    double total = 0.0;
    // lower tail: int_{-inf}^{x_(1)} F dx = x F(x) - (mean - G(x))
    const double F1 = F(s.front());
    total += s.front() * F1 - (target.mean - G(s.front()));
    // upper tail: int_{x_(n)}^{inf} (1 - F) dx = G(x) - x (1 - F(x))
    const double Fn = F(s.back());
    total += G(s.back()) - s.back() * (1.0 - Fn);

    double Fa = F1;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const double a = s[i], b = s[i + 1];
        if (b <= a) continue;  // ties
        const double c = (i + 1) / n;
        const double Fb = F(b);
        if (Fb <= c) {
            total += c * (b - a) - int_F(a, b, Fa, Fb);
        } else if (Fa >= c) {
            total += int_F(a, b, Fa, Fb) - c * (b - a);
        } else {
            const double q = std::clamp(target.quantile(c), a, b);
            total += c * (q - a) - int_F(a, q, Fa, c);
            total += int_F(q, b, c, Fb) - c * (b - q);
        }
        Fa = Fb;
    }
    return {Metric::Wasserstein, total, s.size(), 0.0};
}

MetricValue bounded_wasserstein_proxy(std::span<const double> sample, const Target& target) {
    const double dw = wasserstein_empirical(sample, target).value;
    const double dk = kolmogorov_empirical(sample, target).value;
    return {Metric::BoundedWasserstein, std::min(dw, 2.0 * dk), sample.size(), 0.0};
}

double bootstrap_se(std::span<const double> sample, const Target& target, Metric metric, int B,
                    std::uint64_t seed) {
    if (B < 2) throw domain_error("bootstrap_se: need at least 2 resamples");
    auto eng = make_engine(seed, 0xb0075ULL);
    std::uniform_int_distribution<std::size_t> pick(0, sample.size() - 1);
    std::vector<double> vals;
    std::vector<double> re(sample.size());
    for (int b = 0; b < B; ++b) {
        for (auto& v : re) v = sample[pick(eng)];
        switch (metric) {
            case Metric::Kolmogorov: vals.push_back(kolmogorov_empirical(re, target).value); break;
            case Metric::Wasserstein:
                vals.push_back(wasserstein_empirical(re, target).value);
                break;
            case Metric::BoundedWasserstein:
                vals.push_back(bounded_wasserstein_proxy(re, target).value);
                break;
        }
    }
    double m = 0.0;
    for (double v : vals) m += v;
    m /= vals.size();
    double s2 = 0.0;
    for (double v : vals) s2 += (v - m) * (v - m);
    return std::sqrt(s2 / (vals.size() - 1));
}

double kolmogorov_from_wasserstein(const dist::SvgParams& p, double d_w) {
    if (d_w < 0.0) throw domain_error("kolmogorov_from_wasserstein: d_w must be >= 0");
    if (d_w == 0.0 && p.r != 1.0) return 0.0;
    const double s = p.sigma;
    if (p.r > 1.0) {
        const double c = std::exp(sf::log_gamma(0.5 * (p.r - 1.0)) - sf::log_gamma(0.5 * p.r)) /
                         (s * std::sqrt(M_PI));
        return std::sqrt(c * d_w);
    }
    if (p.r == 1.0) {
        if (!(d_w / s < 0.676))
            throw domain_error(
                "kolmogorov_from_wasserstein: r = 1 branch requires d_W/sigma < 0.676 "
                "(the bound is uninformative beyond)");
        if (d_w == 0.0) return 0.0;
        const double brace =
            2.0 + std::log(2.0 / std::sqrt(M_PI)) + 0.5 * std::log(s / d_w);
        return brace * std::sqrt(d_w / (M_PI * s));
    }
    const double c = std::exp(sf::log_gamma(0.5 * (1.0 - p.r)) - 0.5 * std::log(M_PI) -
                              (p.r - 1.0) * std::log(2.0) - sf::log_gamma(0.5 * p.r));
    return 2.0 * std::pow(c, 1.0 / (p.r + 1.0)) * std::pow(d_w / s, p.r / (p.r + 1.0));
}

double concentration_bound(const dist::SvgParams& p, double alpha) {
    if (!(alpha > 0.0)) throw domain_error("concentration_bound: alpha must be > 0");
    const double s = p.sigma;
    if (p.r > 1.0) {
        return alpha / (2.0 * s * std::sqrt(M_PI)) *
               std::exp(sf::log_gamma(0.5 * (p.r - 1.0)) - sf::log_gamma(0.5 * p.r));
    }
    if (p.r == 1.0) return alpha / (M_PI * s) * (1.0 + std::log(2.0 * s / alpha));
    return std::exp(sf::log_gamma(0.5 * (1.0 - p.r)) - 0.5 * std::log(M_PI) -
                    p.r * std::log(2.0) - sf::log_gamma(0.5 * p.r + 1.0)) *
           std::pow(alpha / s, p.r);
}

}  // namespace svgstein::metric
