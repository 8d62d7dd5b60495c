// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#include "core/stein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/bessel.hpp"
#include "core/errors.hpp"

namespace svgstein::stein {

namespace sf = svgstein::sf;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

SteinSolution::SteinSolution(SvgParams params, TestFunction h, SteinQuadSettings quad)
    : params_(params), h_(std::move(h)), quad_(quad), nu_(params.nu()) {
    tail_pad_ = 60.0 + 5.0 * std::log1p(nu_ * nu_);
    h_mean_ = canonical_mean();
    piecewise_ = h_.piecewise_linear();
    if (piecewise_) {
        segs_pos_ = build_segments(false);
        segs_neg_ = build_segments(true);
    } else {
        for (double b : h_.breakpoints()) {
            break_pos_.push_back((b - params_.mu) / params_.sigma);
            break_neg_.push_back(-(b - params_.mu) / params_.sigma);
        }
    }
    using Kind = TestFunction::Kind;
    switch (h_.kind) {
        case Kind::Indicator:
        case Kind::SmoothedIndicator:
            htilde_sup_ = std::max(h_mean_, 1.0 - h_mean_);
            break;
        case Kind::Sign: htilde_sup_ = 1.0 + std::fabs(h_mean_); break;
        case Kind::Sine: htilde_sup_ = 1.0 / std::fabs(h_.a) + std::fabs(h_mean_); break;
        case Kind::Constant: htilde_sup_ = 0.0; break;
        case Kind::Lipschitz: htilde_sup_ = h_.htilde_sup.value_or(kInf); break;
    }
}

// E h(Z) for Z ~ SVG(r, sigma, mu)
double SteinSolution::canonical_mean() const {
    using Kind = TestFunction::Kind;
    const SvgParams canon(params_.r, 1.0, 0.0);
    switch (h_.kind) {
        case Kind::Constant: return h_.c;
        case Kind::Indicator: return dist::svg_cdf(params_, h_.z);
        case Kind::Sign: return 1.0 - 2.0 * dist::svg_cdf(params_, 0.0);
        case Kind::Sine: {
            // E sin(a Z) = sin(a mu) (1 + a^2 sigma^2)^{-r/2} via the SVG
            // characteristic function
            const double a = h_.a;
            return std::sin(a * params_.mu) / a *
                   std::exp(-0.5 * params_.r * std::log1p(a * a * params_.sigma * params_.sigma));
        }
        case Kind::SmoothedIndicator: {
            // eps^{-1} int_{a-eps}^{a} F(u) du
            auto f = [&](double u) { return dist::svg_cdf(params_, u); };
            QuadResult q = integrate(f, h_.a - h_.eps, h_.a, {1e-15, 1e-13, 40, true});
            return q.value / h_.eps;
        }
        case Kind::Lipschitz: {
            // int h(mu + sigma t) p0(t) dt with graded panels into the
            // (possibly singular) mode
            auto g = [&](double t) {
                return h_(params_.mu + params_.sigma * t) * dist::svg_pdf(canon, t);
            };
            const double T = tail_pad_;
            QuadOptions opt{1e-14, 1e-12, 44, true};
            double v = integrate_graded_left([&](double t) { return g(t); }, 1e-12, 1.0, opt).value;
            v += integrate_graded_left([&](double t) { return g(-t); }, 1e-12, 1.0, opt).value;
            v += integrate_segments([&](double t) { return g(t); }, {1.0, 10.0, T}, opt).value;
            v += integrate_segments([&](double t) { return g(-t); }, {1.0, 10.0, T}, opt).value;
            return v;
        }
    }
    return 0.0;
}

// canonical centered test function htilde-hat(t) = h(mu + sigma t) - Eh,
// mirrored when `reflected`
double SteinSolution::hcan(double t, bool reflected) const {
    const double y = reflected ? -t : t;
    return h_(params_.mu + params_.sigma * y) - h_mean_;
}

std::vector<SteinSolution::PwSeg> SteinSolution::build_segments(bool reflected) const {
    // piecewise-linear htilde-hat on [0, inf), seg value c0 + c1 t
    using Kind = TestFunction::Kind;
    const double s = reflected ? -params_.sigma : params_.sigma;
    std::vector<double> knots;  // canonical positive-axis knots
    for (double b : h_.breakpoints()) {
        const double t = (b - params_.mu) / s;
        if (t > 0.0 && std::isfinite(t)) knots.push_back(t);
    }
    std::sort(knots.begin(), knots.end());
    knots.push_back(kInf);

    std::vector<PwSeg> segs;
    double lo = 0.0;
    for (double hi : knots) {
        // sample inside the open segment to classify it
        const double mid = std::isfinite(hi) ? 0.5 * (lo + hi) : lo + 1.0;
        double c0 = 0.0, c1 = 0.0;
        if (h_.kind == Kind::SmoothedIndicator) {
            // h = (a - x)/eps on the ramp; as a function of t: (a - mu - s t)/eps
            const double x = params_.mu + s * mid;
            if (x > h_.a - h_.eps && x < h_.a) {
                c0 = (h_.a - params_.mu) / h_.eps - h_mean_;
                c1 = -s / h_.eps;
            } else {
                c0 = hcan(mid, reflected);
            }
        } else {
            c0 = hcan(mid, reflected);
        }
        segs.push_back({lo, hi, c0, c1});
        lo = hi;
    }
    return segs;
}

double SteinSolution::abar_piecewise(double y, const std::vector<PwSeg>& segs) const {
    // e^{-y} int_0^y t^nu I_nu(t) htilde(t) dt, segment by segment through
    // the exactly-integrated weights L_w(t) = int_0^t s^{nu+w} I_nu(s) ds
    double total = 0.0;
    auto lw = [&](double t, int w) {
        if (t <= 0.0) return 0.0;
        return std::exp(sf::int_i_lower(nu_, t, w, true).log_abs() + (t - y));
    };
    for (const auto& s : segs) {
        const double a = std::max(0.0, s.lo), b = std::min(y, s.hi);
        if (b <= a) continue;
        if (s.c0 != 0.0) total += s.c0 * (lw(b, 0) - lw(a, 0));
        if (s.c1 != 0.0) total += s.c1 * (lw(b, 1) - lw(a, 1));
    }
    return total;
}

double SteinSolution::bbar_piecewise(double y, const std::vector<PwSeg>& segs) const {
    // e^{+y} int_y^inf t^nu K_nu(t) htilde(t) dt
    double total = 0.0;
    auto t1 = [&](double t) {  // e^{y} t^{nu+1} K_{nu+1}(t)
        return std::exp((nu_ + 1.0) * std::log(t) +
                        sf::bessel_k(nu_ + 1.0, t, true).log_abs() + (y - t));
    };
    for (const auto& s : segs) {
        const double a = std::max(y, s.lo);
        const double b = s.hi;
        if (b <= a) continue;
        if (s.c0 != 0.0) {
            double seg;
            if (std::isfinite(b)) {
                seg = sf::int_k_segment(nu_, a, b, 0, true).value() * std::exp(y - a);
            } else {
                seg = sf::int_k_tail(nu_, a, 0, true).value() * std::exp(y - a);
            }
            total += s.c0 * seg;
        }
        if (s.c1 != 0.0) {
            // int_a^b t^{nu+1} K_nu dt = [a^{nu+1} K_{nu+1}(a) - b^{nu+1} K_{nu+1}(b)]
            const double hi_part = std::isfinite(b) ? t1(b) : 0.0;
            total += s.c1 * ((a > 0.0 ? t1(a) : std::exp((nu_)*std::log(2.0) +
                                                         sf::log_gamma(nu_ + 1.0) + y)) -
                             hi_part);
        }
    }
    return total;
}

double SteinSolution::abar_generic(double y, bool reflected) const {
    if (y <= 0.0) return 0.0;
    auto f = [&](double t) {
        return std::exp(nu_ * std::log(t) + sf::bessel_i(nu_, t, true).log_abs() + (t - y)) *
               hcan(t, reflected);
    };
    QuadOptions opt{quad_.abs_tol, quad_.rel_tol, quad_.max_depth, true};
    const auto& breaks = reflected ? break_neg_ : break_pos_;
    std::vector<double> pts{0.0, y};
    for (double b : breaks)
        if (b > 0.0 && b < y) pts.push_back(b);
    // oscillation-aware split for sine test functions
    if (h_.kind == TestFunction::Kind::Sine) {
        const double period = 2.0 * M_PI / (std::fabs(h_.a) * params_.sigma);
        for (double t = period; t < y; t += period) pts.push_back(t);
    }
    double total = 0.0;
    if (nu_ < 0.0) {
        // absorb the integrable t^{2nu} weight near zero: u = t^{2nu+1}
        const double d = std::min(y, 1.0);
        const double p = 2.0 * nu_ + 1.0;
        auto fsub = [&](double u) {
            const double t = std::pow(u, 1.0 / p);
            return std::exp(sf::bessel_i(nu_, t, true).log_abs() - nu_ * std::log(t) + (t - y)) *
                   hcan(t, reflected) / p;
        };
        total += integrate(fsub, 0.0, std::pow(d, p), opt).value;
        pts.erase(std::remove_if(pts.begin(), pts.end(), [&](double t) { return t < d; }),
                  pts.end());
        pts.push_back(d);
        if (y > d) total += integrate_segments(f, pts, opt).value;
    } else {
        total += integrate_segments(f, pts, opt).value;
    }
    return total;
}

double SteinSolution::bbar_generic(double y, bool reflected) const {
    auto f = [&](double t) {
        return std::exp(nu_ * std::log(t) + sf::bessel_k(nu_, t, true).log_abs() - (t - y)) *
               hcan(t, reflected);
    };
    QuadOptions opt{quad_.abs_tol, quad_.rel_tol, quad_.max_depth, true};
    const double top = y + tail_pad_;
    const auto& breaks = reflected ? break_neg_ : break_pos_;
    std::vector<double> pts{y, top};
    for (double b : breaks)
        if (b > y && b < top) pts.push_back(b);
    if (h_.kind == TestFunction::Kind::Sine) {
        const double period = 2.0 * M_PI / (std::fabs(h_.a) * params_.sigma);
        for (double t = y + period; t < top; t += period) pts.push_back(t);
    }
    double total = 0.0;
    const double inner = 1e-3;
    if (y < inner) {
        if (nu_ < 0.0) {
            // absorb the t^{2nu} weight exactly: u = t^{2nu+1}
            const double p = 2.0 * nu_ + 1.0;
            auto fsub = [&](double u) {
                const double t = std::pow(u, 1.0 / p);
                return std::exp(sf::bessel_k(nu_, t, true).log_abs() - nu_ * std::log(t) -
                                (t - y)) *
                       hcan(t, reflected) / p;
            };
            total += integrate(fsub, std::pow(y > 0.0 ? y : 0.0, p), std::pow(inner, p), opt).value;
        } else {
            // bounded (nu > 0) or log-singular (nu = 0) integrand: graded panels;
            // the sliver below 1e-25 contributes O(1e-23) at most
            total += integrate_graded_left(f, std::max(y, 1e-25), inner, opt).value;
        }
        pts.erase(std::remove_if(pts.begin(), pts.end(), [&](double t) { return t < inner; }),
                  pts.end());
        pts.push_back(inner);
    }
    total += integrate_segments(f, pts, opt).value;
    return total;
}

SteinSolution::Parts SteinSolution::parts_at(double y, bool reflected) const {
    Parts p;
    p.abar = piecewise_ ? abar_piecewise(y, reflected ? segs_neg_ : segs_pos_)
                        : abar_generic(y, reflected);
    p.bbar = piecewise_ ? bbar_piecewise(y, reflected ? segs_neg_ : segs_pos_)
                        : bbar_generic(y, reflected);
    p.log_ih = sf::bessel_i(nu_, y, true).log_abs();
    p.log_i1h = sf::bessel_i(nu_ + 1.0, y, true).log_abs();
    p.log_kh = sf::bessel_k(nu_, y, true).log_abs();
    p.log_k1h = sf::bessel_k(nu_ + 1.0, y, true).log_abs();
    return p;
}

namespace {
double combine(double log_pref, double amount) {
    if (amount == 0.0) return 0.0;
    return (amount > 0 ? 1.0 : -1.0) * std::exp(log_pref + std::log(std::fabs(amount)));
}
}  // namespace

SteinSolution::Eval SteinSolution::evaluate(double x) const {
    Eval e;
    const double y0 = (x - params_.mu) / params_.sigma;
    const bool reflected = y0 < 0.0;
    const double y = std::fabs(y0);
    const double sgn = reflected ? -1.0 : 1.0;
    const double sigma = params_.sigma;
    const double r = params_.r;
    e.htilde = htilde(x);

    if (y == 0.0) {
        // limits at the mode: f continuous, f' one-sided.  The K-side term of
        // fhat vanishes as y -> 0 and the I-side prefactor tends to
        // 1/(2^nu Gamma(nu+1)).
        const double b0 = piecewise_ ? bbar_piecewise(0.0, segs_pos_) : bbar_generic(0.0, false);
        const double fhat = -b0 * std::exp(-nu_ * std::log(2.0) - sf::log_gamma(nu_ + 1.0));
        e.f = fhat / sigma;
        e.d1 = (h_.one_sided(params_.mu, +1) - h_mean_) / (sigma * sigma * r);
        e.d2 = std::numeric_limits<double>::quiet_NaN();
        e.tr = e.htilde;  // sigma^2 T_r f' = htilde + 0 * f
        e.xf3 = 0.0;
        return e;
    }

    const Parts p = parts_at(y, reflected);
    const double lyn = nu_ * std::log(y);
    // fhat = -(Khat/y^nu) Abar - (Ihat/y^nu) Bbar
    const double fhat = -(combine(p.log_kh - lyn, p.abar) + combine(p.log_ih - lyn, p.bbar));
    // fhat' = (Khat_{nu+1}/y^nu) Abar - (Ihat_{nu+1}/y^nu) Bbar
    const double fhat1 = combine(p.log_k1h - lyn, p.abar) - combine(p.log_i1h - lyn, p.bbar);
    const double hty = hcan(y, reflected);
    // fhat'' by the differentiated representation (cancellation-free grouping):
    //   -(Khat/y^nu + (2nu+1) Khat_{nu+1}/y^{nu+1}) Abar
    //   -(Ihat/y^nu - (2nu+1) Ihat_{nu+1}/y^{nu+1}) Bbar + htilde(y)/y
    const double kbr = std::exp(p.log_kh - lyn) + (2.0 * nu_ + 1.0) * std::exp(p.log_k1h - lyn) / y;
    const double ibr = std::exp(p.log_ih - lyn) - (2.0 * nu_ + 1.0) * std::exp(p.log_i1h - lyn) / y;
    const double fhat2_repr = -kbr * p.abar - ibr * p.bbar + hty / y;

    e.f = sgn * fhat / sigma;
    e.d1 = fhat1 / (sigma * sigma);
    // ODE identity: fhat'' = (htilde + y fhat - r fhat')/y
    const double fhat2_ode = (hty + y * fhat - r * fhat1) / y;
    e.d2 = sgn * fhat2_ode / (sigma * sigma * sigma);
    e.tr = (y * fhat2_repr + r * fhat1) / (sigma * sigma);
    // y fhat''' = hhat'(y) + fhat + y fhat' - (r+1) fhat'' (differentiated equation);
    // hhat'(y) = sigma h'(x) with the reflection folded in
    const double hder = sgn * params_.sigma * h_.derivative(x);
    const double yf3 = hder + fhat + y * fhat1 - (r + 1.0) * fhat2_ode;
    e.xf3 = sgn * yf3 / (sigma * sigma * sigma);
    return e;
}

double SteinSolution::solve(double x) const { return evaluate(x).f; }
double SteinSolution::solve_d1(double x) const { return evaluate(x).d1; }

double SteinSolution::solve_d1_limit(int side) const {
    const double h0 = h_.one_sided(params_.mu, side >= 0 ? +1 : -1) - h_mean_;
    return h0 / (params_.sigma * params_.sigma * params_.r);
}

double SteinSolution::solve_d2(double x) const {
    if (x == params_.mu)
        throw domain_error("solve_d2: f'' is evaluated away from x = mu (divide by x - mu)");
    return evaluate(x).d2;
}

double SteinSolution::apply_t_r(double x) const { return evaluate(x).tr; }

double SteinSolution::residual(double x) const {
    const double sigma = params_.sigma;
    const double step = 1e-5 * (1.0 + std::fabs(x - params_.mu));
    const double d2_fd = (solve_d1(x + step) - solve_d1(x - step)) / (2.0 * step);
    return sigma * sigma * (x - params_.mu) * d2_fd + sigma * sigma * params_.r * solve_d1(x) -
           (x - params_.mu) * solve(x) - htilde(x);
}

}  // namespace svgstein::stein
