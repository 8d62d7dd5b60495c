// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#include "core/bessel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "core/errors.hpp"
#include "core/quadrature.hpp"

namespace svgstein::sf {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 2000;
// Power series for I_nu stays in double range (all terms positive, largest
// ~ e^x/sqrt(x)) up to roughly x = 650; beyond that switch to the Hankel
// asymptotic expansion.
constexpr double kSeriesMax = 650.0;

// ---------------------------------------------------------------------------
// gamma helpers for Temme's K series

// g1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu),  g2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2,
// gpl = 1/Gamma(1+mu), gmi = 1/Gamma(1-mu); |mu| <= 1/2.
void gamma_temme(double mu, double& g1, double& g2, double& gpl, double& gmi) {
    gpl = 1.0 / std::tgamma(1.0 + mu);
    gmi = 1.0 / std::tgamma(1.0 - mu);
    g2 = 0.5 * (gmi + gpl);
    if (std::fabs(mu) < 1e-2) {
        // even Taylor series of g1; coefficients from the 1/Gamma expansion
        const double euler = 0.57721566490153286060651209008;
        const double c4 = -0.04200263503409523553;   // coefficient of z^4 in 1/Gamma(z)
        const double c6 = -0.00962197152787697356;   // coefficient of z^6
        const double m2 = mu * mu;
        g1 = -euler - m2 * (c4 + m2 * c6);
    } else {
        g1 = (gmi - gpl) / (2.0 * mu);
    }
}

// ---------------------------------------------------------------------------
// K_mu and K_{mu+1}, scaled by e^x, as logs; |mu| <= 1/2, x > 0.  Log form
// keeps small arguments / large orders within range.

void k_base_pair_log(double mu, double x, double& log_khat, double& log_khat1) {
    if (x <= 2.0) {
        // Temme's series.
        const double x2 = 0.5 * x;
        const double mu2 = mu * mu;
        const double pimu = M_PI * mu;
        const double fact = (std::fabs(pimu) < 1e-30) ? 1.0 : pimu / std::sin(pimu);
        const double d = -std::log(x2);
        const double e = mu * d;
        const double fact2 = (std::fabs(e) < 1e-30) ? 1.0 : std::sinh(e) / e;
        double g1, g2, gpl, gmi;
        gamma_temme(mu, g1, g2, gpl, gmi);
        double ff = fact * (g1 * std::cosh(e) + g2 * fact2 * d);
        double sum = ff;
        const double ee = std::exp(e);
        double p = 0.5 * ee / gpl;
        double q = 0.5 / (ee * gmi);
        double c = 1.0;
        const double d2 = x2 * x2;
        double sum1 = p;
        for (int k = 1; k <= kMaxIter; ++k) {
            ff = (k * ff + p + q) / (k * k - mu2);
            c *= d2 / k;
            p /= (k - mu);
            q /= (k + mu);
            const double del = c * ff;
            sum += del;
            sum1 += c * (p - k * ff);
            if (std::fabs(del) < std::fabs(sum) * kEps) break;
        }
        log_khat = std::log(sum) + x;
        log_khat1 = std::log(sum1) + std::log(2.0 / x) + x;
    } else {
        // Steed's continued fraction CF2 (Thompson-Barnett form).
        const double mu2 = mu * mu;
        double b = 2.0 * (1.0 + x);
        double d = 1.0 / b;
        double h = d, delh = d;
        double q1 = 0.0, q2 = 1.0;
        const double a1 = 0.25 - mu2;
        double q = a1, c = a1, a = -a1;
        double s = 1.0 + q * delh;
        for (int i = 2; i <= kMaxIter; ++i) {
            a -= 2 * (i - 1);
            c = -a * c / i;
            const double qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh = (b * d - 1.0) * delh;
            h += delh;
            const double dels = q * delh;
            s += dels;
            if (std::fabs(dels / s) <= kEps) break;
        }
        h = a1 * h;
        log_khat = 0.5 * std::log(M_PI / (2.0 * x)) - std::log(s);
        log_khat1 = log_khat + std::log((mu + x + 0.5 - h) / x);
    }
}

double log_add(double a, double b) {
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

// K_nu(x), K_{nu+1}(x) scaled by e^x, as ScaledValues; nu >= 0 here.
void k_scaled_pair(double nu, double x, ScaledValue& k_nu, ScaledValue& k_nu1) {
    const int m = static_cast<int>(std::lround(nu));
    const double mu = nu - m;  // |mu| <= 1/2
    double lkl, lkh;
    k_base_pair_log(mu, x, lkl, lkh);
    // upward recurrence K_{j+1} = K_{j-1} + (2 j / x) K_j in log space
    // (all terms positive)
    const double lx = std::log(x);
    double ord = mu;
    for (int j = 0; j < m; ++j) {
        const double lknext = log_add(lkl, std::log(2.0 * (ord + 1.0)) - lx + lkh);
        lkl = lkh;
        lkh = lknext;
        ord += 1.0;
    }
    k_nu = ScaledValue::from_log(1.0, lkl);
    k_nu1 = ScaledValue::from_log(1.0, lkh);
}

// log( e^{-x} I_nu(x) ) by the ascending power series; nu > -1, 0 < x <= kSeriesMax.
double log_i_scaled_series(double nu, double x) {
    const double q = 0.25 * x * x;
    double c = 1.0, sum = 1.0, comp = 0.0;
    for (int k = 0; k < kMaxIter; ++k) {
        c *= q / ((k + 1.0) * (nu + k + 1.0));
        // Kahan summation: the series can run to ~700 terms
        const double y = c - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (c < sum * kEps && k > x) break;
    }
    return nu * std::log(0.5 * x) - log_gamma(nu + 1.0) + std::log(sum) - x;
}

// log( e^{-x} I_nu(x) ) by Hankel's expansion; x > kSeriesMax >> nu^2.
double log_i_scaled_asymptotic(double nu, double x) {
    const double mu4 = 4.0 * nu * nu;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu4 - odd * odd) / (8.0 * k * x);
        sum += term;
        if (std::fabs(term) < kEps * std::fabs(sum)) break;
    }
    return -0.5 * std::log(2.0 * M_PI * x) + std::log(sum);
}

double log_i_scaled(double nu, double x) {
    return (x <= kSeriesMax) ? log_i_scaled_series(nu, x) : log_i_scaled_asymptotic(nu, x);
}

void check_nu_half(double nu, const char* op) {
    if (!(nu > -0.5))
        throw domain_error(std::string(op) + ": requires nu > -1/2, got nu=" + std::to_string(nu));
}

// log of e^{-x} int_0^x t^{nu} I_nu(t) dt via termwise integration of the
// I series: t^{nu} (t/2)^{nu+2k} integrates to x^{2nu+2k+1}/(2^{nu+2k}(2nu+2k+1)).
// Valid for 2 nu + 1 > 0 and x <= kSeriesMax.
double int_i_lower_scaled_series(double nu, double x) {
    const double a0 = 2.0 * nu + 1.0;
    const double q = 0.25 * x * x;
    double c = 1.0, sum = 1.0, comp = 0.0;
    double ak = a0;
    for (int k = 0; k < kMaxIter; ++k) {
        c *= q * ak / ((k + 1.0) * (nu + k + 1.0) * (ak + 2.0));
        ak += 2.0;
        const double y = c - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (c < sum * kEps && k > x) break;
    }
    const double log_t0 = a0 * std::log(x) - nu * std::log(2.0) - std::log(a0) - log_gamma(nu + 1.0);
    return log_t0 + std::log(sum) - x;
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw domain_error("log_gamma: requires x > 0, got x=" + std::to_string(x));
    return std::lgamma(x);
}

ScaledValue bessel_i(double nu, double x, bool scaled) {
    if (x < 0.0) throw domain_error("bessel_i: requires x >= 0");
    if (!(nu > -1.0)) throw domain_error("bessel_i: requires nu > -1");
    if (x == 0.0) {
        if (nu == 0.0) return ScaledValue::from(1.0);
        if (nu > 0.0) return ScaledValue::zero();
        throw domain_error("bessel_i: diverges at x = 0 for nu < 0");
    }
    const double lg = log_i_scaled(nu, x);
    return ScaledValue::from_log(1.0, scaled ? lg : lg + x);
}

ScaledValue bessel_k(double nu, double x, bool scaled) {
    if (!(x > 0.0)) throw domain_error("bessel_k: requires x > 0");
    nu = std::fabs(nu);  // K_{-nu} = K_nu
    ScaledValue k0, k1;
    k_scaled_pair(nu, x, k0, k1);
    return scaled ? k0 : k0.shifted(-x);
}

double bessel_i_scaled_d(double nu, double x) { return bessel_i(nu, x, true).value(); }
double bessel_k_scaled_d(double nu, double x) { return bessel_k(nu, x, true).value(); }

double wronskian_residual(double nu, double x) {
    // I_nu K_{nu+1} + I_{nu+1} K_nu = 1/x; evaluate in scaled space.
    // (the orders must not be folded through |.| jointly: K_{nu+1} != K_{|nu|+1}
    // for negative nu)
    const double li0 = log_i_scaled(nu, x);
    const double li1 = log_i_scaled(nu + 1.0, x);
    const double lk0 = bessel_k(nu, x, true).log_abs();
    const double lk1 = bessel_k(nu + 1.0, x, true).log_abs();
    const double t1 = std::exp(li0 + lk1);
    const double t2 = std::exp(li1 + lk0);
    return (t1 + t2) * x - 1.0;
}

ScaledValue int_i_lower(double nu, double x, int w, bool scaled) {
    check_nu_half(nu, "int_i_lower");
    if (x < 0.0) throw domain_error("int_i_lower: requires x >= 0");
    if (w != 0 && w != 1) throw domain_error("int_i_lower: weight_power must be 0 or 1");
    if (x == 0.0) return ScaledValue::zero();
    if (w == 1) {
        // d/dx [x^{nu+1} I_{nu+1}(x)] = x^{nu+1} I_nu(x), so the integral is exact:
        const double lg = (nu + 1.0) * std::log(x) + log_i_scaled(nu + 1.0, x);
        return ScaledValue::from_log(1.0, scaled ? lg : lg + x);
    }
    if (x <= kSeriesMax) {
        const double lg = int_i_lower_scaled_series(nu, x);
        return ScaledValue::from_log(1.0, scaled ? lg : lg + x);
    }
    // large x: series up to the cutoff plus a damped quadrature remainder
    ScaledValue head = int_i_lower(nu, kSeriesMax, 0, false);
    auto f = [&](double t) { return std::pow(t, nu) * bessel_i_scaled_d(nu, t) * std::exp(t - x); };
    QuadResult tailq = integrate(f, kSeriesMax, x, {1e-300, 1e-12, 48, true});
    ScaledValue tail = ScaledValue::from_log(tailq.value, x);
    ScaledValue total = head + tail;
    return scaled ? total.shifted(-x) : total;
}

ScaledValue int_i_double_lower(double nu, double x, bool scaled) {
    check_nu_half(nu, "int_i_double_lower");
    if (x < 0.0) throw domain_error("int_i_double_lower: requires x >= 0");
    if (x == 0.0) return ScaledValue::zero();
    if (x > kSeriesMax) {
        // mild cancellation is acceptable out here: the two terms differ at O(1/x)
        ScaledValue l0 = int_i_lower(nu, x, 0, true);
        ScaledValue l1 = int_i_lower(nu, x, 1, true);
        ScaledValue d = l0 * x - l1;
        return scaled ? d : d.shifted(x);
    }
    // term k integrates to x^{2nu+2k+2} / ((2nu+2k+1)(2nu+2k+2) 2^{nu+2k} Gamma(nu+k+1) k!)
    const double q = 0.25 * x * x;
    double a1 = 2.0 * nu + 1.0, a2 = 2.0 * nu + 2.0;
    double c = 1.0, sum = 1.0, comp = 0.0;
    for (int k = 0; k < kMaxIter; ++k) {
        c *= q * a1 * a2 / ((k + 1.0) * (nu + k + 1.0) * (a1 + 2.0) * (a2 + 2.0));
        a1 += 2.0;
        a2 += 2.0;
        const double y = c - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (c < sum * kEps && k > x) break;
    }
    const double lg = (2.0 * nu + 2.0) * std::log(x) - nu * std::log(2.0) -
                      std::log(2.0 * nu + 1.0) - std::log(2.0 * nu + 2.0) - log_gamma(nu + 1.0) +
                      std::log(sum);
    return ScaledValue::from_log(1.0, scaled ? lg - x : lg);
}

ScaledValue int_k_segment(double nu, double a, double b, int w, bool scaled) {
    check_nu_half(nu, "int_k_segment");
    if (a < 0.0 || b < a) throw domain_error("int_k_segment: requires 0 <= a <= b");
    if (w != 0 && w != 1) throw domain_error("int_k_segment: weight_power must be 0 or 1");
    if (a == b) return ScaledValue::zero();
    if (w == 1) {
        ScaledValue lo = int_k_tail(nu, a, 1, false);
        ScaledValue hi = int_k_tail(nu, b, 1, false);
        ScaledValue seg = lo - hi;
        return scaled ? seg.shifted(a) : seg;
    }
    const double anu = std::fabs(nu);
    // integrand relative to e^{-a}: t^{nu} Khat_nu(t) e^{-(t-a)}
    auto f = [&](double t) {
        return std::exp(nu * std::log(t) + bessel_k(anu, t, true).log_abs() - (t - a));
    };
    QuadOptions opt{1e-300, 5e-13, 48, true};
    double total = 0.0;
    double lo = a;
    if (a < 1e-3) {
        // the weight behaves like t^{2nu} (nu < 0) or log t (nu = 0) near zero
        const double inner = std::min(b, 1e-3);
        if (nu < 0.0) {
            const double p = 2.0 * nu + 1.0;
            auto fsub = [&](double u) {
                const double t = std::pow(u, 1.0 / p);
                return std::exp(bessel_k(anu, t, true).log_abs() - nu * std::log(t) - (t - a)) / p;
            };
            total += integrate(fsub, std::pow(a, p), std::pow(inner, p), opt).value;
        } else {
            // bounded (or log-singular) integrand: graded panels, negligible sliver
            total += integrate_graded_left(f, std::max(a, 1e-25), inner, opt).value;
        }
        lo = inner;
    }
    if (b > lo) {
        if (lo < 1.0) {
            const double mid = std::min(b, 1.0);
            total += integrate_graded_left(f, lo, mid, opt).value;
            if (b > mid) total += integrate(f, mid, b, opt).value;
        } else {
            total += integrate(f, lo, b, opt).value;
        }
    }
    ScaledValue seg = ScaledValue::from_log(total, 0.0);
    return scaled ? seg : seg.shifted(-a);
}

ScaledValue int_k_tail(double nu, double x, int w, bool scaled) {
    check_nu_half(nu, "int_k_tail");
    if (x < 0.0) throw domain_error("int_k_tail: requires x >= 0");
    if (w != 0 && w != 1) throw domain_error("int_k_tail: weight_power must be 0 or 1");
    const double anu = std::fabs(nu);
    if (w == 1 && x > 0.0) {
        // d/dx [x^{nu+1} K_{nu+1}(x)] = -x^{nu+1} K_nu(x): the tail is exact.
        ScaledValue k0, k1;
        k_scaled_pair(anu + 1.0, x, k0, k1);  // k0 = e^x K_{nu+1}(x)
        ScaledValue v = ScaledValue::from_log(1.0, (nu + 1.0) * std::log(x) + k0.log_abs());
        return scaled ? v : v.shifted(-x);
    }
    if (x == 0.0) {
        // int_0^inf t^{nu+w} K_nu(t) dt = 2^{nu+w-1} Gamma((2nu+w+1)/2) Gamma((w+1)/2)
        const double lg = (nu + w - 1.0) * std::log(2.0) + log_gamma(nu + 0.5 * (w + 1.0)) +
                          log_gamma(0.5 * (w + 1.0));
        return ScaledValue::from_log(1.0, lg);
    }
    // w == 0, x > 0: near part by graded/adaptive panels, far tail damped by e^{-(t-x)}
    const double tail_len = 60.0 + 5.0 * std::log1p(nu * nu) + std::log1p(x);
    const double top = x + tail_len;
    auto f = [&](double t) {
        return std::exp(nu * std::log(t) + bessel_k(anu, t, true).log_abs() - (t - x));
    };
    QuadOptions opt{1e-300, 5e-13, 48, true};
    double total = 0.0;
    if (x < 1.0) {
        total += integrate_graded_left(f, x, std::min(top, 1.0), opt).value;
        if (top > 1.0) total += integrate_segments(f, {1.0, std::min(top, x + 10.0), top}, opt).value;
    } else {
        total += integrate_segments(f, {x, x + 2.0, x + 10.0, top}, opt).value;
    }
    ScaledValue v = ScaledValue::from_log(total, 0.0);
    return scaled ? v : v.shifted(-x);
}

}  // namespace svgstein::sf
