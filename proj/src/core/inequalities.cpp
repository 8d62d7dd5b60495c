// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#include "core/inequalities.hpp"

#include <cmath>
#include <functional>

#include "core/bessel.hpp"
#include "core/errors.hpp"

namespace svgstein::sf {
namespace {

struct Entry {
    const char* id;
    // returns {lhs, rhs}; either may use scaled building blocks internally
    std::function<std::pair<double, double>(double nu, double x)> eval;
    std::function<bool(double nu, double x)> applies;
};

double log_i(double nu, double x) { return bessel_i(nu, x, true).log_abs() + x; }
double log_k(double nu, double x) { return bessel_k(nu, x, true).log_abs() - x; }
double log_int_i0(double nu, double x) { return int_i_lower(nu, x, 0, true).log_abs() + x; }
double log_int_k0(double nu, double x) { return int_k_tail(nu, x, 0, true).log_abs() - x; }

// rhs - lhs of the dblI inequality by termwise subtraction of the two power
// series.  The k = 0 terms cancel identically and every later difference term
// is positive, so this is cancellation-free:
//   d_k = (nu+2)/(2(2nu+1)) - (nu+k+1)(nu+k+2)/((2nu+2k+1)(2nu+2k+2)) > 0, k >= 1.
double dbl_i_gap_series(double nu, double x) {
    const double q = 0.25 * x * x;
    const double head = (nu + 2.0) / (2.0 * (2.0 * nu + 1.0));
    double t = std::exp((2.0 * nu + 4.0) * std::log(x) - (nu + 2.0) * std::log(2.0) -
                        log_gamma(nu + 4.0) - x);  // T_1, damped by e^{-x}
    double sum = 0.0;
    for (int k = 1; k < 400; ++k) {
        const double dk = head - (nu + k + 1.0) * (nu + k + 2.0) /
                                     ((2.0 * nu + 2.0 * k + 1.0) * (2.0 * nu + 2.0 * k + 2.0));
        const double term = t * dk;
        sum += term;
        if (term < sum * 1e-17 && k > x) break;
        t *= q / ((k + 1.0) * (nu + k + 3.0));
    }
    return sum;
}

}  // namespace

std::vector<double> default_nu_grid() { return {-0.45, -0.25, 0.0, 0.5, 1.0, 2.5, 5.0, 12.0, 24.5}; }

std::vector<double> default_x_grid(int n_x) {
    std::vector<double> xs;
    const double lo = std::log(1e-6), hi = std::log(500.0);
    for (int i = 0; i < n_x; ++i) xs.push_back(std::exp(lo + (hi - lo) * i / (n_x - 1.0)));
    return xs;
}

std::vector<InequalityReport> inequality_suite(const std::vector<double>& nu_grid,
                                               const std::vector<double>& x_grid) {
    for (double nu : nu_grid)
        if (!(nu > -0.5)) throw domain_error("inequality_suite: grid requires nu > -1/2");

    const std::vector<Entry> entries = {
        {"xKI",
         [](double nu, double x) {
             return std::pair{x * std::exp(log_k(nu, x) + log_i(nu + 1.0, x)), 0.5};
         },
         nullptr},
        {"xIK",
         [](double nu, double x) {
             return std::pair{x * std::exp(log_i(nu, x) + log_k(nu + 1.0, x)), 1.0};
         },
         nullptr},
        {"KintI",
         [](double nu, double x) {
             return std::pair{std::exp(log_k(nu, x) - nu * std::log(x) + log_int_i0(nu, x)),
                              1.0 / (2.0 * nu + 1.0)};
         },
         nullptr},
        {"IintK",
         [](double nu, double x) {
             const double rhs = std::exp(0.5 * std::log(M_PI) + log_gamma(nu + 0.5) -
                                         std::log(2.0) - log_gamma(nu + 1.0));
             return std::pair{std::exp(log_i(nu, x) - nu * std::log(x) + log_int_k0(nu, x)), rhs};
         },
         nullptr},
        {"xKintI",
         [](double nu, double x) {
             return std::pair{
                 std::exp(log_k(nu, x) - (nu - 1.0) * std::log(x) + log_int_i0(nu, x)),
                 (nu + 1.0) / (2.0 * nu + 1.0)};
         },
         nullptr},
        {"xIintK",
         [](double nu, double x) {
             return std::pair{
                 std::exp(log_i(nu, x) - (nu - 1.0) * std::log(x) + log_int_k0(nu, x)), 1.0};
         },
         nullptr},
        {"xK1intI",
         [](double nu, double x) {
             return std::pair{
                 std::exp(log_k(nu + 1.0, x) - (nu - 1.0) * std::log(x) + log_int_i0(nu, x)),
                 (nu + 1.0) / (2.0 * nu + 1.0)};
         },
         nullptr},
        {"xI1intK",
         [](double nu, double x) {
             return std::pair{
                 std::exp(log_i(nu + 1.0, x) - (nu - 1.0) * std::log(x) + log_int_k0(nu, x)),
                 0.5};
         },
         nullptr},
        {"d3I",
         [](double nu, double x) {
             // d^3/dx^3 (I_nu/x^nu) = (3 I_{nu+2}(x)/x + I_{nu+3}(x))/x^nu < I_nu(x)/x^nu,
             // compared with the common e^{-x} x^{-nu} factor removed
             const double lhs = 3.0 * bessel_i(nu + 2.0, x, true).value() / x +
                                bessel_i(nu + 3.0, x, true).value();
             return std::pair{lhs, bessel_i(nu, x, true).value()};
         },
         nullptr},
        {"dblI",
         [](double nu, double x) {
             // both sides damped by e^{-x} to stay in range at the far end of the grid
             const double rhs = (2.0 * (nu + 2.0) / (2.0 * nu + 1.0)) *
                                std::exp(nu * std::log(x) +
                                         bessel_i(nu + 2.0, x, true).log_abs());
             if (x <= 2.0) {
                 // near-equality region: evaluate the gap by its positive series
                 return std::pair{rhs - dbl_i_gap_series(nu, x), rhs};
             }
             const double lhs = int_i_double_lower(nu, x, true).value();
             return std::pair{lhs, rhs};
         },
         nullptr},
        {"xKmono",
         [](double nu, double x) {
             return std::pair{std::exp(nu * std::log(x) + log_k(nu, x)),
                              std::exp((nu - 1.0) * std::log(2.0) + log_gamma(nu))};
         },
         [](double nu, double) { return nu > 0.0; }},
        {"K0log",
         [](double, double x) {
             return std::pair{std::exp(log_k(0.0, x)), -2.0 * std::log(x)};
         },
         [](double nu, double x) { return nu == 0.0 && x > 0.0 && x < 0.729; }},
    };

    // Several inequalities attain their bound in the x -> 0 limit, where the
    // true slack sits below what double evaluation can resolve (e.g. the
    // Wronskian complement of xIK is O(x^2/nu^2)).  Slacks above -kNoiseFloor
    // are therefore treated as holding; a genuine evaluation bug shows up at
    // macroscopic scale.
    constexpr double kNoiseFloor = 1e-12;

    std::vector<InequalityReport> out;
    for (const auto& e : entries) {
        InequalityReport rep;
        rep.id = e.id;
        for (double nu : nu_grid) {
            for (double x : x_grid) {
                if (e.applies && !e.applies(nu, x)) continue;
                auto [lhs, rhs] = e.eval(nu, x);
                const double slack = (rhs - lhs) / rhs;
                ++rep.points_checked;
                if (slack < rep.min_slack) {
                    rep.min_slack = slack;
                    rep.argmin_nu = nu;
                    rep.argmin_x = x;
                    if (slack < -kNoiseFloor) {
                        rep.holds = false;
                        rep.violation_lhs = lhs;
                        rep.violation_rhs = rhs;
                    }
                }
            }
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace svgstein::sf
