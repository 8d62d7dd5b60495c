// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_CORE_INEQUALITIES_HPP
#define SVGSTEIN_CORE_INEQUALITIES_HPP

#include <string>
#include <vector>

namespace svgstein::sf {

// One catalogued inequality between Bessel-integral expressions, evaluated on
// a (nu, x) grid.  `min_slack` is the smallest (rhs - lhs)/rhs observed;
// strict positivity at every applicable grid point is the pass condition.
struct InequalityReport {
    std::string id;
    double min_slack = 1.0;
    double argmin_nu = 0.0;
    double argmin_x = 0.0;
    long points_checked = 0;
    bool holds = true;
    // worst offender when holds == false
    double violation_lhs = 0.0;
    double violation_rhs = 0.0;
};

// Evaluates the inequality catalogue:
//   xKI:        x K_nu(x) I_{nu+1}(x)                         < 1/2
//   xIK:        x I_nu(x) K_{nu+1}(x)                         < 1
//   KintI:      (K_nu(x)/x^nu) int_0^x t^nu I_nu dt           <= 1/(2nu+1)
//   IintK:      (I_nu(x)/x^nu) int_x^inf t^nu K_nu dt         <= sqrt(pi)Gamma(nu+1/2)/(2Gamma(nu+1))
//   xKintI:     (K_nu(x)/x^{nu-1}) int_0^x t^nu I_nu dt       < (nu+1)/(2nu+1)
//   xIintK:     (I_nu(x)/x^{nu-1}) int_x^inf t^nu K_nu dt     < 1
//   xK1intI:    (K_{nu+1}(x)/x^{nu-1}) int_0^x t^nu I_nu dt   < (nu+1)/(2nu+1)
//   xI1intK:    (I_{nu+1}(x)/x^{nu-1}) int_x^inf t^nu K_nu dt < 1/2
//   d3I:        3 I_{nu+2}(x)/x + I_{nu+3}(x)                 < I_nu(x)
//   dblI:       int_0^x (x-t) t^nu I_nu dt                    <= (2(nu+2)/(2nu+1)) x^nu I_{nu+2}(x)
//   xKmono:     x^nu K_nu(x)                                  <= 2^{nu-1} Gamma(nu)   [nu > 0]
//   K0log:      K_0(x)                                        < -2 log x              [0 < x < 0.729]
// Requires every nu in the grid > -1/2.
std::vector<InequalityReport> inequality_suite(const std::vector<double>& nu_grid,
                                               const std::vector<double>& x_grid);

// Default acceptance grids: nu in {-0.45,-0.25,0,0.5,1,2.5,5,12,24.5},
// x log-spaced on [1e-6, 500] with `n_x` points.
std::vector<double> default_nu_grid();
std::vector<double> default_x_grid(int n_x = 240);

}  // namespace svgstein::sf

#endif
