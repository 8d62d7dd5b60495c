// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_CORE_STEIN_VERIFY_HPP
#define SVGSTEIN_CORE_STEIN_VERIFY_HPP

#include <string>
#include <vector>

#include "core/stein.hpp"

namespace svgstein::stein {

// One uniform bound on the Stein solution, verified as a sup over the test
// family and evaluation grid of (measured quantity) / (bound right-hand side).
struct BoundCheck {
    std::string bound_id;
    double sup_ratio = 0.0;
    double argmax_x = 0.0;
    std::string argmax_h;
    bool ok = true;                  // sup_ratio <= 1 + tol
    bool numerical_suspect = false;  // ODE residual also fails at the argmax
    long points = 0;
};

// The verified catalogue (norms of f and its derivatives, x-weighted norms,
// T_r norms, and the indicator-test-function specialisations):
//   sup|f|        <= (1/sigma)(1/r + pi Gamma(r/2)/(2 Gamma((r+1)/2))) ||ht||
//   sup|f'|       <= (2/(sigma^2 r)) ||ht||
//   sup|xf|       <= (3/2 + 1/(2r)) ||ht||
//   sup|xf'|      <= (1/sigma)(1 + 1/(2r)) ||ht||
//   sup|xf''|     <= (1/(2 sigma^2))(9 + 1/r) ||ht||
//   s2|T_r f'|    <= (5/2 + 1/(2r)) ||ht||
//   sup|f|        <= (7/2) ||h'||
//   sup|f'|       <= (9/(2 sigma))(1/(r+1) + pi Gamma((r+1)/2)/(2 Gamma(r/2+1))) ||h'||
//   sup|f''|      <= (9/(sigma^2 (r+1))) ||h'||
//   sup|xf'|      <= (9/2)(3/2 + 1/(2(r+1))) ||h'||
//   sup|xf''|     <= (9/(2 sigma))(1 + 1/(2(r+1))) ||h'||
//   sup|xf'''|    <= (9/(4 sigma^2))(9 + 1/(r+1)) ||h'||
//   s2|(T_rf')'|  <= (9/4)(5 + 1/(r+1)) ||h'||
// plus the six indicator specialisations with the ||ht|| <= 1 constants.
std::vector<BoundCheck> verify_solution_bounds(const SvgParams& params,
                                               const std::vector<TestFunction>& family,
                                               const std::vector<double>& x_grid,
                                               double tol = 1e-6);

// Sign, Indicator(z) over seven thresholds, two smoothed indicators, and
// three sine frequencies.
std::vector<TestFunction> default_test_family();

// symmetric log-spaced grid (canonical units scaled into x-space)
std::vector<double> default_verification_grid(const SvgParams& params, int per_side = 28);

}  // namespace svgstein::stein

#endif
