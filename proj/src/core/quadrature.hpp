// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_CORE_QUADRATURE_HPP
#define SVGSTEIN_CORE_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace svgstein {

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-11;
    int max_depth = 48;
    bool throw_on_failure = true;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // estimated absolute error
    long evaluations = 0;
    bool converged = true;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7,K15) on [a, b].
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opt = {});

// Same, but with the interval pre-split at the given interior points
// (discontinuities, kinks, integrable endpoint singularities nearby).
QuadResult integrate_segments(const Integrand& f, const std::vector<double>& points,
                              const QuadOptions& opt = {});

// Geometric ladder of panels from `a` toward a singular left endpoint at 0:
// [a, 2a], [2a, 4a], ... capped at b, each panel integrated adaptively.  The
// integrand may blow up (integrably) at 0; it is never evaluated at 0.
QuadResult integrate_graded_left(const Integrand& f, double a, double b,
                                 const QuadOptions& opt = {});

}  // namespace svgstein

#endif
