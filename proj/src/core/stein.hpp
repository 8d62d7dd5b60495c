// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_CORE_STEIN_HPP
#define SVGSTEIN_CORE_STEIN_HPP

#include <vector>

#include "core/quadrature.hpp"
#include "core/svg.hpp"
#include "core/test_function.hpp"

namespace svgstein::stein {

using dist::SvgParams;

struct SteinQuadSettings {
    double abs_tol = 1e-13;
    double rel_tol = 5e-11;
    int max_depth = 44;
};

// Evaluator for the solution f of
//   sigma^2 (x-mu) f''(x) + sigma^2 r f'(x) - (x-mu) f(x) = h(x) - E h(Z),
// Z ~ SVG(r, sigma, mu).  Internally everything is reduced to the canonical
// SVG(r,1,0) equation; general parameters enter through
// f(x) = fhat((x-mu)/sigma)/sigma and the reflection fhat(-y) = -fhat_ref(y)
// taken with the mirrored test function.
class SteinSolution {
public:
    SteinSolution(SvgParams params, TestFunction h, SteinQuadSettings quad = {});

    const SvgParams& params() const { return params_; }
    const TestFunction& test_function() const { return h_; }
    double h_mean() const { return h_mean_; }           // E h(Z)
    double htilde(double x) const { return h_(x) - h_mean_; }
    double htilde_sup() const { return htilde_sup_; }   // ||h - Eh||, +inf if unknown

    // f(x); at x == mu returns the x -> mu+ limit (f is continuous there).
    double solve(double x) const;
    // f'(x); at x == mu returns htilde(mu)/(sigma^2 r) using h(mu) as defined.
    double solve_d1(double x) const;
    // one-sided limit of f' as x -> mu from the given side (side > 0: from above)
    double solve_d1_limit(int side) const;
    // f''(x) from the rearranged Stein equation; throws domain_error at x = mu.
    double solve_d2(double x) const;

    // sigma^2 T_r f'(x) = sigma^2 ((x-mu) f''(x) + r f'(x)).  Assembled from the
    // differentiated integral representation; satisfies
    // sigma^2 T_r f' = htilde + (x-mu) f.  Independence checks live in
    // residual() and in the quadrature oracles of the test suite.
    double apply_t_r(double x) const;

    // Stein ODE residual with f'' replaced by a central difference of f'
    // (diagnostic; the ODE-identity f'' would make the residual vanish by
    // construction).
    double residual(double x) const;

    struct Eval {
        double f = 0.0;
        double d1 = 0.0;
        double d2 = 0.0;        // ODE identity; NaN at x = mu
        double tr = 0.0;        // sigma^2 T_r f' via direct representation
        double xf3 = 0.0;       // (x-mu) f'''(x) via the differentiated equation
        double htilde = 0.0;
    };
    Eval evaluate(double x) const;

private:
    struct PwSeg {
        double lo, hi, c0, c1;  // htilde-hat(t) = c0 + c1 t on (lo, hi)
    };

    struct Parts {              // canonical pieces at y >= 0
        double abar;            // e^{-y} int_0^y t^nu I_nu htilde
        double bbar;            // e^{+y} int_y^inf t^nu K_nu htilde
        double log_ih, log_i1h; // log e^{-y}I_nu(y), e^{-y}I_{nu+1}(y)
        double log_kh, log_k1h; // log e^{+y}K_nu(y), e^{+y}K_{nu+1}(y)
    };

    double canonical_mean() const;
    std::vector<PwSeg> build_segments(bool reflected) const;
    double hcan(double t, bool reflected) const;   // canonical htilde-hat
    double abar_piecewise(double y, const std::vector<PwSeg>& segs) const;
    double bbar_piecewise(double y, const std::vector<PwSeg>& segs) const;
    double abar_generic(double y, bool reflected) const;
    double bbar_generic(double y, bool reflected) const;
    Parts parts_at(double y, bool reflected) const;

    SvgParams params_;
    TestFunction h_;
    SteinQuadSettings quad_;
    double nu_;
    double h_mean_ = 0.0;
    double htilde_sup_ = 0.0;
    bool piecewise_ = false;
    std::vector<PwSeg> segs_pos_, segs_neg_;
    std::vector<double> break_pos_, break_neg_;  // canonical breakpoints (generic path)
    double tail_pad_ = 60.0;
};

}  // namespace svgstein::stein

#endif
