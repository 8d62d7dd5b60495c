// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_CORE_TEST_FUNCTION_HPP
#define SVGSTEIN_CORE_TEST_FUNCTION_HPP

#include <functional>
#include <optional>
#include <vector>

namespace svgstein::stein {

// Test function h for the Stein equation.  The built-in kinds are
//   Indicator(z):           h(x) = 1(x <= z)
//   SmoothedIndicator(a,e): h(x) = e^{-1} int_0^e 1(x+s <= a) ds
//                           (1 below a-e, 0 above a, linear ramp between)
//   Sign:                   h(x) = 1(x >= 0) - 1(x < 0)
//   Sine(a):                h(x) = sin(a x)/a
//   Constant(c)
//   Lipschitz:              arbitrary callable with a known Lipschitz constant
struct TestFunction {
    enum class Kind { Indicator, SmoothedIndicator, Sign, Sine, Constant, Lipschitz };

    Kind kind = Kind::Constant;
    double z = 0.0;    // Indicator threshold
    double a = 0.0;    // SmoothedIndicator corner / Sine frequency
    double eps = 0.0;  // SmoothedIndicator width
    double c = 0.0;    // Constant value
    std::function<double(double)> fn;    // Lipschitz
    std::function<double(double)> dfn;   // its derivative where defined (optional)
    std::optional<double> htilde_sup;    // ||h - Eh(Z)||, filled against a target
    std::optional<double> lip_const;     // ||h'||

    static TestFunction indicator(double z);
    static TestFunction smoothed_indicator(double a, double eps);
    static TestFunction sign();
    static TestFunction sine(double a);
    static TestFunction constant(double c);
    static TestFunction lipschitz(std::function<double(double)> fn, double lip_const,
                                  std::optional<double> htilde_sup = std::nullopt,
                                  std::function<double(double)> dfn = nullptr);

    double operator()(double x) const;
    // one-sided value: side > 0 gives lim_{t->x+} h(t), side < 0 the left limit
    double one_sided(double x, int side) const;
    double derivative(double x) const;  // at smooth points
    bool piecewise_linear() const;
    bool is_lipschitz() const;
    std::vector<double> breakpoints() const;  // discontinuities / kinks of h
};

}  // namespace svgstein::stein

#endif
