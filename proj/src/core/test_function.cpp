// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#include "core/test_function.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace svgstein::stein {

TestFunction TestFunction::indicator(double z) {
    TestFunction h;
    h.kind = Kind::Indicator;
    h.z = z;
    return h;
}

TestFunction TestFunction::smoothed_indicator(double a, double eps) {
    if (!(eps > 0.0)) throw domain_error("smoothed_indicator: eps must be > 0");
    TestFunction h;
    h.kind = Kind::SmoothedIndicator;
    h.a = a;
    h.eps = eps;
    h.lip_const = 1.0 / eps;
    return h;
}

TestFunction TestFunction::sign() {
    TestFunction h;
    h.kind = Kind::Sign;
    return h;
}

TestFunction TestFunction::sine(double a) {
    if (a == 0.0) throw domain_error("sine: frequency must be nonzero");
    TestFunction h;
    h.kind = Kind::Sine;
    h.a = a;
    h.lip_const = 1.0;
    return h;
}

TestFunction TestFunction::constant(double c) {
    TestFunction h;
    h.kind = Kind::Constant;
    h.c = c;
    h.htilde_sup = 0.0;
    h.lip_const = 0.0;
    return h;
}

TestFunction TestFunction::lipschitz(std::function<double(double)> fn, double lip_const,
                                     std::optional<double> htilde_sup,
                                     std::function<double(double)> dfn) {
    if (!fn) throw domain_error("lipschitz: callable required");
    TestFunction h;
    h.kind = Kind::Lipschitz;
    h.fn = std::move(fn);
    h.dfn = std::move(dfn);
    h.lip_const = lip_const;
    h.htilde_sup = htilde_sup;
    return h;
}

double TestFunction::operator()(double x) const {
    switch (kind) {
        case Kind::Indicator: return x <= z ? 1.0 : 0.0;
        case Kind::SmoothedIndicator:
            if (x <= a - eps) return 1.0;
            if (x >= a) return 0.0;
            return (a - x) / eps;
        case Kind::Sign: return x >= 0.0 ? 1.0 : -1.0;
        case Kind::Sine: return std::sin(a * x) / a;
        case Kind::Constant: return c;
        case Kind::Lipschitz: return fn(x);
    }
    return 0.0;
}

double TestFunction::one_sided(double x, int side) const {
    if (kind == Kind::Indicator && x == z) return side > 0 ? 0.0 : 1.0;
    if (kind == Kind::Sign && x == 0.0) return side > 0 ? 1.0 : -1.0;
    return (*this)(x);
}

double TestFunction::derivative(double x) const {
    switch (kind) {
        case Kind::Indicator:
        case Kind::Sign:
        case Kind::Constant: return 0.0;
        case Kind::SmoothedIndicator: return (x > a - eps && x < a) ? -1.0 / eps : 0.0;
        case Kind::Sine: return std::cos(a * x);
        case Kind::Lipschitz:
            if (dfn) return dfn(x);
            {  // central difference fallback
                const double step = 1e-6 * (1.0 + std::fabs(x));
                return (fn(x + step) - fn(x - step)) / (2.0 * step);
            }
    }
    return 0.0;
}

bool TestFunction::piecewise_linear() const {
    return kind == Kind::Indicator || kind == Kind::SmoothedIndicator || kind == Kind::Sign ||
           kind == Kind::Constant;
}

bool TestFunction::is_lipschitz() const { return lip_const.has_value(); }

std::vector<double> TestFunction::breakpoints() const {
    switch (kind) {
        case Kind::Indicator: return {z};
        case Kind::SmoothedIndicator: return {a - eps, a};
        case Kind::Sign: return {0.0};
        default: return {};
    }
}

}  // namespace svgstein::stein
