// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_CORE_SCALED_HPP
#define SVGSTEIN_CORE_SCALED_HPP

#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace svgstein {

// value = mantissa * exp(log_scale).  Mantissa is kept in [1/e, e) by
// magnitude (or exactly zero), so quantities like I_nu(x) ~ e^x remain
// representable far beyond double range.
struct ScaledValue {
    double mantissa = 0.0;
    double log_scale = 0.0;

    static ScaledValue zero() { return {0.0, 0.0}; }

    static ScaledValue from(double v) {
        if (v == 0.0) return zero();
        const double k = std::log(std::fabs(v));
        return {v * std::exp(-k), k};
    }

    // signed mantissa together with a log already in hand
    static ScaledValue from_log(double signed_mantissa, double log_scale) {
        if (signed_mantissa == 0.0) return zero();
        ScaledValue s{signed_mantissa, log_scale};
        s.normalize();
        return s;
    }

    void normalize() {
        if (mantissa == 0.0) { log_scale = 0.0; return; }
        const double k = std::log(std::fabs(mantissa));
        if (std::fabs(k) > 1.0) {
            mantissa *= std::exp(-k);
            log_scale += k;
        }
    }

    bool is_zero() const { return mantissa == 0.0; }
    double sign() const { return mantissa > 0 ? 1.0 : (mantissa < 0 ? -1.0 : 0.0); }

    double log_abs() const {
        if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
        return std::log(std::fabs(mantissa)) + log_scale;
    }

    // collapses to a plain double; returns +-inf on overflow, 0 on underflow
    double value() const { return mantissa * std::exp(log_scale); }

    double value_checked() const {
        double v = value();
        if (!is_zero() && !std::isfinite(v))
            throw overflow_error("scaled value exceeds double range; request the scaled form");
        return v;
    }

    ScaledValue shifted(double dlog) const {
        if (mantissa == 0.0) return zero();
        return {mantissa, log_scale + dlog};
    }

    friend ScaledValue operator*(const ScaledValue& a, const ScaledValue& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return from_log(a.mantissa * b.mantissa, a.log_scale + b.log_scale);
    }

    friend ScaledValue operator*(const ScaledValue& a, double c) {
        if (a.is_zero() || c == 0.0) return zero();
        return from_log(a.mantissa * c, a.log_scale);
    }

    friend ScaledValue operator/(const ScaledValue& a, const ScaledValue& b) {
        return from_log(a.mantissa / b.mantissa, a.log_scale - b.log_scale);
    }

    friend ScaledValue operator+(const ScaledValue& a, const ScaledValue& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.log_scale >= b.log_scale)
            return from_log(a.mantissa + b.mantissa * std::exp(b.log_scale - a.log_scale),
                            a.log_scale);
        return from_log(b.mantissa + a.mantissa * std::exp(a.log_scale - b.log_scale),
                        b.log_scale);
    }

    friend ScaledValue operator-(const ScaledValue& a, const ScaledValue& b) {
        return a + ScaledValue{-b.mantissa, b.log_scale};
    }
};

}  // namespace svgstein

#endif
