// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_CORE_BESSEL_HPP
#define SVGSTEIN_CORE_BESSEL_HPP

#include "core/scaled.hpp"

namespace svgstein::sf {

// log Gamma(x), x > 0.  Thin domain-checked wrapper; relative error a few ulp.
double log_gamma(double x);

// Modified Bessel function of the first kind I_nu(x), x >= 0, nu > -1.
// scaled=true returns e^{-x} I_nu(x).
ScaledValue bessel_i(double nu, double x, bool scaled = false);

// Modified Bessel function of the second kind K_nu(x), x > 0, any real nu
// (computed through |nu|, so K_{-nu} == K_nu bit for bit).
// scaled=true returns e^{x} K_nu(x).
ScaledValue bessel_k(double nu, double x, bool scaled = false);

// int_0^x t^{nu+w} I_nu(t) dt for w in {0,1}, nu > -1/2.
// scaled=true returns the integral damped by e^{-x}.
ScaledValue int_i_lower(double nu, double x, int weight_power, bool scaled = false);

// int_x^infty t^{nu+w} K_nu(t) dt for w in {0,1}, nu > -1/2, x >= 0.
// scaled=true returns the tail amplified by e^{+x}.
ScaledValue int_k_tail(double nu, double x, int weight_power, bool scaled = false);

// int_a^b t^{nu+w} K_nu(t) dt, 0 <= a <= b, scaled by e^{+a} when scaled=true.
ScaledValue int_k_segment(double nu, double a, double b, int weight_power, bool scaled = false);

// int_0^x int_0^u t^nu I_nu(t) dt du = int_0^x (x-t) t^nu I_nu(t) dt, nu > -1/2,
// summed termwise (no cancellation).  scaled=true damps by e^{-x}.
ScaledValue int_i_double_lower(double nu, double x, bool scaled = false);

// Plain-double conveniences for the scaled forms (hot paths).
double bessel_i_scaled_d(double nu, double x);  // e^{-x} I_nu(x)
double bessel_k_scaled_d(double nu, double x);  // e^{+x} K_nu(x)

// I_nu(x) K_{nu+1}(x) + I_{nu+1}(x) K_nu(x) - 1/x, as a relative residual.
double wronskian_residual(double nu, double x);

}  // namespace svgstein::sf

#endif
