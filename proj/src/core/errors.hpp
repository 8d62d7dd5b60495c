// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_CORE_ERRORS_HPP
#define SVGSTEIN_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace svgstein {

// Argument outside the mathematical domain of an operation.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Evaluation point sits on a genuine singularity of the quantity requested
// (e.g. the density of SVG(r<=1) at its mode).
class singularity_error : public std::runtime_error {
public:
    explicit singularity_error(const std::string& what) : std::runtime_error(what) {}
};

// Result not representable without exponential scaling.
class overflow_error : public std::range_error {
public:
    explicit overflow_error(const std::string& what) : std::range_error(what) {}
};

// Adaptive quadrature failed to reach the requested tolerance.  Carries the
// tolerance actually achieved so callers can decide whether to proceed.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double achieved_tol)
        : std::runtime_error(what + " (achieved tolerance " + std::to_string(achieved_tol) + ")"),
          achieved(achieved_tol) {}
    double achieved;
};

}  // namespace svgstein

#endif
