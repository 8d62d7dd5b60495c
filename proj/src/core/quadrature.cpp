// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#include "core/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace svgstein {
namespace {

// Gauss-Kronrod (7,15) nodes/weights on [-1,1], positive half (symmetric).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    double k15 = 0.0;
    double err = 0.0;
};

PanelResult gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);

    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        resk += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) resg += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    PanelResult r;
    r.k15 = resk * h;
    // standard QUADPACK-style error estimate would rescale; plain |K-G| is
    // conservative enough for our tolerances
    r.err = std::fabs((resk - resg) * h);
    return r;
}

struct Panel {
    double a, b, value, err;
    int depth;
};

QuadResult adaptive(const Integrand& f, std::vector<Panel> work, const QuadOptions& opt) {
    QuadResult out;
    double total = 0.0, total_err = 0.0;
    for (auto& p : work) {
        auto r = gk15(f, p.a, p.b);
        p.value = r.k15;
        p.err = r.err;
        total += r.k15;
        total_err += r.err;
        out.evaluations += 15;
    }

    auto tol = [&](double t) { return std::max(opt.abs_tol, opt.rel_tol * std::fabs(t)); };

    // refine worst panel until the global estimate meets tolerance
    while (total_err > tol(total)) {
        auto worst = std::max_element(work.begin(), work.end(),
                                      [](const Panel& x, const Panel& y) { return x.err < y.err; });
        if (worst->depth >= opt.max_depth || worst->b - worst->a <= 1e-300) {
            if (opt.throw_on_failure)
                throw quadrature_error("adaptive quadrature stalled", total_err);
            out.converged = false;
            break;
        }
        Panel p = *worst;
        work.erase(worst);
        total -= p.value;
        total_err -= p.err;
        const double m = 0.5 * (p.a + p.b);
        for (auto [lo, hi] : {std::pair{p.a, m}, std::pair{m, p.b}}) {
            auto r = gk15(f, lo, hi);
            work.push_back({lo, hi, r.k15, r.err, p.depth + 1});
            total += r.k15;
            total_err += r.err;
            out.evaluations += 15;
        }
    }

    out.value = total;
    out.error = total_err;
    return out;
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opt) {
    if (a == b) return {};
    return adaptive(f, {{a, b, 0.0, 0.0, 0}}, opt);
}

QuadResult integrate_segments(const Integrand& f, const std::vector<double>& points,
                              const QuadOptions& opt) {
    std::vector<double> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Panel> panels;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i + 1] > pts[i]) panels.push_back({pts[i], pts[i + 1], 0.0, 0.0, 0});
    if (panels.empty()) return {};
    return adaptive(f, std::move(panels), opt);
}

QuadResult integrate_graded_left(const Integrand& f, double a, double b, const QuadOptions& opt) {
    if (!(a > 0.0) || b <= a) return integrate(f, a, b, opt);
    std::vector<Panel> panels;
    double lo = a;
    while (lo < b) {
        double hi = std::min(b, 2.0 * lo);
        panels.push_back({lo, hi, 0.0, 0.0, 0});
        lo = hi;
    }
    return adaptive(f, std::move(panels), opt);
}

}  // namespace svgstein
