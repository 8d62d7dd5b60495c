// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0
//
// Regenerates tests/fixtures/bessel_iknu.csv: reference values of I_nu(x) and
// K_nu(x) at 25 significant digits, computed with Boost.Math over 50-digit
// floating point.  This oracle is entirely independent of the library's own
// evaluation path.
//
//   bessel_fixture_gen [out.csv]

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <vector>

using mp = boost::multiprecision::cpp_bin_float_50;

int main(int argc, char** argv) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (argc > 1) {
        file.open(argv[1]);
        if (!file) {
            std::fprintf(stderr, "cannot open %s\n", argv[1]);
            return 1;
        }
        os = &file;
    }

    // acceptance orders plus shifted orders exercising the upward recurrences
    const std::vector<double> nus = {-0.45, -0.25, 0.0, 0.5,  1.0,  2.5,  5.0, 12.0,
                                     24.5,  0.55,  1.5, 3.5,  6.0,  13.0, 25.5, 26.5};
    const int n_x = 61;
    const double lo = 1e-6, hi = 500.0;

    *os << "# nu,x,I_nu(x),K_nu(x)  (Boost.Math cpp_bin_float_50; 25 significant digits)\n";
    char xbuf[40];
    for (double nu : nus) {
        for (int i = 0; i < n_x; ++i) {
            const double x =
                std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n_x - 1.0));
            std::snprintf(xbuf, sizeof xbuf, "%.17g", x);
            const mp xm(xbuf);  // exact double value
            mp iv, kv;
            try {
                iv = boost::math::cyl_bessel_i(mp(nu), xm);
            } catch (...) {
                iv = 0;  // I_nu diverges only at x = 0 for nu < 0; not on this grid
            }
            kv = boost::math::cyl_bessel_k(mp(nu), xm);
            *os << std::setprecision(17) << nu << ',' << xbuf << ','
                << std::setprecision(25) << iv << ',' << kv << "\n";
        }
    }
    return 0;
}
