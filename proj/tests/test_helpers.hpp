// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0

#ifndef SVGSTEIN_TESTS_HELPERS_HPP
#define SVGSTEIN_TESTS_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

struct BesselRow {
    double nu, x;
    double i_value, k_value;        // double-rounded oracle values
    long double i_long, k_long;     // extra digits for residual slack
};

inline std::vector<BesselRow> load_bessel_fixture() {
    const std::string path = std::string(SVGSTEIN_FIXTURE_DIR) + "/bessel_iknu.csv";
    std::ifstream in(path);
    std::vector<BesselRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        BesselRow r{};
        std::string iv, kv;
        ls >> r.nu >> r.x >> iv >> kv;
        r.i_long = std::strtold(iv.c_str(), nullptr);
        r.k_long = std::strtold(kv.c_str(), nullptr);
        r.i_value = static_cast<double>(r.i_long);
        r.k_value = static_cast<double>(r.k_long);
        rows.push_back(r);
    }
    return rows;
}

inline double ks_vs_cdf(std::vector<double> s, const std::function<double(double)>& cdf) {
    std::sort(s.begin(), s.end());
    const double n = static_cast<double>(s.size());
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double f = cdf(s[i]);
        d = std::max({d, std::fabs(f - (i + 1) / n), std::fabs(f - i / n)});
    }
    return d;
}

inline double two_sample_ks(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) ++i;
        else ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / a.size() -
                                  static_cast<double>(j) / b.size()));
    }
    return d;
}

inline double mean_of(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m += x;
    return m / static_cast<double>(v.size());
}

inline double variance_of(const std::vector<double>& v) {
    const double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

}  // namespace testutil

#endif
