// SPDX-FileCopyrightText: 2026 svgstein developers
//
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end.  Talks to the library exclusively through the C API
// in svgstein.h.  Exit codes: 0 success, 1 error, 2 bound violation beyond
// tolerance.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "svgstein.h"

namespace {

int die(int rc) {
    std::cerr << "error: " << svgstein_last_error() << "\n";
    return rc == SVGSTEIN_OK ? 1 : 1;
}

struct Sink {
    std::string path;
    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) file.open(path);
        return file;
    }
    std::ofstream file;
};

std::vector<double> parse_grid(const std::string& spec) {
    // "lo:hi:n" inclusive linear grid
    std::vector<double> xs;
    double lo, hi;
    int n;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 1)
        throw CLI::ValidationError("--grid expects lo:hi:n");
    for (int i = 0; i < n; ++i)
        xs.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1.0));
    return xs;
}

std::vector<double> read_sample(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open sample file " + path);
    std::vector<double> xs;
    double v;
    while (in >> v) xs.push_back(v);
    if (xs.empty()) throw CLI::ValidationError("sample file is empty: " + path);
    return xs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"svgstein: symmetric variance-gamma Stein toolkit"};
    app.require_subcommand(1);

    // ---------------- dist ----------------
    auto* dist = app.add_subcommand("dist", "SVG/VG density, cdf, sampling, moments");
    std::string dist_op = "pdf", dist_grid = "-5:5:101", dist_out;
    double d_r = 2, d_sigma = 1, d_mu = 0, d_theta = 0, d_k = 1, d_x = 0;
    bool dist_have_x = false;
    std::size_t d_n = 1000;
    std::uint64_t d_seed = 1;
    dist->add_option("op", dist_op, "pdf|cdf|quantile|sample|moment")->required();
    dist->add_option("--r", d_r);
    dist->add_option("--sigma", d_sigma);
    dist->add_option("--mu", d_mu);
    dist->add_option("--theta", d_theta, "nonzero selects the VG family");
    dist->add_option("--k", d_k, "absolute-moment order");
    auto* optx = dist->add_option("--x", d_x, "single evaluation point");
    dist->add_option("--grid", dist_grid, "lo:hi:n evaluation grid");
    dist->add_option("--n", d_n, "sample size");
    dist->add_option("--seed", d_seed);
    dist->add_option("--out", dist_out, "output file (default stdout)");
    dist->callback([&] {
        dist_have_x = optx->count() > 0;
        Sink sink{dist_out};
        auto& os = sink.stream();
        os.precision(17);
        if (dist_op == "sample") {
            std::vector<double> buf(d_n);
            int rc = d_theta == 0.0
                         ? svgstein_svg_sample(d_r, d_sigma, d_mu, d_n, d_seed, buf.data())
                         : svgstein_vg_sample(d_r, d_theta, d_sigma, d_mu, d_n, d_seed,
                                              buf.data());
            if (rc != SVGSTEIN_OK) throw CLI::RuntimeError(die(rc));
            for (double v : buf) os << v << "\n";
            return;
        }
        if (dist_op == "moment") {
            double out;
            int rc = svgstein_svg_absolute_moment(d_r, d_sigma, d_k, &out);
            if (rc != SVGSTEIN_OK) throw CLI::RuntimeError(die(rc));
            os << "k,value\n" << d_k << "," << out << "\n";
            return;
        }
        std::vector<double> xs =
            dist_have_x ? std::vector<double>{d_x} : parse_grid(dist_grid);
        os << "x,value\n";
        for (double x : xs) {
            double out;
            int rc;
            if (dist_op == "pdf")
                rc = d_theta == 0.0 ? svgstein_svg_pdf(d_r, d_sigma, d_mu, x, &out)
                                    : svgstein_vg_pdf(d_r, d_theta, d_sigma, d_mu, x, &out);
            else if (dist_op == "cdf")
                rc = svgstein_svg_cdf(d_r, d_sigma, d_mu, x, &out);
            else if (dist_op == "quantile")
                rc = svgstein_svg_quantile(d_r, d_sigma, d_mu, x, &out);
            else
                throw CLI::ValidationError("unknown dist op " + dist_op);
            if (rc != SVGSTEIN_OK) throw CLI::RuntimeError(die(rc));
            os << x << "," << out << "\n";
        }
    });

    // ---------------- stein ----------------
    auto* stein = app.add_subcommand("stein", "Stein solution evaluation and bound verification");
    std::string stein_op = "eval", stein_h = "sign", stein_grid = "-5:5:101", stein_out;
    double s_r = 2, s_sigma = 1, s_mu = 0, s_a = 0, s_b = 0.1, s_tol = 1e-6;
    stein->add_option("op", stein_op, "eval|verify")->required();
    stein->add_option("--r", s_r);
    stein->add_option("--sigma", s_sigma);
    stein->add_option("--mu", s_mu);
    stein->add_option("--h", stein_h, "sign|indicator|smoothed|sine|constant");
    stein->add_option("--a", s_a, "threshold/corner/frequency/constant");
    stein->add_option("--eps", s_b, "smoothed-indicator width");
    stein->add_option("--grid", stein_grid);
    stein->add_option("--tol", s_tol, "verification ratio tolerance");
    stein->add_option("--out", stein_out);
    stein->callback([&] {
        Sink sink{stein_out};
        auto& os = sink.stream();
        os.precision(17);
        if (stein_op == "verify") {
            char* json = nullptr;
            int rc = svgstein_stein_verify_json(s_r, s_sigma, s_mu, s_tol, &json);
            if (rc != SVGSTEIN_OK) throw CLI::RuntimeError(die(rc));
            os << json << "\n";
            bool bad = std::string(json).find("\"ok\": false") != std::string::npos;
            svgstein_string_free(json);
            if (bad) throw CLI::RuntimeError(2);
            return;
        }
        int kind;
        if (stein_h == "indicator") kind = 0;
        else if (stein_h == "smoothed") kind = 1;
        else if (stein_h == "sign") kind = 2;
        else if (stein_h == "sine") kind = 3;
        else if (stein_h == "constant") kind = 4;
        else throw CLI::ValidationError("unknown test function " + stein_h);
        svgstein_stein* s = svgstein_stein_create(s_r, s_sigma, s_mu, kind, s_a, s_b);
        if (!s) throw CLI::RuntimeError(die(1));
        os << "x,f,f1,f2,residual\n";
        for (double x : parse_grid(stein_grid)) {
            double f = 0, f1 = 0, f2 = 0, res = 0;
            if (svgstein_stein_solve(s, x, &f) != SVGSTEIN_OK ||
                svgstein_stein_d1(s, x, &f1) != SVGSTEIN_OK) {
                svgstein_stein_free(s);
                throw CLI::RuntimeError(die(1));
            }
            if (svgstein_stein_d2(s, x, &f2) != SVGSTEIN_OK)
                f2 = std::numeric_limits<double>::quiet_NaN();
            if (svgstein_stein_residual(s, x, &res) != SVGSTEIN_OK)
                res = std::numeric_limits<double>::quiet_NaN();
            os << x << "," << f << "," << f1 << "," << f2 << "," << res << "\n";
        }
        svgstein_stein_free(s);
    });

    // ---------------- transform ----------------
    auto* tr = app.add_subcommand("transform", "zero-bias / centered-equilibrium transforms");
    std::string tr_op = "sample", tr_spec = "svg", tr_kind = "equilibrium", tr_grid = "-3:3:121",
                tr_out;
    double t_r = 2, t_sigma = 1;
    std::size_t t_n = 100000;
    std::uint64_t t_seed = 1;
    tr->add_option("op", tr_op, "sample|density")->required();
    tr->add_option("--spec", tr_spec, "svg|rademacher");
    tr->add_option("--kind", tr_kind, "zero|equilibrium");
    tr->add_option("--r", t_r, "SVG scale / equilibrium order");
    tr->add_option("--sigma", t_sigma);
    tr->add_option("--n", t_n);
    tr->add_option("--seed", t_seed);
    tr->add_option("--grid", tr_grid);
    tr->add_option("--out", tr_out);
    tr->callback([&] {
        Sink sink{tr_out};
        auto& os = sink.stream();
        os.precision(17);
        svgstein_spec* spec = nullptr;
        if (tr_spec == "svg") spec = svgstein_spec_svg(t_r, t_sigma);
        else if (tr_spec == "rademacher") {
            const double vals[] = {-1.0, 1.0}, probs[] = {0.5, 0.5};
            spec = svgstein_spec_discrete(vals, probs, 2);
        } else
            throw CLI::ValidationError("unknown spec " + tr_spec);
        if (!spec) throw CLI::RuntimeError(die(1));
        int rc = SVGSTEIN_OK;
        if (tr_op == "sample") {
            std::vector<double> buf(t_n);
            rc = tr_kind == "zero"
                     ? svgstein_zero_bias_sample(spec, t_n, t_seed, buf.data())
                     : svgstein_equilibrium_sample(spec, t_r, t_n, t_seed, buf.data());
            if (rc == SVGSTEIN_OK)
                for (double v : buf) os << v << "\n";
        } else {
            os << "x,density\n";
            for (double x : parse_grid(tr_grid)) {
                double out;
                rc = tr_kind == "zero" ? svgstein_zero_bias_pdf(spec, x, &out)
                                       : svgstein_equilibrium_pdf(spec, t_r, x, &out);
                if (rc != SVGSTEIN_OK) break;
                os << x << "," << out << "\n";
            }
        }
        svgstein_spec_free(spec);
        if (rc != SVGSTEIN_OK) throw CLI::RuntimeError(die(rc));
    });

    // ---------------- distance ----------------
    auto* di = app.add_subcommand("distance", "empirical metrics against an SVG target");
    std::string di_metric = "kolmogorov", di_sample, di_out;
    double di_r = 2, di_sigma = 1, di_mu = 0;
    di->add_option("--metric", di_metric, "kolmogorov|wasserstein|bounded_wasserstein");
    di->add_option("--sample", di_sample, "file, one value per line")->required();
    di->add_option("--r", di_r);
    di->add_option("--sigma", di_sigma);
    di->add_option("--mu", di_mu);
    di->add_option("--out", di_out);
    di->callback([&] {
        auto xs = read_sample(di_sample);
        double out;
        int rc;
        if (di_metric == "kolmogorov")
            rc = svgstein_kolmogorov_svg(xs.data(), xs.size(), di_r, di_sigma, di_mu, &out);
        else if (di_metric == "wasserstein")
            rc = svgstein_wasserstein_svg(xs.data(), xs.size(), di_r, di_sigma, di_mu, &out);
        else if (di_metric == "bounded_wasserstein")
            rc = svgstein_bounded_wasserstein_svg(xs.data(), xs.size(), di_r, di_sigma, di_mu,
                                                  &out);
        else
            throw CLI::ValidationError("unknown metric " + di_metric);
        if (rc != SVGSTEIN_OK) throw CLI::RuntimeError(die(rc));
        Sink sink{di_out};
        auto& os = sink.stream();
        os.precision(17);
        os << "metric,n,value\n" << di_metric << "," << xs.size() << "," << out << "\n";
    });

    // ---------------- bound ----------------
    auto* bo = app.add_subcommand("bound", "closed-form error-bound calculators (JSON out)");
    std::string bo_id, bo_out;
    std::vector<std::string> bo_params;
    bo->add_option("--id", bo_id, "formula id (see svgstein.h)")->required();
    bo->add_option("--param,params", bo_params, "key=value inputs");
    bo->add_option("--out", bo_out);
    bo->callback([&] {
        std::ostringstream kv;
        for (const auto& p : bo_params) kv << p << "\n";
        char* json = nullptr;
        int rc = svgstein_bound_json(bo_id.c_str(), kv.str().c_str(), &json);
        if (rc != SVGSTEIN_OK) throw CLI::RuntimeError(die(rc));
        Sink sink{bo_out};
        sink.stream() << json << "\n";
        svgstein_string_free(json);
    });

    // ---------------- experiment ----------------
    auto* ex = app.add_subcommand("experiment", "seeded Monte Carlo bound-verification runs");
    std::string ex_config, ex_out;
    std::vector<std::string> ex_params;
    ex->add_option("--config", ex_config, "flat key=value config file");
    ex->add_option("params", ex_params, "key=value overrides (e.g. experiment=d2 m=1000)");
    ex->add_option("--out", ex_out, "output path (default stdout)");
    ex->callback([&] {
        std::ostringstream kv;
        if (!ex_config.empty()) {
            std::ifstream in(ex_config);
            if (!in) throw CLI::ValidationError("cannot open config " + ex_config);
            kv << in.rdbuf() << "\n";
        }
        for (const auto& p : ex_params) kv << p << "\n";
        char* output = nullptr;
        int violation = 0;
        int rc = svgstein_experiment_run(kv.str().c_str(), &output, &violation);
        if (rc != SVGSTEIN_OK) throw CLI::RuntimeError(die(rc));
        Sink sink{ex_out};
        sink.stream() << output;
        svgstein_string_free(output);
        if (violation) throw CLI::RuntimeError(2);
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}
